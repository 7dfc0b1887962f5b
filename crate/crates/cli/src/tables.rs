use clap::ValueEnum;
use rayon::prelude::*;

use derinv::ffield::FpPoly;
use derinv::invariants::{factor_int, rho, rho_prime_divisors};
use derinv::shalev::{h_np, pp_element};
use derinv::Result;

use crate::output::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// rho_n and its factorization for n <= 11, 6 not dividing n
    RhoSmall,
    /// factored rho_n for n = 6, 12, ..., 36
    RhoSix,
    /// periods of h(t^2 - t) for six irreducible h over F_2
    Pp2,
    /// pairs (n, p) with n <= 12 in B_p, p ranging over primes dividing rho_n
    NpScan,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::RhoSmall => "rho-small",
            Which::RhoSix => "rho-six",
            Which::Pp2 => "pp2",
            Which::NpScan => "np-scan",
        }
    }
}

const PP2_ROWS: [&str; 6] = [
    "t+1",
    "t^3+t+1",
    "t^4+t^3+t^2+t+1",
    "t^5+t^2+1",
    "t^7+t+1",
    "t^9+t^4+t^2+t+1",
];

/// Evaluate rows in parallel; the result keeps input order.
fn rows<T: Sync, F>(items: &[T], f: F) -> Result<Vec<Vec<String>>>
where
    F: Fn(&T) -> Result<Vec<Vec<String>>> + Sync + Send,
{
    let parts: Vec<Result<Vec<Vec<String>>>> = items.par_iter().map(f).collect();
    Ok(parts.into_iter().collect::<Result<Vec<_>>>()?.concat())
}

pub fn build(which: Which) -> Result<Table> {
    match which {
        Which::RhoSmall => {
            let ns: Vec<u64> = (1..=11).filter(|n| n % 6 != 0).collect();
            Ok(Table {
                headers: vec!["n", "rho_n", "prime factors"],
                rows: rows(&ns, |&n| {
                    let r = rho(n)?;
                    let f = factor_int(&r)?;
                    Ok(vec![vec![n.to_string(), r.to_string(), f.to_string()]])
                })?,
            })
        }
        Which::RhoSix => {
            let ns: Vec<u64> = (1..=6).map(|i| 6 * i).collect();
            Ok(Table {
                headers: vec!["n", "rho_n"],
                rows: rows(&ns, |&n| {
                    let f = factor_int(&rho(n)?)?;
                    Ok(vec![vec![n.to_string(), f.to_string()]])
                })?,
            })
        }
        Which::Pp2 => Ok(Table {
            headers: vec!["h", "per(h(t^2-t))"],
            rows: rows(&PP2_ROWS, |&h| {
                let poly = FpPoly::from_int_poly(&derinv::parse_poly(h)?, 2);
                Ok(vec![vec![poly.to_expr('t'), pp_element(&poly)?.to_string()]])
            })?,
        }),
        Which::NpScan => {
            let ns: Vec<u64> = (1..=12).collect();
            Ok(Table {
                headers: vec!["n", "p"],
                rows: rows(&ns, |&n| {
                    let mut out = Vec::new();
                    for p in rho_prime_divisors(n)? {
                        if !h_np(n, p)?.is_one() {
                            out.push(vec![n.to_string(), p.to_string()]);
                        }
                    }
                    Ok(out)
                })?,
            })
        }
    }
}
