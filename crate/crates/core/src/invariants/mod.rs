//! Integer invariants of `t^n - 1` and of general integer polynomials.

mod factor;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::FpPoly;
use crate::poly::{
    bareiss_det, composed_sum, cyclotomic, discriminant, resultant, squarefree_decomposition,
};
use crate::{IntPoly, RatPoly};

pub use factor::{factor_int, is_prime, is_prime_u64, Factorization};

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} must be >= 1")));
    }
    Ok(())
}

/// `R(t^n - 1, (t+1)^n - 1)`, with `Phi_3` divided out of both arguments
/// when `6 | n`.
pub fn rho(n: u64) -> Result<BigInt> {
    require_positive(n, "n")?;
    let mut f = IntPoly::x_pow_minus_one(n as usize);
    let mut g = f.shift(&BigInt::one());
    if n % 6 == 0 {
        let phi3 = cyclotomic(3)?;
        let inexact = || Error::VerificationFailed(format!("Phi_3 division for n = {n}"));
        f = f.div_exact(&phi3).ok_or_else(inexact)?;
        g = g.div_exact(&phi3).ok_or_else(inexact)?;
    }
    resultant(&f, &g)
}

fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 1..=n {
        c = c * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(c.clone());
    }
    row
}

/// Determinant of the `n x n` circulant whose first row is
/// `1, C(n,1), ..., C(n,n-1)`.
pub fn wendt(n: u64) -> Result<BigInt> {
    require_positive(n, "n")?;
    let b = binomial_row(n);
    let n = n as usize;
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| b[(j + n - i) % n].clone()).collect())
        .collect();
    Ok(bareiss_det(m))
}

fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn rational_to_integer(q: BigRational, what: &'static str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral(what))
    }
}

/// `a^(1+2d^2) * (m-1)! * prod_{i<j} (l_i - l_j)^(2m)` over the distinct
/// roots `l_i` of `r`, where `a = lc(r)`, `d = deg r` and `m` is the largest
/// root multiplicity. The root product is `disc(g) / lc(g)^(2l-2)` for the
/// radical `g` of degree `l`. Constants map to themselves.
pub fn delta(r: &IntPoly) -> Result<BigInt> {
    let d = r.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(r.coeff(0));
    }
    let a = r.lc().unwrap().clone();
    let parts = squarefree_decomposition(r)?;
    let m = parts.iter().map(|p| p.multiplicity).max().unwrap();
    let g = crate::poly::radical(&parts);
    let l = g.deg() as u32;
    let root_product = BigRational::new(discriminant(&g)?, g.lc().unwrap().pow(2 * l - 2));
    let value = BigRational::from_integer(a.pow(1 + 2 * (d as u32).pow(2)) * factorial(m - 1))
        * root_product.pow(m as i32);
    rational_to_integer(value, "delta")
}

/// `a^(2d^3)` times the product of `r(l_i + l_j)` over ordered pairs of
/// distinct roots (`i = j` allowed) whose sum is not itself a root of `r`.
///
/// Computed as `a^(2d^3) * R(r, P~)` where `P~` is the composed sum of the
/// monic radical with every factor shared with the radical divided out.
pub fn sigma(r: &IntPoly) -> Result<BigInt> {
    let d = r.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(BigInt::one());
    }
    let a = r.lc().unwrap().clone();
    let parts = squarefree_decomposition(r)?;
    let g = crate::poly::radical(&parts).to_rat().monic();
    let mut sums = composed_sum(&g)?;
    loop {
        let common = sums.gcd(&g);
        if common.deg() == 0 {
            break;
        }
        sums = sums.div_rem(&common).0;
    }
    let value = pair_sum_resultant(r, &sums)? * BigRational::from_integer(a.pow(2 * (d as u32).pow(3)));
    rational_to_integer(value, "sigma")
}

/// `R(r, s)` for monic rational `s`, through its primitive integer multiple.
fn pair_sum_resultant(r: &IntPoly, s: &RatPoly) -> Result<BigRational> {
    if s.deg() == 0 {
        return Ok(BigRational::one());
    }
    let q = IntPoly::from_rat_primitive(s);
    let scale = q.lc().unwrap().pow(r.deg() as u32);
    Ok(BigRational::new(resultant(r, &q)?, scale))
}

/// `delta(r) * sigma(r)`: the torsion order that must be excluded for the
/// Lie-ring structure results to apply.
pub fn torsion_bound(r: &IntPoly) -> Result<BigInt> {
    Ok(delta(r)? * sigma(r)?)
}

fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            while m % q == 0 {
                m /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Some(p)` when `n = p^a` with `a >= 1`.
fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|q| n % q == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

/// Closed form of `R(Phi_m, Phi_n)` for `m <= n`: `p^phi(m)` when `n/m` is a
/// positive power of the prime `p`, `0` when `m == n`, and `1` otherwise.
/// Debug builds cross-check against the resultant up to sign.
pub fn cyclo_resultant(m: u64, n: u64) -> Result<BigInt> {
    require_positive(m, "m")?;
    if m > n {
        return Err(Error::InvalidArgument(format!("need m <= n, got m = {m}, n = {n}")));
    }
    let value = if m == n {
        BigInt::zero()
    } else {
        match (n % m == 0).then(|| prime_power_base(n / m)).flatten() {
            Some(p) => BigInt::from(p).pow(euler_phi(m) as u32),
            None => BigInt::one(),
        }
    };
    if cfg!(debug_assertions) {
        let direct = cyclo_resultant_direct(m, n)?;
        debug_assert_eq!(direct.abs(), value, "R(Phi_{m}, Phi_{n})");
    }
    Ok(value)
}

/// `R(Phi_m, Phi_n)` by resultant of the cyclotomic polynomials.
pub fn cyclo_resultant_direct(m: u64, n: u64) -> Result<BigInt> {
    resultant(&cyclotomic(m)?, &cyclotomic(n)?)
}

/// The conclusion available from `p` not dividing `rho_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem36Verdict {
    /// Every Lie algebra with a periodic derivation of order `n` is abelian.
    Abelian,
    /// Nilpotent of class at most 2.
    ClassAtMost2,
    /// `p | rho_n`: no conclusion.
    NoConclusion,
}

impl Theorem36Verdict {
    /// Largest nilpotency class allowed, if any.
    pub fn class_bound(self) -> Option<usize> {
        match self {
            Theorem36Verdict::Abelian => Some(1),
            Theorem36Verdict::ClassAtMost2 => Some(2),
            Theorem36Verdict::NoConclusion => None,
        }
    }
}

/// Classify `(n, p)`; `p = 0` stands for characteristic zero.
pub fn theorem36_bound(n: u64, p: u64) -> Result<Theorem36Verdict> {
    require_positive(n, "n")?;
    if p != 0 && !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let divides = p != 0 && rho_divisible_by(n, p)?;
    Ok(if divides {
        Theorem36Verdict::NoConclusion
    } else if n % 6 == 0 {
        Theorem36Verdict::ClassAtMost2
    } else {
        Theorem36Verdict::Abelian
    })
}

/// Whether the prime `p` divides `rho_n`. Both arguments of the resultant
/// are monic, so this is a nontrivial gcd of their reductions mod `p`.
pub fn rho_divisible_by(n: u64, p: u64) -> Result<bool> {
    require_positive(n, "n")?;
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut f = FpPoly::x_pow_minus_one(p, n as usize);
    let mut g = f.shift(1);
    if n % 6 == 0 {
        let phi3 = FpPoly::new(p, vec![1, 1, 1]);
        f = f.quo(&phi3);
        g = g.quo(&phi3);
    }
    Ok(!f.gcd(&g).is_one())
}

/// Primes below 2^64 dividing `rho_n`, ascending.
pub fn rho_prime_divisors(n: u64) -> Result<Vec<u64>> {
    let f = factor_int(&rho(n)?)?;
    Ok(f.primes().filter_map(BigUint::to_u64).collect())
}
