//! Factorization over F_p: squarefree split, distinct-degree, then
//! Cantor-Zassenhaus equal-degree splitting.

use std::sync::OnceLock;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FpPoly;
use crate::error::{Error, Result};

static SEED_OVERRIDE: OnceLock<u64> = OnceLock::new();

/// Replace the seed derived from each input polynomial. Can be set once per
/// process; intended for testing reproducibility. Returns false if a seed
/// was already installed.
pub fn set_seed_override(seed: u64) -> bool {
    SEED_OVERRIDE.set(seed).is_ok()
}

/// FNV-1a over the prime and coefficients.
pub(crate) fn derived_seed(f: &FpPoly) -> u64 {
    if let Some(&s) = SEED_OVERRIDE.get() {
        return s;
    }
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in std::iter::once(f.p()).chain(f.coeffs().iter().copied()) {
        for b in w.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

pub(crate) fn rng_for(f: &FpPoly) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derived_seed(f))
}

/// Squarefree decomposition of a monic polynomial over F_p.
pub fn squarefree_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.p();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_fp(&f.pth_root()) {
            out.push((g, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.quo(&c);
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.quo(&y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.quo(&w);
        i += 1;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_fp(&c.pth_root()) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Groups the irreducible factors of a squarefree monic `f` by degree.
pub fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p();
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod_u64(p, &rest);
        let g = rest.gcd(&(&h - &x));
        if g.deg() > 0 {
            rest = rest.quo(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn random_below(f: &FpPoly, rng: &mut ChaCha8Rng) -> FpPoly {
    let p = f.p();
    FpPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect())
}

/// Splits a product of distinct monic irreducibles, all of degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    if f.deg() <= d {
        return vec![f.clone()];
    }
    let p = f.p();
    let one = FpPoly::one(p);
    loop {
        let a = random_below(f, rng);
        if a.deg() == 0 {
            continue;
        }
        let candidate = if p == 2 {
            let mut term = a.clone();
            let mut trace = a.clone();
            for _ in 1..d {
                term = term.mul_mod(&term, f);
                trace = &trace + &term;
            }
            f.gcd(&trace)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            f.gcd(&(&a.pow_mod(&e, f) - &one))
        };
        if candidate.deg() > 0 && candidate.deg() < f.deg() {
            let other = f.quo(&candidate);
            let mut out = equal_degree(&candidate, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by degree then coefficients.
pub fn fp_factor(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
    let mut rng = rng_for(f);
    factor_with(f, &mut rng)
}

/// [`fp_factor`] with an explicit PRNG seed.
pub fn fp_factor_seeded(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, u32)>> {
    factor_with(f, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn factor_with(f: &FpPoly, rng: &mut ChaCha8Rng) -> Result<Vec<(FpPoly, u32)>> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let mut out = Vec::new();
    for (part, m) in squarefree_fp(&f.monic()) {
        for (group, d) in distinct_degree(&part) {
            for q in equal_degree(&group, d, rng) {
                out.push((q, m));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let k = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let p = f.p();
    let x = FpPoly::x(p);
    let frob = |times: usize| {
        let mut h = x.rem(f);
        for _ in 0..times {
            h = h.pow_mod_u64(p, f);
        }
        h
    };
    if frob(k) != x.rem(f) {
        return false;
    }
    (2..=k)
        .filter(|q| k % q == 0 && (2..*q).all(|r| q % r != 0))
        .all(|q| f.gcd(&(&frob(k / q) - &x)).deg() == 0)
}

/// Least common multiple of the degrees of the irreducible factors: the
/// degree of the splitting field of `f` over F_p.
pub fn splitting_degree(f: &FpPoly) -> Result<u64> {
    use num_integer::Integer;
    Ok(fp_factor(f)?
        .iter()
        .fold(1u64, |acc, (q, _)| acc.lcm(&(q.deg() as u64))))
}
