//! Orders of nonsingular derivations of non-nilpotent Lie algebras in
//! characteristic `p`: the set `B_p = N_p`, decided through
//! `h_{n,p} = gcd((t+i)^n - 1 : 0 <= i < p)`.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ffield::{fq_roots, make_field, period, splitting_degree, FpPoly, FqElem, FqField};
use crate::invariants::is_prime_u64;
use crate::IntPoly;

/// Largest splitting-field degree handled unless the caller says otherwise.
pub const DEFAULT_CAP_K: u64 = 24;

fn check_args(n: u64, p: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(())
}

/// Monic gcd of `(t+i)^n - 1` for `i = 0..p` over F_p.
pub fn h_np(n: u64, p: u64) -> Result<FpPoly> {
    check_args(n, p)?;
    let base = FpPoly::x_pow_minus_one(p, n as usize);
    let mut g = base.clone();
    for i in 1..p {
        if g.is_one() {
            break;
        }
        g = g.gcd(&base.shift(i));
    }
    Ok(g)
}

/// Iterate `H_i = gcd(H_{i-1}(t), H_{i-1}(t+1))` from `H_0 = t^n - 1` until
/// the degree stops dropping. Returns the stable polynomial and the first
/// index `l >= 1` with `deg H_l = deg H_{l+1}`.
pub fn h_np_chain(n: u64, p: u64) -> Result<(FpPoly, usize)> {
    check_args(n, p)?;
    let mut h = FpPoly::x_pow_minus_one(p, n as usize);
    let mut i = 0;
    loop {
        let next = h.gcd(&h.shift(1));
        if i >= 1 && next.deg() == h.deg() {
            return Ok((h, i));
        }
        h = next;
        i += 1;
    }
}

/// Whether `n` belongs to `B_p`, i.e. `h_{n,p} != 1`.
#[allow(non_snake_case)]
pub fn in_Bp(n: u64, p: u64) -> Result<bool> {
    Ok(!h_np(n, p)?.is_one())
}

/// `per(h(t^p - t))`, an element of `P_p`.
pub fn pp_element(h: &FpPoly) -> Result<BigUint> {
    match h.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    if h.coeff(0) == 0 {
        return Err(Error::InvalidArgument("h(0) must be nonzero".into()));
    }
    let p = h.p();
    let as_poly = &FpPoly::monomial(p, 1, p as usize) - &FpPoly::x(p);
    period(&h.compose(&as_poly))
}

/// `1 + t^(p-1) + t^(p^2-1) + ... + t^(p^(k-1)-1)`, whose `P_p` element is
/// `p^k - 1`.
pub fn pp_family(p: u64, k: u32) -> Result<FpPoly> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if k < 2 {
        return Err(Error::InvalidArgument("k must be >= 2".into()));
    }
    let mut coeffs = vec![0u64; p.pow(k - 1) as usize];
    coeffs[0] = 1;
    for j in 1..k {
        coeffs[(p.pow(j) - 1) as usize] = 1;
    }
    Ok(FpPoly::new(p, coeffs))
}

/// Write a shift-invariant `f` as `h(t^p - t)`; `None` if `f` has no such
/// form.
pub fn artin_schreier_preimage(f: &FpPoly) -> Option<FpPoly> {
    let p = f.p();
    let base = &FpPoly::monomial(p, 1, p as usize) - &FpPoly::x(p);
    let mut rest = f.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&base);
        if !r.is_constant() {
            return None;
        }
        digits.push(r.coeff(0));
        rest = q;
    }
    Some(FpPoly::new(p, digits))
}

/// A progression `alpha + i*beta`, `0 <= i < p`, inside `X_{n,p}`.
#[derive(Clone, Debug)]
pub struct Progression {
    pub alpha: FqElem,
    pub beta: FqElem,
    pub field: Arc<FqField>,
}

/// Evidence for or against `n` in `B_p`.
#[derive(Clone, Debug)]
pub struct BpWitness {
    pub n: u64,
    pub p: u64,
    pub h_np: FpPoly,
    pub progression: Option<Progression>,
}

impl BpWitness {
    /// The progression lies in `X_{n,p}` and is present exactly when
    /// `h_{n,p} != 1`.
    pub fn is_consistent(&self) -> bool {
        match &self.progression {
            None => self.h_np.is_one(),
            Some(pr) => {
                let one = FqElem::one(&pr.field);
                let mut x = pr.alpha.clone();
                let mut ok = !self.h_np.is_one() && pr.beta.pow_u64(self.n) == one;
                for _ in 0..self.p {
                    ok &= x.pow_u64(self.n) == one;
                    x = &x + &pr.beta;
                }
                ok
            }
        }
    }
}

fn capped_field(f: &FpPoly, cap_k: u64) -> Result<Arc<FqField>> {
    let k = splitting_degree(f)?;
    if k > cap_k {
        return Err(Error::DeskScaleExceeded { k, cap: cap_k });
    }
    make_field(f.p(), k as u32)
}

/// `(alpha, 1)` with `alpha` the smallest root of `h_{n,p}` in its splitting
/// field, or `None` when `n` is not in `B_p`.
pub fn find_progression(n: u64, p: u64, cap_k: u64) -> Result<Option<Progression>> {
    let h = h_np(n, p)?;
    if h.is_one() {
        return Ok(None);
    }
    let field = capped_field(&h, cap_k)?;
    let alpha = fq_roots(&h, &field)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::VerificationFailed("h_np has no root in its splitting field".into()))?;
    Ok(Some(Progression {
        alpha,
        beta: FqElem::one(&field),
        field,
    }))
}

pub fn bp_witness(n: u64, p: u64, cap_k: u64) -> Result<BpWitness> {
    Ok(BpWitness {
        n,
        p,
        h_np: h_np(n, p)?,
        progression: find_progression(n, p, cap_k)?,
    })
}

/// `X_{n,p}`: the `n`-th roots of unity in the splitting field of `t^n - 1`.
pub fn roots_of_unity(n: u64, p: u64, cap_k: u64) -> Result<(Arc<FqField>, Vec<FqElem>)> {
    check_args(n, p)?;
    let f = FpPoly::x_pow_minus_one(p, n as usize);
    let field = capped_field(&f, cap_k)?;
    let roots = fq_roots(&f, &field)?;
    Ok((field, roots))
}

/// Search `X` for `alpha, beta` with `alpha + i*beta` in `X` for all
/// `0 <= i < p`. Returns the first such pair in the order of `X`, or `None`
/// when `X` is arithmetically free.
pub fn arith_progression(x: &[FqElem], field: &Arc<FqField>) -> Result<Option<(FqElem, FqElem)>> {
    if x.iter().any(|e| !e.in_field(field)) {
        return Err(Error::FieldMismatch);
    }
    let set: HashSet<&FqElem> = x.iter().collect();
    for alpha in x {
        for beta in x {
            let mut term = alpha.clone();
            let mut hit = true;
            for _ in 1..field.p() {
                term = &term + beta;
                if !set.contains(&term) {
                    hit = false;
                    break;
                }
            }
            if hit {
                return Ok(Some((alpha.clone(), beta.clone())));
            }
        }
    }
    Ok(None)
}

pub fn is_arith_free(x: &[FqElem], field: &Arc<FqField>) -> Result<bool> {
    Ok(arith_progression(x, field)?.is_none())
}

/// Arithmetic freeness of the root set of `r` in characteristic zero, which
/// holds exactly when `0` is not a root.
pub fn char0_free(r: &IntPoly) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(!num_traits::Zero::is_zero(&r.coeff(0)))
}
