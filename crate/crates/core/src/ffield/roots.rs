//! Roots of F_p polynomials inside an extension field.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::factor::rng_for;
use super::fq::{FqElem, FqField};
use super::FpPoly;
use crate::error::{Error, Result};

/// Polynomial over F_q with coefficients stored as reduced representatives.
#[derive(Clone, Debug, PartialEq)]
struct QPoly {
    c: Vec<FpPoly>,
}

struct Ops<'a> {
    field: &'a FqField,
}

impl Ops<'_> {
    fn zero(&self) -> FpPoly {
        FpPoly::zero(self.field.p())
    }

    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.mul_mod(b, self.field.modulus())
    }

    fn inv(&self, a: &FpPoly) -> FpPoly {
        a.inverse_mod(self.field.modulus()).expect("nonzero field element")
    }

    fn norm(&self, mut v: Vec<FpPoly>) -> QPoly {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        QPoly { c: v }
    }

    fn deg(a: &QPoly) -> usize {
        a.c.len().saturating_sub(1)
    }

    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        let n = a.c.len().max(b.c.len());
        let z = self.zero();
        self.norm(
            (0..n)
                .map(|i| a.c.get(i).unwrap_or(&z) + b.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn sub(&self, a: &QPoly, b: &QPoly) -> QPoly {
        let n = a.c.len().max(b.c.len());
        let z = self.zero();
        self.norm(
            (0..n)
                .map(|i| a.c.get(i).unwrap_or(&z) - b.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn mul_poly(&self, a: &QPoly, b: &QPoly) -> QPoly {
        if a.c.is_empty() || b.c.is_empty() {
            return QPoly { c: vec![] };
        }
        let mut out = vec![self.zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            for (j, y) in b.c.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        let m = self.field.modulus();
        self.norm(out.into_iter().map(|c| c.rem(m)).collect())
    }

    fn div_rem(&self, a: &QPoly, d: &QPoly) -> (QPoly, QPoly) {
        let dd = Self::deg(d);
        if a.c.len() <= dd {
            return (QPoly { c: vec![] }, a.clone());
        }
        let inv = self.inv(d.c.last().unwrap());
        let mut r = a.c.clone();
        let mut q = vec![self.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.mul(&r[k + dd], &inv);
            if !c.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    r[k + j] = &r[k + j] - &self.mul(&c, dc);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (self.norm(q), self.norm(r))
    }

    fn monic(&self, a: &QPoly) -> QPoly {
        let inv = self.inv(a.c.last().unwrap());
        self.norm(a.c.iter().map(|c| self.mul(c, &inv)).collect())
    }

    fn gcd(&self, a: &QPoly, b: &QPoly) -> QPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.c.is_empty() {
            let r = self.div_rem(&a, &b).1;
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    fn mul_mod(&self, a: &QPoly, b: &QPoly, m: &QPoly) -> QPoly {
        self.div_rem(&self.mul_poly(a, b), m).1
    }

    fn pow_mod(&self, a: &QPoly, e: &BigUint, m: &QPoly) -> QPoly {
        let mut acc = self.norm(vec![FpPoly::one(self.field.p())]);
        let base = self.div_rem(a, m).1;
        for bit in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(bit) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    fn random_elem(&self, rng: &mut ChaCha8Rng) -> FpPoly {
        let p = self.field.p();
        FpPoly::new(p, (0..self.field.k()).map(|_| rng.gen_range(0..p)).collect())
    }

    /// Roots of a monic squarefree `g` that splits into linear factors.
    fn split_linear(&self, g: &QPoly, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
        match Self::deg(g) {
            0 => return,
            1 => {
                out.push(-&g.c[0]);
                return;
            }
            _ => {}
        }
        let p = self.field.p();
        let one = self.norm(vec![FpPoly::one(p)]);
        loop {
            let a = self.random_elem(rng);
            let cand = if p == 2 {
                // absolute trace of a*t
                let mut term = self.norm(vec![self.zero(), a]);
                let mut trace = term.clone();
                for _ in 1..self.field.k() {
                    term = self.mul_mod(&term, &term, g);
                    trace = self.add(&trace, &term);
                }
                self.gcd(g, &self.div_rem(&trace, g).1)
            } else {
                let lin = self.norm(vec![a, FpPoly::one(p)]);
                let e = (self.field.order() - 1u32) / 2u32;
                let w = self.pow_mod(&lin, &e, g);
                self.gcd(g, &self.sub(&w, &one))
            };
            let d = Self::deg(&cand);
            if !cand.c.is_empty() && d > 0 && d < Self::deg(g) {
                let other = self.div_rem(g, &cand).0;
                self.split_linear(&cand, rng, out);
                self.split_linear(&other, rng, out);
                return;
            }
        }
    }
}

/// All distinct roots of `f` lying in `field`, ascending.
///
/// `gcd(f, t^(p^k) - t)` isolates the part of `f` that splits in F_{p^k};
/// its linear factors are then separated by random splitting over F_{p^k}.
pub fn fq_roots(f: &FpPoly, field: &Arc<FqField>) -> Result<Vec<FqElem>> {
    if f.p() != field.p() {
        return Err(Error::CharacteristicMismatch {
            left: f.p(),
            right: field.p(),
        });
    }
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let p = f.p();
    let x = FpPoly::x(p);
    let mut h = x.rem(f);
    for _ in 0..field.k() {
        h = h.pow_mod_u64(p, f);
    }
    let g = f.gcd(&(&h - &x));
    if g.deg() == 0 {
        return Ok(Vec::new());
    }
    let ops = Ops { field };
    let lifted = ops.norm(g.coeffs().iter().map(|&c| FpPoly::constant(p, c)).collect());
    let mut rng = rng_for(&g);
    let mut reprs = Vec::new();
    ops.split_linear(&lifted, &mut rng, &mut reprs);
    let mut roots: Vec<FqElem> = reprs
        .iter()
        .map(|r| FqElem::new(field, r))
        .collect::<Result<_>>()?;
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;

    fn fp(p: u64, c: &[i64]) -> FpPoly {
        FpPoly::from_i64s(p, c)
    }

    #[test]
    fn examples() {
        let f4 = make_field(2, 2).unwrap();
        let w = FqElem::generator(&f4);
        let w2 = &w * &w;
        let roots = fq_roots(&fp(2, &[1, 1, 1]), &f4).unwrap();
        assert_eq!(roots, vec![w.clone(), w2.clone()]);
        let f2 = make_field(2, 1).unwrap();
        assert!(fq_roots(&fp(2, &[1, 1, 1]), &f2).unwrap().is_empty());
        let roots = fq_roots(&fp(2, &[1, 0, 0, 1]), &f4).unwrap();
        assert_eq!(roots, vec![FqElem::one(&f4), w, w2]);
        let f9 = make_field(3, 2).unwrap();
        assert!(matches!(
            fq_roots(&fp(2, &[1, 1]), &f9),
            Err(Error::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn roots_of_unity_match_exhaustive_search() {
        for (p, k) in [(2u64, 4u32), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let field = make_field(p, k).unwrap();
            for n in 1..=30usize {
                let f = FpPoly::x_pow_minus_one(p, n);
                let fast = fq_roots(&f, &field).unwrap();
                let slow: Vec<FqElem> = FqElem::all(&field)
                    .filter(|a| !a.is_zero() && a.pow_u64(n as u64).is_one())
                    .collect();
                assert_eq!(fast, slow, "p={p} k={k} n={n}");
            }
        }
    }

    #[test]
    fn zero_root_and_large_field() {
        let f = make_field(3, 18).unwrap();
        let roots = fq_roots(&FpPoly::x_pow_minus_one(3, 19), &f).unwrap();
        assert_eq!(roots.len(), 19);
        assert!(roots.iter().all(|r| r.pow_u64(19).is_one()));
        let f8 = make_field(2, 3).unwrap();
        let roots = fq_roots(&fp(2, &[0, 1, 1]), &f8).unwrap();
        assert_eq!(roots, vec![FqElem::zero(&f8), FqElem::one(&f8)]);
    }
}
