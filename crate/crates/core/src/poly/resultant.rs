//! Resultants: Sylvester determinant by fraction-free elimination for small
//! inputs, the subresultant remainder sequence otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::{ExactDiv, Ring};
use crate::IntPoly;

/// Largest degree for which [`resultant`] goes through the Sylvester matrix.
pub const SYLVESTER_MAX_DEGREE: usize = 8;

/// Determinant by Bareiss elimination; every intermediate division is exact.
pub fn bareiss_det<T: ExactDiv>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Sylvester matrix with the rows of `f` first, so that its determinant is
/// `lc(f)^deg(g) * prod_{f(a)=0} g(a)`.
pub fn sylvester_matrix<T: Ring>(f: &Poly<T>, g: &Poly<T>) -> Vec<Vec<T>> {
    let (m, n) = (f.deg(), g.deg());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, shifts) in [(f, n), (g, m)] {
        for i in 0..shifts {
            let mut row = vec![T::zero(); size];
            for (k, c) in p.coeffs().iter().rev().enumerate() {
                row[i + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

pub fn resultant_sylvester<T: ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> T {
    bareiss_det(sylvester_matrix(f, g))
}

/// Subresultant PRS (Collins/Brown), no content removal.
pub fn resultant_subresultant<T: ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> T {
    if f.is_zero() || g.is_zero() {
        return T::zero();
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = true;
        }
    }
    let sign = |v: T, neg: bool| if neg { -v } else { v };
    if b.deg() == 0 {
        return sign(b.lc().unwrap().pow_u(a.deg() as u64), negate);
    }
    let mut g_ = T::one();
    let mut h = T::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return T::zero();
        }
        b = r.div_scalar(&(g_.clone() * h.pow_u(delta)));
        g_ = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g_.clone(),
            _ => g_.pow_u(delta) / h.pow_u(delta - 1),
        };
        if b.deg() == 0 {
            let da = a.deg() as u64;
            let res = b.lc().unwrap().pow_u(da) / h.pow_u(da - 1);
            return sign(res, negate);
        }
    }
}

/// `R(f, g)`, zero iff `f` and `g` share a factor of positive degree.
pub fn resultant<T: ExactDiv>(f: &Poly<T>, g: &Poly<T>) -> Result<T> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg().max(g.deg()) <= SYLVESTER_MAX_DEGREE {
        Ok(resultant_sylvester(f, g))
    } else {
        Ok(resultant_subresultant(f, g))
    }
}

/// `(-1)^(d(d-1)/2) * R(f, f') / lc(f)`
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let r = resultant(f, &f.derivative())?;
    let (q, rem) = r.div_rem(f.lc().unwrap());
    if !rem.is_zero() {
        return Err(Error::NonIntegral("discriminant quotient"));
    }
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> IntPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p("t-2"), &p("t^2+1")).unwrap(), BigInt::from(5));
        assert_eq!(resultant(&p("t^3-1"), &p("(t+1)^3-1")).unwrap(), BigInt::from(28));
        assert_eq!(resultant(&p("t^2-1"), &p("t-1")).unwrap(), BigInt::zero());
        assert_eq!(resultant(&p("0"), &p("t")).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn constants() {
        assert_eq!(resultant(&p("3"), &p("t^2+1")).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p("t^3+t"), &p("-2")).unwrap(), BigInt::from(-8));
        assert_eq!(resultant(&p("4"), &p("5")).unwrap(), BigInt::from(1));
        assert_eq!(resultant_subresultant(&p("3"), &p("t^2+1")), BigInt::from(9));
        assert_eq!(resultant_subresultant(&p("t^3+t"), &p("-2")), BigInt::from(-8));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p("t^2-1")).unwrap(), BigInt::from(4));
        assert_eq!(discriminant(&p("t^3-1")).unwrap(), BigInt::from(-27));
        assert_eq!(discriminant(&p("(t-1)^2")).unwrap(), BigInt::zero());
        assert_eq!(discriminant(&p("7")).unwrap_err(), Error::ConstantPolynomial);
        assert_eq!(discriminant(&p("2*t+3")).unwrap(), BigInt::from(1));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(1)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(-6));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            (prop::collection::vec(-9i64..=9, 0..max_deg), 1i64..=5, any::<bool>()).prop_map(
                |(mut c, lc, neg)| {
                    c.push(if neg { -lc } else { lc });
                    IntPoly::new(c.into_iter().map(BigInt::from).collect())
                },
            )
        }

        proptest! {
            #[test]
            fn swap_sign(f in poly(6), g in poly(6)) {
                let sign = if f.deg() * g.deg() % 2 == 1 { -1 } else { 1 };
                prop_assert_eq!(
                    resultant(&f, &g).unwrap(),
                    resultant(&g, &f).unwrap() * BigInt::from(sign)
                );
            }

            #[test]
            fn multiplicative(f in poly(4), g in poly(4), h in poly(4)) {
                prop_assert_eq!(
                    resultant(&(&f * &g), &h).unwrap(),
                    resultant(&f, &h).unwrap() * resultant(&g, &h).unwrap()
                );
            }

            #[test]
            fn both_algorithms_agree(f in poly(9), g in poly(9)) {
                prop_assert_eq!(resultant_sylvester(&f, &g), resultant_subresultant(&f, &g));
            }
        }
    }
}
