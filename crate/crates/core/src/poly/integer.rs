//! Operations specific to integer polynomials: content, exact division,
//! gcd over the rationals and Yun's squarefree decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{IntPoly, RatPoly};

/// One factor of a squarefree decomposition: `factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub factor: IntPoly,
    pub multiplicity: u32,
}

impl IntPoly {
    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    /// Quotient `self / d`, or `None` when `d` does not divide `self` in Z[t].
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < dd {
            return None;
        }
        let lcd = d.lc().unwrap();
        let mut r: Vec<BigInt> = self.coeffs().to_vec();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(lcd);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, dc) in d.coeffs().iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Clear denominators of a rational polynomial: returns the primitive
    /// integer polynomial with positive leading coefficient that is a
    /// rational multiple of `f`.
    pub fn from_rat_primitive(f: &RatPoly) -> IntPoly {
        let den = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            f.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

/// Primitive gcd over Q with positive leading coefficient.
pub fn gcd_rational(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.primitive_part(), g.primitive_part());
    if a.deg() < b.deg() || a.is_zero() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    Ok(a.primitive_part())
}

/// Yun's algorithm on the primitive part. Factors are primitive with
/// positive leading coefficient, listed by increasing multiplicity.
pub fn squarefree_decomposition(f: &IntPoly) -> Result<Vec<SquarefreePart>> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let a = f.primitive_part();
    let da = a.derivative();
    let c = gcd_rational(&a, &da)?;
    let quo = |x: &IntPoly, d: &IntPoly| {
        x.div_exact(d)
            .expect("exact division in squarefree decomposition")
    };
    let mut w = quo(&a, &c);
    let mut y = quo(&da, &c);
    let mut z = &y - &w.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while w.deg() > 0 {
        let g = gcd_rational(&w, &z)?;
        if g.deg() > 0 {
            out.push(SquarefreePart {
                factor: g.clone(),
                multiplicity: i,
            });
        }
        w = quo(&w, &g);
        y = quo(&z, &g);
        z = &y - &w.derivative();
        i += 1;
    }
    Ok(out)
}

/// Product of the squarefree factors.
pub fn radical(parts: &[SquarefreePart]) -> IntPoly {
    parts
        .iter()
        .fold(IntPoly::one(), |acc, p| &acc * &p.factor)
}
