//! Dense univariate polynomials over a generic ring.

mod composed;
mod cyclotomic;
mod integer;
mod parse;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::{ExactDiv, Field, Ring};

pub use composed::composed_sum;
pub use cyclotomic::cyclotomic;
pub use integer::{gcd_rational, radical, squarefree_decomposition, SquarefreePart};
pub use parse::{parse_poly, parse_poly_var};
pub use resultant::{
    bareiss_det, discriminant, resultant, resultant_subresultant, resultant_sylvester,
    sylvester_matrix, SYLVESTER_MAX_DEGREE,
};

/// Polynomial with coefficients in ascending degree order. The zero
/// polynomial is the empty vector; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The variable `t`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `t^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        Self::monomial(T::one(), n) - Self::one()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the scalar"))
                .collect(),
        )
    }

    /// `f(t + c)`
    pub fn shift(&self, c: &T) -> Self {
        let lin = Self::new(vec![c.clone(), T::one()]);
        self.compose(&lin)
    }

    /// `f(g(t))` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: ExactDiv> Poly<T> {
    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        if self.deg() < dd || self.is_zero() {
            return self.clone();
        }
        let lcd = d.lc().unwrap().clone();
        let mut e = self.deg() - dd + 1;
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let lr = r.lc().unwrap().clone();
            r = &r.scale(&lcd) - &(d * &Self::monomial(lr, k));
            e -= 1;
        }
        r.scale(&lcd.pow_u(e as u64))
    }

    /// Divide every coefficient by `c`, which must divide each one exactly.
    pub fn div_scalar(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }
}

impl<T: Field> Poly<T> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = T::one() / d.lc().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * inv.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(l) => self.scale(&(T::one() / l.clone())),
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring + Signed + fmt::Display> Poly<T> {
    /// Expression form with descending powers, e.g. `t^3-1`.
    pub fn to_expr(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let unit = a.is_one();
            match i {
                0 => s.push_str(&a.to_string()),
                _ => {
                    if !unit {
                        s.push_str(&format!("{a}*"));
                    }
                    s.push(var);
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}

impl<T: Ring + Signed + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr('t'))
    }
}
