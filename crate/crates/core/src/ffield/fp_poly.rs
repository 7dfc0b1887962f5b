use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invariants::is_prime_u64;
use crate::IntPoly;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Polynomial over the prime field F_p, coefficients ascending and reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Reduces the coefficients mod `p`; `p` is trusted to be prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.trim();
        f
    }

    /// Like [`FpPoly::new`] but verifies that `p` is prime.
    pub fn checked(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(Self::new(p, coeffs))
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    /// Reduction of an integer polynomial mod `p`.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn monomial(p: u64, c: u64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(p, v)
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    /// `t^n - 1`
    pub fn x_pow_minus_one(p: u64, n: usize) -> Self {
        &Self::monomial(p, 1, n) - &Self::one(p)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale(inv_mod(l, self.p)),
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert_eq!(self.p, d.p, "F_p polynomials over different primes");
        let dd = d.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = inv_mod(d.lc().unwrap(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mul_mod(c, dc, p)) % p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds when `d` does not divide.
    pub fn quo(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division {self} / {d}");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, if `gcd(self, m) == 1`.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let p = self.p;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.deg() != 0 || r0.is_zero() {
            return None;
        }
        Some(s0.scale(inv_mod(r0.lc().unwrap(), p)).rem(m))
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m)
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for bit in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(bit) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow_mod_u64(&self, e: u64, m: &Self) -> Self {
        self.pow_mod(&BigUint::from(e), m)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
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

    /// `self(g(t))`
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.p);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(self.p, c);
        }
        acc
    }

    /// `self(t + c)`
    pub fn shift(&self, c: u64) -> Self {
        self.compose(&Self::new(self.p, vec![c, 1]))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `g` with `g^p == self`, for `self` whose derivative vanishes.
    pub fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Lift to an integer polynomial with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Expression form in the given variable, coefficients in `[0, p)`.
    pub fn to_expr(&self, var: char) -> String {
        self.to_int_poly().to_expr(var)
    }

    /// Base-`p` integer whose digits are the coefficients; orders polynomials
    /// of equal degree the way field moduli are enumerated.
    pub fn index(&self) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &c| acc * self.p + c)
    }
}

impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr('t'))
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.p, rhs.p, "F_p polynomials over different primes");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(self.p, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.p, rhs.p, "F_p polynomials over different primes");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let p = self.p;
        FpPoly::new(p, (0..n).map(|i| self.coeff(i) + p - rhs.coeff(i)).collect())
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| self.p - c).collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.p, rhs.p, "F_p polynomials over different primes");
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p as u128;
        let lazy = self.p < 1 << 60;
        let mut acc = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += a as u128 * b as u128;
                if !lazy || acc[i + j] >= 1 << 120 {
                    acc[i + j] %= p;
                }
            }
        }
        FpPoly::new(self.p, acc.into_iter().map(|c| (c % p) as u64).collect())
    }
}
