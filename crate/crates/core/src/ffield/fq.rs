use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::factor::is_irreducible;
use super::FpPoly;
use crate::error::{Error, Result};
use crate::invariants::{factor_int, is_prime_u64};

/// The finite field F_{p^k} = F_p[u]/(modulus). Immutable; share via `Arc`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FqField {
    p: u64,
    k: u32,
    modulus: FpPoly,
}

/// Field with the canonical modulus: the monic irreducible of degree `k`
/// whose coefficient digits form the smallest base-`p` integer. For `k = 1`
/// that is `t` itself, and elements are constants.
pub fn make_field(p: u64, k: u32) -> Result<Arc<FqField>> {
    FqField::new(p, k)
}

impl FqField {
    pub fn new(p: u64, k: u32) -> Result<Arc<Self>> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        let mut digits = vec![0u64; k as usize];
        loop {
            let mut c = digits.clone();
            c.push(1);
            let cand = FpPoly::new(p, c);
            if is_irreducible(&cand) {
                return Ok(Arc::new(FqField { p, k, modulus: cand }));
            }
            // increment the base-p counter, least significant digit first
            let mut i = 0;
            loop {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
                assert!(i < digits.len(), "no irreducible polynomial found");
            }
        }
    }

    /// Field with an explicit modulus, which must be monic irreducible.
    pub fn with_modulus(modulus: FpPoly) -> Result<Arc<Self>> {
        let p = modulus.p();
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if modulus.lc() != Some(1) || !is_irreducible(&modulus) {
            return Err(Error::NotIrreducible(modulus.to_string()));
        }
        let k = modulus.deg() as u32;
        Ok(Arc::new(FqField { p, k, modulus }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// `p^k`
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.k)
    }

    /// `GF(2^2; u^2+u+1)`
    pub fn describe(&self) -> String {
        format!("GF({}^{}; {})", self.p, self.k, self.modulus.to_expr('u'))
    }

    fn reduce(&self, f: &FpPoly) -> FpPoly {
        f.rem(&self.modulus)
    }
}

/// Element of an [`FqField`], stored as a polynomial in the generator `u` of
/// degree below `k`. Arithmetic between different fields panics; use the
/// `checked_*` methods to get an error instead.
#[derive(Clone, Debug)]
pub struct FqElem {
    field: Arc<FqField>,
    repr: FpPoly,
}

fn same_field(a: &Arc<FqField>, b: &Arc<FqField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FqElem {
    pub fn new(field: &Arc<FqField>, repr: &FpPoly) -> Result<Self> {
        if repr.p() != field.p {
            return Err(Error::CharacteristicMismatch {
                left: repr.p(),
                right: field.p,
            });
        }
        Ok(FqElem {
            field: field.clone(),
            repr: field.reduce(repr),
        })
    }

    pub fn zero(field: &Arc<FqField>) -> Self {
        Self::from_u64(field, 0)
    }

    pub fn one(field: &Arc<FqField>) -> Self {
        Self::from_u64(field, 1)
    }

    pub fn from_u64(field: &Arc<FqField>, c: u64) -> Self {
        FqElem {
            field: field.clone(),
            repr: field.reduce(&FpPoly::constant(field.p, c)),
        }
    }

    pub fn from_i64(field: &Arc<FqField>, c: i64) -> Self {
        Self::from_u64(field, c.rem_euclid(field.p as i64) as u64)
    }

    /// The class of `u`.
    pub fn generator(field: &Arc<FqField>) -> Self {
        FqElem {
            field: field.clone(),
            repr: field.reduce(&FpPoly::x(field.p)),
        }
    }

    /// All `p^k` elements in increasing [`FpPoly::index`] order.
    pub fn all(field: &Arc<FqField>) -> impl Iterator<Item = FqElem> + '_ {
        let size = field.order().to_u64().expect("field too large to enumerate");
        (0..size).map(move |mut i| {
            let mut c = Vec::with_capacity(field.k as usize);
            for _ in 0..field.k {
                c.push(i % field.p);
                i /= field.p;
            }
            FqElem {
                field: field.clone(),
                repr: FpPoly::new(field.p, c),
            }
        })
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn repr(&self) -> &FpPoly {
        &self.repr
    }

    pub fn in_field(&self, field: &Arc<FqField>) -> bool {
        same_field(&self.field, field)
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.repr.is_one()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn inv(&self) -> Option<Self> {
        self.repr
            .inverse_mod(&self.field.modulus)
            .map(|repr| FqElem {
                field: self.field.clone(),
                repr,
            })
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        FqElem {
            field: self.field.clone(),
            repr: self.repr.pow_mod(e, &self.field.modulus),
        }
    }

    pub fn pow_u64(&self, e: u64) -> Self {
        self.pow(&BigUint::from(e))
    }

    /// `u+1 in GF(2^2; u^2+u+1)`
    pub fn describe(&self) -> String {
        format!("{} in {}", self, self.field.describe())
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && same_field(&self.field, &other.field)
    }
}

impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.index().cmp(&other.repr.index())
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.repr.to_expr('u'))
    }
}

fn assert_same(a: &FqElem, b: &FqElem) {
    assert!(
        same_field(&a.field, &b.field),
        "arithmetic between elements of {} and {}",
        a.field.describe(),
        b.field.describe()
    );
}

impl Add for &FqElem {
    type Output = FqElem;
    fn add(self, rhs: &FqElem) -> FqElem {
        assert_same(self, rhs);
        FqElem {
            field: self.field.clone(),
            repr: &self.repr + &rhs.repr,
        }
    }
}

impl Sub for &FqElem {
    type Output = FqElem;
    fn sub(self, rhs: &FqElem) -> FqElem {
        assert_same(self, rhs);
        FqElem {
            field: self.field.clone(),
            repr: &self.repr - &rhs.repr,
        }
    }
}

impl Mul for &FqElem {
    type Output = FqElem;
    fn mul(self, rhs: &FqElem) -> FqElem {
        assert_same(self, rhs);
        FqElem {
            field: self.field.clone(),
            repr: self.repr.mul_mod(&rhs.repr, &self.field.modulus),
        }
    }
}

impl Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        FqElem {
            field: self.field.clone(),
            repr: -&self.repr,
        }
    }
}

/// Multiplicative order of a nonzero element, found by factoring `p^k - 1`
/// and stripping prime factors while the power stays 1.
pub fn element_order(x: &FqElem) -> Result<BigUint> {
    if x.is_zero() {
        return Err(Error::InvalidArgument("zero has no multiplicative order".into()));
    }
    let group = x.field.order() - 1u32;
    let fac = factor_int(&BigInt::from(group.clone()))?;
    let mut e = group;
    for (q, _) in &fac.factors {
        while (&e % q) == BigUint::ZERO && x.pow(&(&e / q)).is_one() {
            e /= q;
        }
    }
    debug_assert!(x.pow(&e).is_one());
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(make_field(2, 2).unwrap().modulus(), &FpPoly::from_i64s(2, &[1, 1, 1]));
        assert_eq!(make_field(3, 1).unwrap().modulus(), &FpPoly::x(3));
        assert_eq!(make_field(2, 4).unwrap().modulus(), &FpPoly::from_i64s(2, &[1, 1, 0, 0, 1]));
        assert_eq!(make_field(3, 2).unwrap().modulus(), &FpPoly::from_i64s(3, &[1, 0, 1]));
        assert!(make_field(4, 1).is_err());
        assert!(make_field(2, 0).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = make_field(5, 1).unwrap();
        let a = FqElem::from_u64(&f, 3);
        let b = FqElem::from_u64(&f, 4);
        assert_eq!(&a * &b, FqElem::from_u64(&f, 2));
        assert_eq!(a.inv().unwrap(), FqElem::from_u64(&f, 2));
        assert_eq!(FqElem::generator(&f), FqElem::zero(&f));
        assert_eq!(FqElem::all(&f).count(), 5);
    }

    #[test]
    fn orders() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(element_order(&FqElem::one(&f4)).unwrap(), BigUint::from(1u32));
        assert_eq!(element_order(&FqElem::generator(&f4)).unwrap(), BigUint::from(3u32));
        let f16 = make_field(2, 4).unwrap();
        assert_eq!(element_order(&FqElem::generator(&f16)).unwrap(), BigUint::from(15u32));
        assert!(element_order(&FqElem::zero(&f16)).is_err());
        for x in FqElem::all(&f16).skip(1) {
            let e = element_order(&x).unwrap();
            assert_eq!(BigUint::from(15u32) % &e, BigUint::ZERO);
        }
    }

    #[test]
    fn cross_field_is_checked() {
        let a = FqElem::one(&make_field(2, 2).unwrap());
        let b = FqElem::one(&make_field(2, 3).unwrap());
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::FieldMismatch);
        // equal contexts built separately are interchangeable
        let c = FqElem::one(&make_field(2, 2).unwrap());
        assert_eq!(a.checked_mul(&c).unwrap(), a);
    }

    #[test]
    fn describe_format() {
        let f4 = make_field(2, 2).unwrap();
        let w = FqElem::generator(&f4);
        assert_eq!((&w + &FqElem::one(&f4)).describe(), "u+1 in GF(2^2; u^2+u+1)");
        assert!(FqField::with_modulus(FpPoly::from_i64s(2, &[1, 0, 1])).is_err());
    }
}
