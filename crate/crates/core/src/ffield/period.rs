use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use super::factor::fp_factor;
use super::fq::{element_order, FqElem, FqField};
use super::FpPoly;
use crate::error::{Error, Result};
use crate::invariants::factor_int;

/// Least `m >= 1` with `f | t^m - 1`.
///
/// The lcm of the orders of `t` modulo each irreducible factor, times the
/// smallest power of `p` that is at least the largest multiplicity. The
/// answer is then checked: `t^m = 1 mod f` and `t^(m/l) != 1` for each
/// prime `l | m`.
pub fn period(f: &FpPoly) -> Result<BigUint> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    if f.coeff(0) == 0 {
        return Err(Error::NoPeriod);
    }
    let p = f.p();
    let parts = fp_factor(f)?;
    let mut per = BigUint::one();
    let mut max_mult = 1;
    for (q, m) in &parts {
        let field = FqField::with_modulus(q.clone())?;
        per = per.lcm(&element_order(&FqElem::generator(&field))?);
        max_mult = max_mult.max(*m);
    }
    let mut pp = 1u64;
    while pp < max_mult as u64 {
        pp *= p;
    }
    per *= pp;
    verify_period(f, &per)?;
    Ok(per)
}

fn verify_period(f: &FpPoly, per: &BigUint) -> Result<()> {
    let x = FpPoly::x(f.p());
    let fail = || Error::VerificationFailed(format!("period {per} of {f}"));
    if !x.pow_mod(per, f).is_one() {
        return Err(fail());
    }
    let fac = factor_int(&BigInt::from(per.clone()))?;
    for l in fac.primes() {
        if x.pow_mod(&(per / l), f).is_one() {
            return Err(fail());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> FpPoly {
        FpPoly::from_i64s(p, c)
    }

    #[test]
    fn examples() {
        assert_eq!(period(&fp(2, &[1, 1])).unwrap(), BigUint::from(1u32));
        assert_eq!(period(&fp(2, &[1, 1, 1])).unwrap(), BigUint::from(3u32));
        // h(t^2 - t) for h = t^5+t^2+1
        let h = fp(2, &[1, 0, 1, 0, 0, 1]);
        let g = h.compose(&fp(2, &[0, -1, 1]));
        assert_eq!(g.deg(), 10);
        assert_eq!(period(&g).unwrap(), BigUint::from(31u32));
    }

    #[test]
    fn errors() {
        assert_eq!(period(&fp(2, &[0, 1, 1])).unwrap_err(), Error::NoPeriod);
        assert_eq!(period(&fp(3, &[2])).unwrap_err(), Error::ConstantPolynomial);
        assert_eq!(period(&FpPoly::zero(3)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn repeated_factors() {
        // (t+1)^4 over F_2 divides t^4 - 1 but not t^2 - 1
        assert_eq!(period(&fp(2, &[1, 1]).pow(4)).unwrap(), BigUint::from(4u32));
        // (t+1)^3 over F_2 needs the next power of two as well
        assert_eq!(period(&fp(2, &[1, 1]).pow(3)).unwrap(), BigUint::from(4u32));
        // (t^2+1)^2 over F_3: ord 4, multiplicity 2 -> 12
        assert_eq!(period(&fp(3, &[1, 0, 1]).pow(2)).unwrap(), BigUint::from(12u32));
    }
}
