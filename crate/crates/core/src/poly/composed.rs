use num_rational::BigRational;
use num_traits::{One, Zero};

use super::resultant::resultant_subresultant;
use crate::error::{Error, Result};
use crate::RatPoly;

/// Monic polynomial whose roots are all sums `a + b` over ordered pairs of
/// roots of `g` (with repetition): `prod_{i,j} (t - (l_i + l_j))`.
///
/// Computed as `Res_x(g(x), g(t - x))`, specialized at `deg(g)^2 + 1` integer
/// points and recovered by Newton interpolation.
pub fn composed_sum(g: &RatPoly) -> Result<RatPoly> {
    let l = match g.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if !g.lc().unwrap().is_one() {
        return Err(Error::NotMonic);
    }
    if g.gcd(&g.derivative()).deg() > 0 {
        return Err(Error::NotSquarefree);
    }
    let n = l * l;
    let rat = |k: usize| BigRational::from_integer(k.into());
    let mut dd: Vec<BigRational> = (0..=n)
        .map(|c| {
            let reflected = g.compose(&RatPoly::new(vec![rat(c), -BigRational::one()]));
            resultant_subresultant(g, &reflected)
        })
        .collect();
    for j in 1..=n {
        for i in (j..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / rat(j);
        }
    }
    let mut out = RatPoly::constant(dd[n].clone());
    for i in (0..n).rev() {
        let lin = RatPoly::new(vec![-rat(i), BigRational::one()]);
        out = &(&out * &lin) + &RatPoly::constant(dd[i].clone());
    }
    debug_assert!(out.lc().is_some_and(|c| !c.is_zero()));
    Ok(out.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, IntPoly};

    fn q(s: &str) -> RatPoly {
        parse_poly(s).unwrap().to_rat()
    }

    #[test]
    fn examples() {
        assert_eq!(composed_sum(&q("t^2-1")).unwrap(), q("t^4-4*t^2"));
        assert_eq!(composed_sum(&q("t-3")).unwrap(), q("t-6"));
        assert_eq!(composed_sum(&q("t^2-2")).unwrap(), q("t^4-8*t^2"));
    }

    #[test]
    fn rational_coefficients() {
        // roots 1/2 and -1: sums 1, -1/2, -1/2, -2
        let g = RatPoly::new(vec![
            BigRational::new((-1).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            BigRational::one(),
        ]);
        let expect = q("(t-1)*(2*t+1)^2*(t+2)").monic();
        assert_eq!(composed_sum(&g).unwrap(), expect);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(composed_sum(&q("2*t^2-1")).unwrap_err(), Error::NotMonic);
        assert_eq!(composed_sum(&q("(t-1)^2")).unwrap_err(), Error::NotSquarefree);
        assert_eq!(composed_sum(&q("4")).unwrap_err(), Error::ConstantPolynomial);
        assert_eq!(composed_sum(&IntPoly::zero().to_rat()).unwrap_err(), Error::ZeroPolynomial);
    }
}
