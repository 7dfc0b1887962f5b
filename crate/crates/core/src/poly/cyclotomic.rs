use crate::error::{Error, Result};
use crate::IntPoly;

/// `Phi_n`, by exact division of `t^n - 1` by the cyclotomic polynomials of
/// the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be >= 1".into()));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut q = IntPoly::x_pow_minus_one(d as usize);
        for (e, phi) in &table {
            if d % e == 0 {
                q = q.div_exact(phi).expect("cyclotomic factor divides t^d - 1");
            }
        }
        table.push((d, q));
    }
    Ok(table.pop().unwrap().1)
}
