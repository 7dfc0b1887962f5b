use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{FpPoly, FqElem, FqField};

/// Square matrix over a finite field acting on column vectors: the image of
/// basis vector `e_j` is column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Arc<FqField>,
    rows: Vec<Vec<FqElem>>,
}

impl LinearMap {
    pub fn new(field: &Arc<FqField>, rows: Vec<Vec<FqElem>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().any(|x| !x.in_field(field)) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(LinearMap {
            field: field.clone(),
            rows,
        })
    }

    pub fn zero(field: &Arc<FqField>, n: usize) -> Self {
        LinearMap {
            field: field.clone(),
            rows: vec![vec![FqElem::zero(field); n]; n],
        }
    }

    pub fn identity(field: &Arc<FqField>, n: usize) -> Self {
        Self::diagonal(field, &vec![FqElem::one(field); n])
    }

    pub fn diagonal(field: &Arc<FqField>, diag: &[FqElem]) -> Self {
        let mut m = Self::zero(field, diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.rows[i][i] = d.clone();
        }
        m
    }

    /// Companion matrix of `t^n - 1`: the cyclic shift `e_i -> e_{i+1 mod n}`.
    pub fn cyclic_shift(field: &Arc<FqField>, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for j in 0..n {
            m.rows[(j + 1) % n][j] = FqElem::one(field);
        }
        m
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FqElem>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &FqElem {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<FqElem> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn diagonal_entries(&self) -> Option<Vec<FqElem>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.rows[i][j].is_zero() {
                    return None;
                }
            }
        }
        Some((0..n).map(|i| self.rows[i][i].clone()).collect())
    }

    pub fn apply(&self, v: &[FqElem]) -> Vec<FqElem> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(FqElem::zero(&self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.dim();
        let mut out = Self::zero(&self.field, n);
        for i in 0..n {
            for (k, a) in self.rows[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Ok(LinearMap {
            field: self.field.clone(),
            rows,
        })
    }

    pub fn scale(&self, c: &FqElem) -> Self {
        LinearMap {
            field: self.field.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    /// Block-diagonal sum, `self` first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if **self.field() != **other.field() {
            return Err(Error::FieldMismatch);
        }
        let (a, b) = (self.dim(), other.dim());
        let mut out = Self::zero(&self.field, a + b);
        for i in 0..a {
            out.rows[i][..a].clone_from_slice(&self.rows[i]);
        }
        for i in 0..b {
            out.rows[a + i][a..].clone_from_slice(&other.rows[i]);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(FqElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, a)| if i == j { a.is_one() } else { a.is_zero() })
        })
    }

    pub fn rank(&self) -> usize {
        let mut s = Subspace::new(&self.field, self.dim());
        for row in &self.rows {
            s.insert(row.clone());
        }
        s.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if **self.field() != **other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

/// Least `e <= cap` with `D^e = id`; `None` if `D` is singular or no such
/// `e` exists.
pub fn map_order(d: &LinearMap, cap: u64) -> Result<Option<u64>> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be >= 1".into()));
    }
    if !d.is_invertible() {
        return Ok(None);
    }
    let mut power = d.clone();
    for e in 1..=cap {
        if power.is_identity() {
            return Ok(Some(e));
        }
        power = power.compose(d)?;
    }
    Ok(None)
}

/// Whether `r(D)` is the zero matrix, by Horner's rule.
pub fn poly_annihilates(r: &FpPoly, d: &LinearMap) -> Result<bool> {
    let field = d.field();
    if r.p() != field.p() {
        return Err(Error::CharacteristicMismatch {
            left: r.p(),
            right: field.p(),
        });
    }
    let n = d.dim();
    let mut acc = LinearMap::zero(field, n);
    for &c in r.coeffs().iter().rev() {
        let shifted = acc.compose(d)?;
        acc = shifted.add(&LinearMap::identity(field, n).scale(&FqElem::from_u64(field, c)))?;
    }
    Ok(acc.is_zero())
}

/// Subspace of `F^n` kept as a basis in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Arc<FqField>,
    n: usize,
    basis: Vec<Vec<FqElem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &Arc<FqField>, n: usize) -> Self {
        Subspace {
            field: field.clone(),
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FqElem>] {
        &self.basis
    }

    fn reduce(&self, mut v: Vec<FqElem>) -> Vec<FqElem> {
        for (b, &piv) in self.basis.iter().zip(&self.pivots) {
            if !v[piv].is_zero() {
                let c = v[piv].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = &*x - &(&c * y);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FqElem]) -> bool {
        self.reduce(v.to_vec()).iter().all(FqElem::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<FqElem>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[piv].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for (b, _) in self.basis.iter_mut().zip(&self.pivots) {
            if !b[piv].is_zero() {
                let c = b[piv].clone();
                for (x, y) in b.iter_mut().zip(&v) {
                    *x = &*x - &(&c * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.basis.insert(at, v);
        self.pivots.insert(at, piv);
        true
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;

    fn f4() -> (Arc<FqField>, FqElem) {
        let f = make_field(2, 2).unwrap();
        let w = FqElem::generator(&f);
        (f, w)
    }

    #[test]
    fn order_examples() {
        let (f, w) = f4();
        assert_eq!(map_order(&LinearMap::identity(&f, 3), 10).unwrap(), Some(1));
        let d = LinearMap::diagonal(&f, &[FqElem::one(&f), w.clone(), &w * &w]);
        assert_eq!(map_order(&d, 10).unwrap(), Some(3));
        assert_eq!(map_order(&d, 2).unwrap(), None);
        let singular = LinearMap::diagonal(&f, &[FqElem::one(&f), FqElem::zero(&f)]);
        assert_eq!(map_order(&singular, 10).unwrap(), None);
        assert_eq!(map_order(&LinearMap::cyclic_shift(&f, 7), 100).unwrap(), Some(7));
    }

    #[test]
    fn annihilation_examples() {
        let (f, w) = f4();
        let d = LinearMap::diagonal(&f, &[FqElem::one(&f), w.clone(), &w * &w]);
        assert!(poly_annihilates(&FpPoly::x_pow_minus_one(2, 3), &d).unwrap());
        assert!(!poly_annihilates(&FpPoly::x_pow_minus_one(2, 2), &d).unwrap());
        assert!(poly_annihilates(&FpPoly::x_pow_minus_one(2, 1), &LinearMap::identity(&f, 4)).unwrap());
        assert_eq!(
            poly_annihilates(&FpPoly::x_pow_minus_one(3, 1), &d).unwrap_err(),
            Error::CharacteristicMismatch { left: 3, right: 2 }
        );
    }

    #[test]
    fn non_square_rejected() {
        let (f, _) = f4();
        let rows = vec![vec![FqElem::one(&f); 2]; 3];
        assert!(LinearMap::new(&f, rows).is_err());
    }

    #[test]
    fn subspace_rank() {
        let f = make_field(5, 1).unwrap();
        let e = |v: &[i64]| v.iter().map(|&c| FqElem::from_i64(&f, c)).collect::<Vec<_>>();
        let mut s = Subspace::new(&f, 3);
        assert!(s.insert(e(&[1, 2, 3])));
        assert!(s.insert(e(&[0, 1, 1])));
        assert!(!s.insert(e(&[2, 5, 7])));
        assert!(s.contains(&e(&[1, 3, 4])));
        assert!(!s.contains(&e(&[0, 0, 1])));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn direct_sum_orders_combine() {
        let (f, w) = f4();
        let d = LinearMap::diagonal(&f, &[w.clone()]);
        let s = d.direct_sum(&LinearMap::cyclic_shift(&f, 2)).unwrap();
        assert_eq!(map_order(&s, 100).unwrap(), Some(6));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn power(d: &LinearMap, e: u64) -> LinearMap {
            (0..e).fold(LinearMap::identity(d.field(), d.dim()), |acc, _| acc.compose(d).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]

            #[test]
            fn order_is_minimal(entries in prop::collection::vec(0i64..3, 9)) {
                let f = make_field(3, 1).unwrap();
                let rows = entries
                    .chunks(3)
                    .map(|r| r.iter().map(|&c| FqElem::from_i64(&f, c)).collect())
                    .collect();
                let d = LinearMap::new(&f, rows).unwrap();
                match map_order(&d, 1000).unwrap() {
                    Some(e) => {
                        prop_assert!(power(&d, e).is_identity());
                        for l in (2..=e).filter(|l| e % l == 0 && (2..*l).all(|q| l % q != 0)) {
                            prop_assert!(!power(&d, e / l).is_identity());
                        }
                    }
                    // GL_3(F_3) has exponent well below the cap
                    None => prop_assert!(!d.is_invertible()),
                }
            }
        }
    }
}
