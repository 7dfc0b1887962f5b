//! Finite-dimensional Lie algebras over finite fields, given by structure
//! constants, and derivations acting on them.

mod builders;
mod io;
mod linear;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{FqElem, FqField};

pub use builders::{
    abelian, ad, build_free_nilpotent2, build_w12, build_witness, derivation_extend, direct_sum,
    heisenberg, pad_to_exact_order, w12_derivation, Witness,
};
pub use io::{
    algebra_from_json, algebra_to_json, map_from_json, map_to_json, parse_element, AlgebraFile,
    MapFile,
};
pub use linear::{map_order, poly_annihilates, LinearMap, Subspace};

/// Sparse vector: `(basis index, nonzero coefficient)`, indices ascending.
type Sparse = Vec<(usize, FqElem)>;

/// Lie algebra with basis `e_1..e_dim` and `[e_i, e_j] = sum_k c_ij^k e_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    field: Arc<FqField>,
    dim: usize,
    table: Vec<Vec<Sparse>>,
}

fn sparsify(v: &[FqElem]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Validated algebra from a full table: `bracket[i][j]` holds the
/// coordinates of `[e_i, e_j]`. Antisymmetry and the Jacobi identity are
/// checked on every pair and triple; reported indices are 1-based.
pub fn make_algebra(
    field: &Arc<FqField>,
    dim: usize,
    bracket: &[Vec<Vec<FqElem>>],
) -> Result<LieAlgebra> {
    if bracket.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bracket.len(),
        });
    }
    let mut table = Vec::with_capacity(dim);
    for row in bracket {
        if row.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: row.len(),
            });
        }
        let mut out = Vec::with_capacity(dim);
        for v in row {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().any(|c| !c.in_field(field)) {
                return Err(Error::FieldMismatch);
            }
            out.push(sparsify(v));
        }
        table.push(out);
    }
    let alg = LieAlgebra {
        field: field.clone(),
        dim,
        table,
    };
    alg.validate()?;
    Ok(alg)
}

impl LieAlgebra {
    /// Build from the entries with `i < j` (0-based); the rest follows by
    /// antisymmetry.
    pub fn from_upper(
        field: &Arc<FqField>,
        dim: usize,
        entries: &[(usize, usize, Vec<FqElem>)],
    ) -> Result<Self> {
        let zero = vec![FqElem::zero(field); dim];
        let mut full = vec![vec![zero; dim]; dim];
        for (i, j, v) in entries {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim || v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j).max(v.len()),
                });
            }
            if i >= j {
                return Err(Error::InvalidArgument(format!(
                    "bracket entries need i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            full[j][i] = v.iter().map(|c| -c).collect();
            full[i][j] = v.clone();
        }
        make_algebra(field, dim, &full)
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<FqElem> {
        self.densify(&self.table[i][j])
    }

    pub fn bracket(&self, u: &[FqElem], v: &[FqElem]) -> Vec<FqElem> {
        self.densify(&self.bracket_sparse(&sparsify(u), &sparsify(v)))
    }

    /// Whether every bracket vanishes.
    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(Vec::is_empty)
    }

    fn densify(&self, v: &Sparse) -> Vec<FqElem> {
        let mut out = vec![FqElem::zero(&self.field); self.dim];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        out
    }

    fn bracket_sparse(&self, u: &Sparse, v: &Sparse) -> Sparse {
        let mut acc = vec![FqElem::zero(&self.field); self.dim];
        for (a, x) in u {
            for (b, y) in v {
                let xy = x * y;
                for (k, c) in &self.table[*a][*b] {
                    acc[*k] = &acc[*k] + &(&xy * c);
                }
            }
        }
        sparsify(&acc)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            if !self.table[i][i].is_empty() {
                return Err(Error::Antisymmetry { i: i + 1, j: i + 1 });
            }
            for j in i + 1..self.dim {
                let neg: Sparse = self.table[j][i].iter().map(|(k, c)| (*k, -c)).collect();
                if neg != self.table[i][j] {
                    return Err(Error::Antisymmetry { i: i + 1, j: j + 1 });
                }
            }
        }
        let basis = |i: usize| vec![(i, FqElem::one(&self.field))];
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut sum = vec![FqElem::zero(&self.field); self.dim];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = &self.table[a][b];
                        for (m, x) in self.bracket_sparse(inner, &basis(c)) {
                            sum[m] = &sum[m] + &x;
                        }
                    }
                    if sum.iter().any(|x| !x.is_zero()) {
                        return Err(Error::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_map(&self, d: &LinearMap) -> Result<()> {
        if **d.field() != *self.field {
            return Err(Error::FieldMismatch);
        }
        if d.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: d.dim(),
            });
        }
        Ok(())
    }

    /// First pair `(i, j)`, `i < j`, 1-based, where the derivation law
    /// `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]` fails.
    pub fn derivation_violation(&self, d: &LinearMap) -> Result<Option<(usize, usize)>> {
        self.check_map(d)?;
        let cols: Vec<Sparse> = (0..self.dim).map(|j| sparsify(&d.column(j))).collect();
        let basis = |i: usize| vec![(i, FqElem::one(&self.field))];
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = sparsify(&d.apply(&self.bracket_basis(i, j)));
                let mut rhs = vec![FqElem::zero(&self.field); self.dim];
                for part in [
                    self.bracket_sparse(&cols[i], &basis(j)),
                    self.bracket_sparse(&basis(i), &cols[j]),
                ] {
                    for (k, c) in part {
                        rhs[k] = &rhs[k] + &c;
                    }
                }
                if lhs != sparsify(&rhs) {
                    return Ok(Some((i + 1, j + 1)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_derivation(&self, d: &LinearMap) -> Result<bool> {
        Ok(self.derivation_violation(d)?.is_none())
    }

    /// Lower central series `g, [g,g], [g,[g,g]], ...` by row reduction.
    pub fn nilpotency_class(&self) -> NilpotencyReport {
        let mut current = Subspace::new(&self.field, self.dim);
        for i in 0..self.dim {
            let mut e = vec![FqElem::zero(&self.field); self.dim];
            e[i] = FqElem::one(&self.field);
            current.insert(e);
        }
        let mut dims = vec![current.dim()];
        loop {
            if current.dim() == 0 {
                return NilpotencyReport {
                    verdict: NilpotencyVerdict::Class(dims.len() - 1),
                    series_dims: dims,
                };
            }
            let mut next = Subspace::new(&self.field, self.dim);
            for b in current.basis() {
                let b = sparsify(b);
                for i in 0..self.dim {
                    let v = self.bracket_sparse(&vec![(i, FqElem::one(&self.field))], &b);
                    if !v.is_empty() {
                        next.insert(self.densify(&v));
                    }
                }
            }
            if next.dim() == current.dim() {
                return NilpotencyReport {
                    series_dims: dims,
                    verdict: NilpotencyVerdict::NonNilpotent,
                };
            }
            dims.push(next.dim());
            current = next;
        }
    }
}

/// Outcome of the lower central series computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "class")]
pub enum NilpotencyVerdict {
    Class(usize),
    NonNilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    /// Dimensions of the series terms until they vanish or stop shrinking.
    pub series_dims: Vec<usize>,
    pub verdict: NilpotencyVerdict,
}

impl NilpotencyReport {
    pub fn class(&self) -> Option<usize> {
        match self.verdict {
            NilpotencyVerdict::Class(c) => Some(c),
            NilpotencyVerdict::NonNilpotent => None,
        }
    }
}
