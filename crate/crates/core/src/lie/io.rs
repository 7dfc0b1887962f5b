//! JSON files for algebras and linear maps.
//!
//! ```json
//! {"p":2,"k":2,"modulus":"t^2+t+1","dim":3,
//!  "bracket":[{"i":1,"j":2,"value":["0","0","1"]}]}
//! {"p":2,"k":2,"modulus":"t^2+t+1","rows":[["1","0"],["0","u"]]}
//! ```
//!
//! Field elements are polynomials in the generator `u`; indices are 1-based
//! and only `i < j` brackets are listed. Without `modulus` the canonical
//! field of order `p^k` is used.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::ffield::{make_field, FpPoly, FqElem, FqField};
use crate::poly::parse_poly_var;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    #[serde(default = "one")]
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub p: u64,
    #[serde(default = "one")]
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub rows: Vec<Vec<String>>,
}

fn one() -> u32 {
    1
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::InvalidArgument(format!("malformed JSON: {e}"))
}

fn field_for(p: u64, k: u32, modulus: Option<&str>) -> Result<Arc<FqField>> {
    let Some(text) = modulus else {
        return make_field(p, k);
    };
    let poly = parse_poly_var(text, 't').or_else(|_| parse_poly_var(text, 'u'))?;
    let field = FqField::with_modulus(FpPoly::from_int_poly(&poly, p))?;
    if field.k() != k {
        return Err(Error::InvalidArgument(format!(
            "modulus {text} has degree {}, expected k = {k}",
            field.k()
        )));
    }
    Ok(field)
}

/// Field element from a polynomial in `u`, reduced modulo `p` and the
/// field's modulus.
pub fn parse_element(field: &Arc<FqField>, text: &str) -> Result<FqElem> {
    let poly = parse_poly_var(text, 'u')?;
    FqElem::new(field, &FpPoly::from_int_poly(&poly, field.p()))
}

fn modulus_text(field: &FqField) -> Option<String> {
    (field.k() > 1).then(|| field.modulus().to_expr('t'))
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(bad_json)?;
    let field = field_for(file.p, file.k, file.modulus.as_deref())?;
    let mut entries = Vec::with_capacity(file.bracket.len());
    for e in &file.bracket {
        if e.i == 0 || e.j == 0 {
            return Err(Error::InvalidArgument("bracket indices are 1-based".into()));
        }
        if e.value.len() != file.dim {
            return Err(Error::DimensionMismatch {
                expected: file.dim,
                found: e.value.len(),
            });
        }
        let v = e
            .value
            .iter()
            .map(|s| parse_element(&field, s))
            .collect::<Result<Vec<_>>>()?;
        entries.push((e.i - 1, e.j - 1, v));
    }
    LieAlgebra::from_upper(&field, file.dim, &entries)
}

pub fn algebra_to_json(alg: &LieAlgebra) -> AlgebraFile {
    let field = alg.field();
    let mut bracket = Vec::new();
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            let v = alg.bracket_basis(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                bracket.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    value: v.iter().map(FqElem::to_string).collect(),
                });
            }
        }
    }
    AlgebraFile {
        p: field.p(),
        k: field.k(),
        modulus: modulus_text(field),
        dim: alg.dim(),
        bracket,
    }
}

pub fn map_from_json(text: &str) -> Result<LinearMap> {
    let file: MapFile = serde_json::from_str(text).map_err(bad_json)?;
    let field = field_for(file.p, file.k, file.modulus.as_deref())?;
    let rows = file
        .rows
        .iter()
        .map(|r| r.iter().map(|s| parse_element(&field, s)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    LinearMap::new(&field, rows)
}

pub fn map_to_json(d: &LinearMap) -> MapFile {
    let field = d.field();
    MapFile {
        p: field.p(),
        k: field.k(),
        modulus: modulus_text(field),
        rows: d
            .rows()
            .iter()
            .map(|r| r.iter().map(FqElem::to_string).collect())
            .collect(),
    }
}
