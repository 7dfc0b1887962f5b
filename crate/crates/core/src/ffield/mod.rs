//! Finite fields: F_p polynomials, factorization, extension fields,
//! multiplicative orders and periods.

mod factor;
mod fp_poly;
mod fq;
mod period;
mod roots;

pub use factor::{
    distinct_degree, equal_degree, fp_factor, fp_factor_seeded, is_irreducible,
    set_seed_override, splitting_degree, squarefree_fp,
};
pub use fp_poly::FpPoly;
pub use fq::{element_order, make_field, FqElem, FqField};
pub use period::period;
pub use roots::fq_roots;
