use std::sync::Arc;

use super::{LieAlgebra, LinearMap};
use crate::error::{Error, Result};
use crate::ffield::{FqElem, FqField};
use crate::shalev::{find_progression, Progression};

fn unit(field: &Arc<FqField>, dim: usize, k: usize) -> Vec<FqElem> {
    let mut v = vec![FqElem::zero(field); dim];
    v[k] = FqElem::one(field);
    v
}

pub fn abelian(field: &Arc<FqField>, dim: usize) -> LieAlgebra {
    LieAlgebra::from_upper(field, dim, &[]).expect("zero bracket is a Lie algebra")
}

/// Basis `x, y, z` with `[x, y] = z`.
pub fn heisenberg(field: &Arc<FqField>) -> LieAlgebra {
    LieAlgebra::from_upper(field, 3, &[(0, 1, unit(field, 3, 2))]).expect("Heisenberg algebra")
}

/// `W(1;2)` in characteristic 2: `[x1,x2] = x3`, `[x1,x3] = x2`, `[x2,x3] = x1`.
pub fn build_w12(field: &Arc<FqField>) -> Result<LieAlgebra> {
    if field.p() != 2 {
        return Err(Error::CharacteristicMismatch {
            left: field.p(),
            right: 2,
        });
    }
    LieAlgebra::from_upper(
        field,
        3,
        &[
            (0, 1, unit(field, 3, 2)),
            (0, 2, unit(field, 3, 1)),
            (1, 2, unit(field, 3, 0)),
        ],
    )
}

/// `diag(1, lambda, 1 + lambda)`.
pub fn w12_derivation(field: &Arc<FqField>, lambda: &FqElem) -> Result<LinearMap> {
    if !lambda.in_field(field) {
        return Err(Error::FieldMismatch);
    }
    let one = FqElem::one(field);
    Ok(LinearMap::diagonal(field, &[one.clone(), lambda.clone(), &one + lambda]))
}

fn pair_index(m: usize, i: usize, j: usize) -> usize {
    // position of (i, j), i < j, in lexicographic order, after the m generators
    m + i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// Free nilpotent algebra of class 2 on `m` generators: basis
/// `x_1..x_m, y_ij (i < j)` with `[x_i, x_j] = y_ij` and `y` central.
pub fn build_free_nilpotent2(m: usize, field: &Arc<FqField>) -> Result<LieAlgebra> {
    if m < 2 {
        return Err(Error::InvalidArgument("need at least 2 generators".into()));
    }
    let dim = m + m * (m - 1) / 2;
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            entries.push((i, j, unit(field, dim, pair_index(m, i, j))));
        }
    }
    LieAlgebra::from_upper(field, dim, &entries)
}

/// The derivation of the free class-2 algebra that acts as `a` on the
/// generators.
pub fn derivation_extend(a: &LinearMap) -> Result<LinearMap> {
    let m = a.dim();
    if m < 2 {
        return Err(Error::InvalidArgument("need at least 2 generators".into()));
    }
    let field = a.field();
    let dim = m + m * (m - 1) / 2;
    let mut rows = vec![vec![FqElem::zero(field); dim]; dim];
    for i in 0..m {
        for j in 0..m {
            rows[i][j] = a.entry(i, j).clone();
        }
    }
    // [x_k, x_l] as (index, sign) or None when k == l
    let br = |k: usize, l: usize| -> Option<(usize, bool)> {
        match k.cmp(&l) {
            std::cmp::Ordering::Less => Some((pair_index(m, k, l), false)),
            std::cmp::Ordering::Greater => Some((pair_index(m, l, k), true)),
            std::cmp::Ordering::Equal => None,
        }
    };
    for i in 0..m {
        for j in i + 1..m {
            let col = pair_index(m, i, j);
            for k in 0..m {
                for (c, pair) in [(a.entry(k, i), br(k, j)), (a.entry(k, j), br(i, k))] {
                    if let Some((row, neg)) = pair {
                        let c = if neg { -c } else { c.clone() };
                        rows[row][col] = &rows[row][col] + &c;
                    }
                }
            }
        }
    }
    LinearMap::new(field, rows)
}

/// `ad(e_i)`, 0-based.
pub fn ad(alg: &LieAlgebra, i: usize) -> LinearMap {
    let n = alg.dim();
    let cols: Vec<Vec<FqElem>> = (0..n).map(|j| alg.bracket_basis(i, j)).collect();
    let rows = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    LinearMap::new(alg.field(), rows).expect("square")
}

/// Direct sum of algebras, `a` first.
pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra> {
    if **a.field() != **b.field() {
        return Err(Error::FieldMismatch);
    }
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let mut entries = Vec::new();
    let embed = |v: Vec<FqElem>, offset: usize| {
        let mut out = vec![FqElem::zero(field); dim];
        for (k, c) in v.into_iter().enumerate() {
            out[offset + k] = c;
        }
        out
    };
    for (alg, offset) in [(a, 0), (b, da)] {
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                let v = alg.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    entries.push((offset + i, offset + j, embed(v, offset)));
                }
            }
        }
    }
    LieAlgebra::from_upper(field, dim, &entries)
}

/// A non-nilpotent algebra with a nonsingular derivation `D` satisfying
/// `D^n = id`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub n: u64,
    pub p: u64,
    pub algebra: LieAlgebra,
    pub derivation: LinearMap,
    pub progression: Progression,
}

/// Basis `y, v_0..v_{p-1}` with `[y, v_i] = v_{i+1 mod p}` and
/// `D = diag(1, alpha, alpha+1, ..., alpha+p-1)`, where `alpha` comes from
/// the progression of `n` in `B_p`. `None` when `n` is not in `B_p`.
pub fn build_witness(n: u64, p: u64, cap_k: u64) -> Result<Option<Witness>> {
    let Some(progression) = find_progression(n, p, cap_k)? else {
        return Ok(None);
    };
    let field = &progression.field;
    let pu = p as usize;
    let dim = pu + 1;
    let entries: Vec<_> = (0..pu)
        .map(|i| (0, 1 + i, unit(field, dim, 1 + (i + 1) % pu)))
        .collect();
    let algebra = LieAlgebra::from_upper(field, dim, &entries)?;
    let mut diag = vec![progression.beta.clone()];
    let mut x = progression.alpha.clone();
    for _ in 0..p {
        diag.push(x.clone());
        x = &x + &progression.beta;
    }
    let derivation = LinearMap::diagonal(field, &diag);
    Ok(Some(Witness {
        n,
        p,
        algebra,
        derivation,
        progression,
    }))
}

/// Append the abelian algebra `K^n` with the cyclic shift, so a derivation
/// with `D^n = id` gets order exactly `n`.
pub fn pad_to_exact_order(
    alg: &LieAlgebra,
    d: &LinearMap,
    n: u64,
) -> Result<(LieAlgebra, LinearMap)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let field = alg.field();
    let padded = direct_sum(alg, &abelian(field, n as usize))?;
    let dd = d.direct_sum(&LinearMap::cyclic_shift(field, n as usize))?;
    Ok((padded, dd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_field, FpPoly};
    use crate::invariants::{rho, theorem36_bound, Theorem36Verdict};
    use crate::lie::{map_order, poly_annihilates, NilpotencyVerdict};
    use crate::shalev::{in_Bp, DEFAULT_CAP_K};
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn w12_with_cube_root_of_unity() {
        let f = make_field(2, 2).unwrap();
        let w = build_w12(&f).unwrap();
        let d = w12_derivation(&f, &FqElem::generator(&f)).unwrap();
        assert!(w.is_derivation(&d).unwrap());
        assert_eq!(map_order(&d, 100).unwrap(), Some(3));
        assert_eq!(w.nilpotency_class().verdict, NilpotencyVerdict::NonNilpotent);
        assert!(build_w12(&make_field(3, 1).unwrap()).is_err());
    }

    #[test]
    fn w12_over_f2_is_singular() {
        let f = make_field(2, 1).unwrap();
        let d = w12_derivation(&f, &FqElem::one(&f)).unwrap();
        assert!(!d.is_invertible());
        assert_eq!(map_order(&d, 100).unwrap(), None);
    }

    #[test]
    fn w12_order_seven() {
        let pr = find_progression(7, 2, DEFAULT_CAP_K).unwrap().unwrap();
        assert_eq!(pr.field.k(), 3);
        let w = build_w12(&pr.field).unwrap();
        let d = w12_derivation(&pr.field, &pr.alpha).unwrap();
        assert!(w.is_derivation(&d).unwrap());
        assert_eq!(map_order(&d, 100).unwrap(), Some(7));
    }

    fn neg_three_cycle(f: &Arc<FqField>) -> LinearMap {
        let m = FqElem::from_i64(f, -1);
        let z = FqElem::zero(f);
        LinearMap::new(
            f,
            vec![
                vec![z.clone(), z.clone(), m.clone()],
                vec![m.clone(), z.clone(), z.clone()],
                vec![z.clone(), m, z],
            ],
        )
        .unwrap()
    }

    #[test]
    fn free_nilpotent_order_six() {
        let f = make_field(3, 1).unwrap();
        let g = build_free_nilpotent2(3, &f).unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(g.nilpotency_class().verdict, NilpotencyVerdict::Class(2));
        let d = derivation_extend(&neg_three_cycle(&f)).unwrap();
        assert!(g.is_derivation(&d).unwrap());
        assert_eq!(map_order(&d, 100).unwrap(), Some(6));
        let zero = derivation_extend(&LinearMap::zero(&f, 3)).unwrap();
        assert!(zero.is_zero());
        assert!(poly_annihilates(&FpPoly::x(3), &zero).unwrap());
        assert!(build_free_nilpotent2(1, &f).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = build_witness(3, 2, DEFAULT_CAP_K).unwrap().unwrap();
        assert_eq!(w.algebra.dim(), 3);
        assert_eq!(w.progression.field.k(), 2);
        assert!(w.algebra.is_derivation(&w.derivation).unwrap());
        assert_eq!(w.algebra.nilpotency_class().verdict, NilpotencyVerdict::NonNilpotent);
        assert!(poly_annihilates(&FpPoly::x_pow_minus_one(2, 3), &w.derivation).unwrap());
        assert!(build_witness(5, 2, DEFAULT_CAP_K).unwrap().is_none());
        let w = build_witness(8, 3, DEFAULT_CAP_K).unwrap().unwrap();
        assert_eq!(w.algebra.dim(), 4);
        assert!(poly_annihilates(&FpPoly::x_pow_minus_one(3, 8), &w.derivation).unwrap());
        assert_eq!(w.algebra.nilpotency_class().verdict, NilpotencyVerdict::NonNilpotent);
    }

    #[test]
    fn padded_witness_has_exact_order() {
        for (n, p) in [(3u64, 2u64), (6, 2), (7, 2), (8, 3), (9, 2), (12, 2)] {
            let w = build_witness(n, p, DEFAULT_CAP_K).unwrap().unwrap();
            let (alg, d) = pad_to_exact_order(&w.algebra, &w.derivation, n).unwrap();
            assert!(alg.is_derivation(&d).unwrap());
            assert_eq!(map_order(&d, 1000).unwrap(), Some(n), "({n}, {p})");
            assert_eq!(alg.nilpotency_class().verdict, NilpotencyVerdict::NonNilpotent);
        }
    }

    #[test]
    fn witness_exists_exactly_for_members() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=12 {
                let w = build_witness(n, p, DEFAULT_CAP_K).unwrap();
                assert_eq!(w.is_some(), in_Bp(n, p).unwrap(), "({n}, {p})");
                if let Some(w) = w {
                    assert_eq!(theorem36_bound(n, p).unwrap(), Theorem36Verdict::NoConclusion);
                    assert!(w.algebra.is_derivation(&w.derivation).unwrap());
                }
            }
        }
    }

    #[test]
    fn ad_columns_are_brackets() {
        let f = make_field(5, 1).unwrap();
        let h = heisenberg(&f);
        let a = ad(&h, 0);
        assert_eq!(a.column(1), h.bracket_basis(0, 1));
        assert!(a.column(2).iter().all(FqElem::is_zero));
    }

    /// All diagonal derivations of `alg` with entries from `field`.
    fn diagonal_derivations(alg: &LieAlgebra) -> Vec<LinearMap> {
        let field = alg.field();
        let elems: Vec<FqElem> = FqElem::all(field).collect();
        let n = alg.dim();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let diag: Vec<FqElem> = idx.iter().map(|&i| elems[i].clone()).collect();
            let d = LinearMap::diagonal(field, &diag);
            if alg.is_derivation(&d).unwrap() {
                out.push(d);
            }
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn sample_algebras() -> Vec<LieAlgebra> {
        let f2 = make_field(2, 1).unwrap();
        let f4 = make_field(2, 2).unwrap();
        let f3 = make_field(3, 1).unwrap();
        let f5 = make_field(5, 1).unwrap();
        let f7 = make_field(7, 1).unwrap();
        let mut out = vec![
            build_w12(&f2).unwrap(),
            build_w12(&f4).unwrap(),
            heisenberg(&f3),
            heisenberg(&f5),
            heisenberg(&f7),
            heisenberg(&f4),
            abelian(&f5, 2),
            build_free_nilpotent2(3, &f3).unwrap(),
            build_free_nilpotent2(2, &f5).unwrap(),
        ];
        for (n, p) in [(3u64, 2u64), (8, 3)] {
            out.push(build_witness(n, p, DEFAULT_CAP_K).unwrap().unwrap().algebra);
        }
        out
    }

    #[test]
    fn eigenvector_brackets() {
        for alg in sample_algebras().iter().filter(|a| FqElem::all(a.field()).count().pow(a.dim() as u32) <= 5000) {
            let n = alg.dim();
            for d in diagonal_derivations(alg) {
                let ev = d.diagonal_entries().unwrap();
                for i in 0..n {
                    for j in 0..n {
                        let b = alg.bracket_basis(i, j);
                        let sum = &ev[i] + &ev[j];
                        let scaled: Vec<FqElem> = b.iter().map(|c| c * &sum).collect();
                        assert_eq!(d.apply(&b), scaled);
                    }
                }
            }
        }
    }

    #[test]
    fn periodic_derivations_respect_theorem36() {
        let mut checked = 0;
        let mut pairs: Vec<(LieAlgebra, LinearMap)> = Vec::new();
        for alg in sample_algebras().iter().filter(|a| FqElem::all(a.field()).count().pow(a.dim() as u32) <= 5000) {
            for d in diagonal_derivations(alg) {
                pairs.push((alg.clone(), d));
            }
        }
        let f3 = make_field(3, 1).unwrap();
        let g = build_free_nilpotent2(3, &f3).unwrap();
        pairs.push((g, derivation_extend(&neg_three_cycle(&f3)).unwrap()));
        for (n, p) in [(3u64, 2u64), (6, 2), (7, 2), (8, 3), (9, 2), (12, 2)] {
            let w = build_witness(n, p, DEFAULT_CAP_K).unwrap().unwrap();
            pairs.push(pad_to_exact_order(&w.algebra, &w.derivation, n).unwrap());
        }
        for (alg, d) in pairs {
            let Some(n) = map_order(&d, 10_000).unwrap() else {
                continue;
            };
            checked += 1;
            let verdict = theorem36_bound(n, alg.field().p()).unwrap();
            let class = alg.nilpotency_class().class();
            if let Some(bound) = verdict.class_bound() {
                assert!(matches!(class, Some(c) if c <= bound), "n = {n}, p = {}", alg.field().p());
            }
            if class.is_none() {
                assert_eq!(verdict, Theorem36Verdict::NoConclusion);
                assert!((rho(n).unwrap() % BigInt::from(alg.field().p())).is_zero());
            }
        }
        assert!(checked > 20);
    }

    #[test]
    fn nonsingular_maps_on_nilpotent_examples() {
        // constant term of the characteristic polynomial is +-det, nonzero
        // exactly when the map is invertible
        let f3 = make_field(3, 1).unwrap();
        let d = derivation_extend(&neg_three_cycle(&f3)).unwrap();
        assert!(d.is_invertible());
        let f4 = make_field(2, 2).unwrap();
        let w = build_w12(&f4).unwrap();
        let d = w12_derivation(&f4, &FqElem::generator(&f4)).unwrap();
        assert!(d.is_invertible() && w.nilpotency_class().class().is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn generator_maps_extend(m in 2usize..5, seed in prop::collection::vec(0i64..5, 16)) {
                let f = make_field(5, 1).unwrap();
                let g = build_free_nilpotent2(m, &f).unwrap();
                let rows = (0..m)
                    .map(|i| (0..m).map(|j| FqElem::from_i64(&f, seed[i * 4 + j])).collect())
                    .collect();
                let d = derivation_extend(&LinearMap::new(&f, rows).unwrap()).unwrap();
                prop_assert!(g.is_derivation(&d).unwrap());
            }
        }
    }
}
