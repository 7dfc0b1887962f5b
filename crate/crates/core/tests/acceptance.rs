//! End-to-end checks of the published numbers and structural claims. Each
//! criterion runs against a wall-clock budget and prints one status line.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use derinv::ffield::{make_field, FpPoly, FqElem, FqField};
use derinv::invariants::{
    cyclo_resultant, cyclo_resultant_direct, delta, factor_int, rho, rho_prime_divisors, sigma,
    theorem36_bound, wendt, Theorem36Verdict,
};
use derinv::lie::{
    abelian, build_free_nilpotent2, build_w12, build_witness, derivation_extend, heisenberg,
    map_order, pad_to_exact_order, poly_annihilates, w12_derivation, LieAlgebra, LinearMap,
};
use derinv::lie::NilpotencyVerdict;
use derinv::shalev::{
    find_progression, h_np, h_np_chain, in_Bp, is_arith_free, pp_element, pp_family,
    roots_of_unity, DEFAULT_CAP_K,
};
use derinv::{parse_poly, IntPoly};

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(s: &str) -> IntPoly {
    parse_poly(s).unwrap()
}

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

const RHO_SMALL: [(u64, &str, &str); 10] = [
    (1, "1", "1"),
    (2, "-3", "-3"),
    (3, "28", "2^2 * 7"),
    (4, "-375", "-3 * 5^3"),
    (5, "3751", "11^2 * 31"),
    (7, "6835648", "2^6 * 29^2 * 127"),
    (8, "-1343091375", "-3^7 * 5^3 * 17^3"),
    (9, "364668913756", "2^2 * 7 * 19^4 * 37^2 * 73"),
    (10, "-210736858987743", "-3 * 11^9 * 31^3"),
    (11, "101832157445630503", "23^5 * 67^2 * 89 * 199^2"),
];

const RHO_SIX: [(u64, &str); 6] = [
    (6, "-2^2 * 3 * 7^3"),
    (12, "-2^10 * 3 * 5^3 * 7^3 * 13^9"),
    (18, "-2^2 * 3^12 * 7^3 * 19^15 * 37^6 * 73^3"),
    (24, "-2^30 * 3^31 * 5^21 * 7^9 * 13^9 * 17^3 * 73^6 * 241^3"),
    (30, "-2^50 * 3 * 5^8 * 7^3 * 11^9 * 31^27 * 61^12 * 151^3 * 271^6 * 331^3"),
    (36, "-2^10 * 3^12 * 5^3 * 7^3 * 13^9 * 17^6 * 19^15 * 37^33 * 73^15 * 109^9 * 181^6 * 757^6"),
];

const MEMBERS: [(u64, u64); 6] = [(3, 2), (6, 2), (7, 2), (8, 3), (9, 2), (12, 2)];

fn c1() -> Check {
    for (n, value, factors) in RHO_SMALL {
        let r = rho(n).map_err(|e| e.to_string())?;
        ensure(r == big(value), || format!("rho({n}) = {r}, expected {value}"))?;
        let f = factor_int(&r).map_err(|e| e.to_string())?.to_string();
        ensure(f == factors, || format!("factor rho({n}) = {f}, expected {factors}"))?;
    }
    Ok(())
}

fn c2() -> Check {
    for (n, factors) in RHO_SIX {
        let f = factor_int(&rho(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(f.to_string() == factors, || format!("rho({n}) = {f}, expected {factors}"))?;
    }
    let f36 = factor_int(&rho(36).unwrap()).unwrap();
    ensure(f36.exponent_of(&BigUint::from(757u32)) == 6, || "757^6 missing from rho_36".into())
}

fn c3() -> Check {
    for n in (1..=11).filter(|n| n % 6 != 0) {
        ensure(wendt(n).unwrap() == rho(n).unwrap(), || format!("wendt({n}) != rho({n})"))?;
    }
    ensure(wendt(6).unwrap().is_zero() && wendt(12).unwrap().is_zero(), || {
        "wendt(6) or wendt(12) nonzero".into()
    })
}

fn c4() -> Check {
    let rhos: Vec<BigInt> = (1..=24).map(|n| rho(n).unwrap()).collect();
    for n in 1..=24usize {
        for m in (1..=n).filter(|m| n % m == 0) {
            ensure((&rhos[n - 1] % &rhos[m - 1]).is_zero(), || format!("rho({m}) does not divide rho({n})"))?;
        }
    }
    Ok(())
}

fn c5() -> Check {
    for n in 1..=10u64 {
        let sign = if (n * (n - 1) / 2 + n - 1) % 2 == 0 { 1 } else { -1 };
        let expect = BigInt::from(sign) * BigInt::from(n).pow(n as u32);
        let got = delta(&IntPoly::x_pow_minus_one(n as usize)).unwrap();
        ensure(got == expect, || format!("delta(t^{n}-1) = {got}, expected {expect}"))?;
    }
    Ok(())
}

fn c6() -> Check {
    for n in [1u64, 2, 3, 4, 5, 7, 8] {
        let expect = (-rho(n).unwrap()).pow(n as u32);
        let got = sigma(&IntPoly::x_pow_minus_one(n as usize)).unwrap();
        ensure(got == expect, || format!("sigma(t^{n}-1) = {got}, expected {expect}"))?;
    }
    for n in [6u64, 12] {
        let base = BigInt::from(n * n) * rho(n).unwrap();
        let (q, rem) = base.div_rem(&BigInt::from(3));
        ensure(rem.is_zero(), || format!("3 does not divide n^2 rho_{n}"))?;
        let expect = q.pow(n as u32);
        let got = sigma(&IntPoly::x_pow_minus_one(n as usize)).unwrap();
        ensure(got == expect, || format!("sigma(t^{n}-1) = {got}, expected {expect}"))?;
    }
    Ok(())
}

fn c7() -> Check {
    for n in 1..=18u64 {
        for m in 1..=n {
            let closed = cyclo_resultant(m, n).unwrap();
            let direct = cyclo_resultant_direct(m, n).unwrap();
            ensure(closed.abs() == direct.abs(), || {
                format!("R(Phi_{m}, Phi_{n}): closed {closed}, direct {direct}")
            })?;
        }
    }
    for n in [6u64, 12, 18] {
        let prod: BigInt = (1..=n)
            .filter(|d| n % d == 0 && *d != 3)
            .map(|d| if d < 3 { cyclo_resultant(d, 3).unwrap() } else { cyclo_resultant(3, d).unwrap() })
            .product();
        let expect = BigInt::from(n * n / 3);
        ensure(prod.abs() == expect, || format!("divisor product for {n}: {prod}"))?;
    }
    Ok(())
}

fn c8() -> Check {
    let table = [
        ("t+1", 3u64),
        ("t^3+t+1", 7),
        ("t^4+t^3+t^2+t+1", 85),
        ("t^5+t^2+1", 31),
        ("t^7+t+1", 127),
        ("t^9+t^4+t^2+t+1", 73),
    ];
    for (h, per) in table {
        let got = pp_element(&FpPoly::from_int_poly(&poly(h), 2)).unwrap();
        ensure(got == BigUint::from(per), || format!("per({h}(t^2-t)) = {got}, expected {per}"))?;
    }
    for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (5, 2)] {
        let h = pp_family(p, k).unwrap();
        let got = pp_element(&h).unwrap();
        let expect = BigUint::from(p.pow(k) - 1);
        ensure(got == expect, || format!("family ({p}, {k}): {got}, expected {expect}"))?;
    }
    Ok(())
}

fn c9() -> Check {
    for p in [2u64, 3, 5] {
        for n in 1..=20u64 {
            let direct = !h_np(n, p).unwrap().is_one();
            let (h, _) = h_np_chain(n, p).unwrap();
            let chain = !h.is_one();
            let (field, roots) = roots_of_unity(n, p, DEFAULT_CAP_K).map_err(|e| e.to_string())?;
            let brute = !is_arith_free(&roots, &field).unwrap();
            ensure(direct == chain && chain == brute, || {
                format!("(n, p) = ({n}, {p}): gcd {direct}, chain {chain}, brute force {brute}")
            })?;
        }
    }
    Ok(())
}

fn c10() -> Check {
    let mut found = Vec::new();
    for n in 1..=12u64 {
        for p in rho_prime_divisors(n).unwrap() {
            if in_Bp(n, p).unwrap() {
                found.push((n, p));
            }
        }
    }
    ensure(found == MEMBERS, || format!("members {found:?}"))
}

fn c11() -> Check {
    for n in 1..=30u64 {
        let member = in_Bp(n, 2).unwrap();
        let even = rho(n).unwrap().is_even();
        ensure(member == even, || format!("n = {n}: in B_2 {member}, 2 | rho {even}"))?;
        if !member {
            continue;
        }
        let pr = find_progression(n, 2, DEFAULT_CAP_K).map_err(|e| format!("n = {n}: {e}"))?.unwrap();
        let w = build_w12(&pr.field).unwrap();
        let d = w12_derivation(&pr.field, &pr.alpha).unwrap();
        ensure(w.is_derivation(&d).unwrap(), || format!("n = {n}: not a derivation"))?;
        let order = map_order(&d, 1 << 20).unwrap();
        ensure(matches!(order, Some(k) if n % k == 0), || format!("n = {n}: order {order:?}"))?;
        ensure(w.nilpotency_class().verdict == NilpotencyVerdict::NonNilpotent, || {
            format!("n = {n}: W(1;2) nilpotent")
        })?;
    }
    Ok(())
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

fn c12() -> Check {
    let f4 = make_field(2, 2).unwrap();
    let w = build_w12(&f4).map_err(|e| e.to_string())?;
    let omega = FqElem::generator(&f4);
    let one = FqElem::one(&f4);
    let d = LinearMap::diagonal(&f4, &[one.clone(), omega.clone(), &one + &omega]);
    ensure(w.is_derivation(&d).unwrap(), || "diag(1, w, 1+w) is not a derivation".into())?;
    ensure(map_order(&d, 100).unwrap() == Some(3), || "diag(1, w, 1+w) order".into())?;

    let f3 = make_field(3, 1).unwrap();
    let g = build_free_nilpotent2(3, &f3).unwrap();
    ensure(g.dim() == 6, || "free nilpotent dimension".into())?;
    ensure(g.nilpotency_class().class() == Some(2), || "free nilpotent class".into())?;
    let e = derivation_extend(&neg_three_cycle(&f3)).unwrap();
    ensure(g.is_derivation(&e).unwrap(), || "extension is not a derivation".into())?;
    ensure(map_order(&e, 100).unwrap() == Some(6), || "extension order".into())?;

    let h = heisenberg(&make_field(5, 1).unwrap());
    ensure(h.nilpotency_class().verdict == NilpotencyVerdict::Class(2), || "Heisenberg class".into())
}

fn c13() -> Check {
    for (n, p) in MEMBERS {
        let wit = build_witness(n, p, DEFAULT_CAP_K).unwrap().ok_or(format!("no witness for ({n}, {p})"))?;
        ensure(wit.algebra.is_derivation(&wit.derivation).unwrap(), || format!("({n}, {p}): not a derivation"))?;
        ensure(wit.algebra.nilpotency_class().verdict == NilpotencyVerdict::NonNilpotent, || {
            format!("({n}, {p}): nilpotent")
        })?;
        ensure(theorem36_bound(n, p).unwrap() == Theorem36Verdict::NoConclusion, || {
            format!("({n}, {p}): witness outside NoConclusion")
        })?;
        let r = FpPoly::x_pow_minus_one(p, n as usize);
        ensure(poly_annihilates(&r, &wit.derivation).unwrap(), || format!("({n}, {p}): r(D) != 0"))?;
        let (alg, d) = pad_to_exact_order(&wit.algebra, &wit.derivation, n).unwrap();
        ensure(alg.is_derivation(&d).unwrap(), || format!("({n}, {p}): padded map not a derivation"))?;
        ensure(map_order(&d, 10_000).unwrap() == Some(n), || format!("({n}, {p}): padded order"))?;
    }
    for p in [2u64, 3, 5, 7] {
        for n in 1..=12u64 {
            if !in_Bp(n, p).unwrap() {
                ensure(build_witness(n, p, DEFAULT_CAP_K).unwrap().is_none(), || {
                    format!("({n}, {p}): witness for a non-member")
                })?;
            }
        }
    }
    Ok(())
}

/// A periodic derivation of order `n` in characteristic `p` may only sit on
/// an algebra the verdict allows. `Ok(true)` when `d` was periodic.
fn respects_theorem36(alg: &LieAlgebra, d: &LinearMap) -> std::result::Result<bool, String> {
    if !alg.is_derivation(d).unwrap() {
        return Err("builder produced a non-derivation".into());
    }
    let Some(n) = map_order(d, 4096).unwrap() else {
        return Ok(false);
    };
    let p = alg.field().p();
    let verdict = theorem36_bound(n, p).unwrap();
    let class = alg.nilpotency_class().class();
    let ok = match verdict {
        Theorem36Verdict::NoConclusion => true,
        v => matches!(class, Some(c) if c <= v.class_bound().unwrap()),
    };
    ensure(ok, || format!("order {n}, p = {p}: verdict {verdict:?}, class {class:?}"))?;
    Ok(true)
}

/// Small deterministic generator for the map entries.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self, bound: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) % bound
    }
}

fn random_invertible(f: &Arc<FqField>, m: usize, rng: &mut Lcg) -> LinearMap {
    let elems: Vec<FqElem> = FqElem::all(f).collect();
    loop {
        let rows = (0..m)
            .map(|_| (0..m).map(|_| elems[rng.next(elems.len() as u64) as usize].clone()).collect())
            .collect();
        let a = LinearMap::new(f, rows).unwrap();
        if a.is_invertible() {
            return a;
        }
    }
}

fn c14() -> Check {
    let mut pairs: Vec<(LieAlgebra, LinearMap)> = Vec::new();
    let mut rng = Lcg(0x5eed);
    for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
        let f = make_field(p, k).unwrap();
        pairs.push((abelian(&f, 3), random_invertible(&f, 3, &mut rng)));
        for m in [2usize, 3] {
            let g = build_free_nilpotent2(m, &f).unwrap();
            for _ in 0..6 {
                let a = random_invertible(&f, m, &mut rng);
                pairs.push((g.clone(), derivation_extend(&a).unwrap()));
            }
        }
        let h = heisenberg(&f);
        let nonzero: Vec<FqElem> = FqElem::all(&f).filter(|x| !x.is_zero()).collect();
        for a in &nonzero {
            for b in &nonzero {
                let d = LinearMap::diagonal(&f, &[a.clone(), b.clone(), a + b]);
                pairs.push((h.clone(), d));
            }
        }
        if p == 2 {
            let w = build_w12(&f).unwrap();
            for x in FqElem::all(&f) {
                pairs.push((w.clone(), w12_derivation(&f, &x).unwrap()));
            }
        }
    }
    for (n, p) in MEMBERS {
        let wit = build_witness(n, p, DEFAULT_CAP_K).unwrap().unwrap();
        pairs.push(pad_to_exact_order(&wit.algebra, &wit.derivation, n).unwrap());
        pairs.push((wit.algebra, wit.derivation));
    }
    let f3 = make_field(3, 1).unwrap();
    pairs.push((build_free_nilpotent2(3, &f3).unwrap(), derivation_extend(&neg_three_cycle(&f3)).unwrap()));
    let mut periodic = 0;
    for (alg, d) in &pairs {
        periodic += usize::from(respects_theorem36(alg, d)?);
    }
    ensure(periodic > 100, || format!("only {periodic} periodic pairs"))
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Check, u64); 14] = [
        (1, "rho table and factorizations", c1, 10),
        (2, "factored rho for 6 | n", c2, 60),
        (3, "Wendt determinant cross-check", c3, 5),
        (4, "rho divisibility along divisors", c4, 30),
        (5, "delta closed form", c5, 5),
        (6, "sigma closed form", c6, 60),
        (7, "cyclotomic resultants", c7, 5),
        (8, "periods of h(t^p - t)", c8, 10),
        (9, "three-way B_p equivalence", c9, 60),
        (10, "B_p classification for n <= 12", c10, 30),
        (11, "B_2 and W(1;2) derivations for n <= 30", c11, 60),
        (12, "Lie engine examples", c12, 5),
        (13, "witness soundness", c13, 30),
        (14, "periodic derivations respect the class bound", c14, 10),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|_| {
            ensure(elapsed < Duration::from_secs(budget), || {
                format!("took {:.2} s, budget {budget} s", elapsed.as_secs_f64())
            })
        });
        let line = match &result {
            Ok(()) => format!("PASS criterion {id}: {name} ({:.2} s)", elapsed.as_secs_f64()),
            Err(e) => format!("FAIL criterion {id}: {name}: {e}"),
        };
        writeln!(out, "{line}").unwrap();
        if result.is_err() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
