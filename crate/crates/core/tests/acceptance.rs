//! One line per acceptance criterion; run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{g3, params};
use serde_json::json;
use wgroup_core::cohom::{cup, decomposable_h2, h1, h2};
use wgroup_core::graded::compare_field;
use wgroup_core::lie::{relation_rank_in_d3, witt_rank};
use wgroup_core::milnor::{symbol_algebra, FieldDescriptor};
use wgroup_core::qcentral::{find_isomorphism, series_quotient, series_term, third_quotient, to_table, FiniteGroupTable};
use wgroup_core::realizability::{
    principle_check, relators_in_third_series, wreath_construct, FactorSpec, Side, VerdictKind, WreathSpec,
};
use wgroup_core::{parse_presentation, Presentation};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

/// Upper unitriangular 3x3 matrices over Z/4.
fn heisenberg_z4() -> FiniteGroupTable {
    let idx = |a: usize, b: usize, c: usize| (a % 4) + 4 * (b % 4) + 16 * (c % 4);
    let mut mult = vec![0u32; 64 * 64];
    for x in 0..64 {
        let (a, b, c) = (x % 4, (x / 4) % 4, x / 16);
        for y in 0..64 {
            let (a2, b2, c2) = (y % 4, (y / 4) % 4, y / 16);
            mult[x * 64 + y] = idx(a + a2, b + b2, c + c2 + a * b2) as u32;
        }
    }
    FiniteGroupTable::new(64, mult, 0, vec![idx(1, 0, 0), idx(0, 1, 0)]).unwrap()
}

fn criterion1() -> Check {
    let mut orders = Vec::new();
    for (n, want) in [(1usize, 4u64), (2, 32), (3, 512)] {
        let t = to_table(&third_quotient(&Presentation::free("F", n), params(2), 512).map_err(e)?).map_err(e)?;
        ensure(t.order() as u64 == want, format!("n={n}: order {}", t.order()))?;
        ensure(t.nilpotency_class().is_some_and(|c| c <= 2), format!("n={n}: class"))?;
        ensure(4 % t.exponent() == 0, format!("n={n}: exponent {}", t.exponent()))?;
        if n <= 2 {
            ensure(series_term(&t, 3, params(2)).map_err(e)?.len() == 1, "G^(3) nontrivial")?;
            let explicit = if n == 1 { FiniteGroupTable::cyclic(8) } else { heisenberg_z4() };
            let (oracle, _) = series_quotient(&explicit, 3, params(2)).map_err(e)?;
            ensure(find_isomorphism(&oracle, &t).is_some(), format!("n={n}: oracle quotient differs"))?;
        }
        orders.push(t.order());
    }
    Ok(format!("orders {orders:?}"))
}

fn compare(f: &str, q: u64, dims: (usize, usize)) -> Check {
    let r = compare_field(&FieldDescriptor::parse(f, params(q)).map_err(e)?, 512).map_err(e)?;
    ensure(r.consistent, format!("{f}: {:?}", r.diff))?;
    ensure((r.galois.dim1, r.galois.dim2) == dims, format!("{f}: dims {} {}", r.galois.dim1, r.galois.dim2))?;
    ensure((r.milnor.dim1, r.milnor.dim2) == dims, format!("{f}: milnor dims"))?;
    Ok(format!("{f} {dims:?}"))
}

fn criterion2() -> Check {
    let mut out = Vec::new();
    for (f, dims) in [("Fq:5", (1, 0)), ("Qp:3", (2, 1)), ("R", (1, 1))] {
        let start = Instant::now();
        out.push(compare(f, 2, dims)?);
        ensure(start.elapsed() < Duration::from_secs(10), format!("{f} too slow"))?;
    }
    Ok(out.join(", "))
}

fn criterion3() -> Check {
    let a = symbol_algebra(&FieldDescriptor::parse("Qp:7", params(3)).map_err(e)?).map_err(e)?;
    ensure(a.k1_basis.len() == 2 && a.k2_invariants == [3], "k-groups of Q7")?;
    compare("Qp:7", 3, (2, 1))
}

fn criterion4() -> Check {
    let t = g3("group F { generators: x, y; relators: ; }", 2);
    let d = decomposable_h2(&t, params(2), 64).map_err(e)?;
    ensure(d.dimension == 0, format!("dec dim {}", d.dimension))?;
    let hh = h2(&t, params(2), 64).map_err(e)?;
    for a in &d.h1.space.basis {
        for b in &d.h1.space.basis {
            ensure(hh.is_zero_class(&cup(a, b).map_err(e)?).map_err(e)?, "cup not a coboundary")?;
        }
    }
    Ok("dec H^2 = 0".into())
}

fn criterion5() -> Check {
    let pres = parse_presentation("group G { generators: x, y; relators: [x,[x,y]], [y,[x,y]]; }").map_err(e)?;
    let free = Presentation::free("S", 2);
    let v = relators_in_third_series(&pres, params(2)).map_err(e)?;
    ensure(v.verdict == VerdictKind::NotRealizable, format!("third series: {}", v.verdict.as_str()))?;
    let t1 = to_table(&third_quotient(&pres, params(2), 512).map_err(e)?).map_err(e)?;
    let t2 = to_table(&third_quotient(&free, params(2), 512).map_err(e)?).map_err(e)?;
    let w = find_isomorphism(&t1, &t2).ok_or("third quotients not isomorphic")?;
    ensure(w.map.is_homomorphism(&t1, &t2) && w.map.is_bijective(t2.order()), "bad witness")?;
    let witt = witt_rank(2, 3);
    let r = relation_rank_in_d3(&pres, 2).map_err(e)?;
    let r0 = relation_rank_in_d3(&free, 2).map_err(e)?;
    ensure(witt == 2 && r == Some(2) && r0 == Some(0), format!("ranks {witt} {r:?} {r0:?}"))?;
    let p = principle_check(&free, &pres, params(2), 512, Some(Side::First)).map_err(e)?;
    ensure(p.verdict == VerdictKind::AtMostOneRealizable, format!("principle: {}", p.verdict.as_str()))?;
    ensure(p.witness["hence_not_realizable"] == json!("G"), "assertion not applied")?;
    Ok("not-realizable; isomorphic G^[3]; ranks 2 vs 0; at-most-one-realizable".into())
}

fn wreath(m: usize, action: Vec<usize>) -> WreathSpec {
    let factor = |name: &str| FactorSpec {
        presentation: format!("group {name} {{ generators: x; relators: ; }}"),
        cd: 1,
        torsion_free: true,
        top_cohomology_finite: true,
    };
    WreathSpec {
        k: factor("K"),
        l: factor("L"),
        m,
        action: vec![action],
    }
}

fn criterion6() -> Check {
    let r = wreath_construct(&wreath(2, vec![1, 0]), params(2), 512).map_err(e)?;
    ensure(r.dim_h1 == 2 && r.dim_h1_k + r.dim_h1_l == 2 && r.model_dim_h1 == 2, "dim H^1")?;
    ensure(r.cd.value == Some(3) && r.cd_k_power.value == Some(2), "cd")?;
    ensure(r.verdict.verdict == VerdictKind::NotRealizable, "m=2 verdict")?;
    let r1 = wreath_construct(&wreath(1, vec![0]), params(2), 512).map_err(e)?;
    ensure(r1.verdict.verdict == VerdictKind::CriterionNotApplicable, "m=1 verdict")?;
    Ok("m=2: dim H^1 2, cd 3, not-realizable; m=1: criterion-not-applicable".into())
}

fn criterion7() -> Check {
    let v4 = FiniteGroupTable::abelian(&[2, 2]).map_err(e)?;
    ensure(h2(&v4, params(2), 64).map_err(e)?.space.dimension == 3, "H^2(V4)")?;
    let z4 = FiniteGroupTable::cyclic(4);
    let h = h2(&z4, params(2), 64).map_err(e)?;
    ensure(h.space.dimension == 1, "H^2(Z/4, Z/2)")?;
    let x = &h1(&z4, params(2)).space.basis[0];
    ensure(h.is_zero_class(&cup(x, x).map_err(e)?).map_err(e)?, "x cup x nonzero")?;
    for q in [2, 3, 4] {
        let d = h2(&FiniteGroupTable::cyclic(q), params(q), 64).map_err(e)?.space.dimension;
        ensure(d == 1, format!("H^2(Z/{q}, Z/{q}) = {d}"))?;
    }
    Ok("3; 1 with x^2 = 0; 1,1,1".into())
}

fn criterion8() -> Check {
    let mut total = 0;
    for (name, suite) in common::SUITES {
        total += suite().map_err(|err| format!("{name}: {err}"))?;
    }
    Ok(format!("{} suites, {total} cases", common::SUITES.len()))
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Check, u64); 8] = [
        (1, criterion1, 5),
        (2, criterion2, 30),
        (3, criterion3, 10),
        (4, criterion4, 10),
        (5, criterion5, 10),
        (6, criterion6, 5),
        (7, criterion7, 30),
        (8, criterion8, 60),
    ];
    let mut failed = Vec::new();
    for (n, f, limit) in criteria {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        let res = res.and_then(|d| {
            if ms < limit as u128 * 1000 {
                Ok(d)
            } else {
                Err(format!("took {ms} ms, limit {limit} s"))
            }
        });
        match res {
            Ok(d) => println!("criterion {n}: PASS ({ms} ms) {d}"),
            Err(d) => {
                println!("criterion {n}: FAIL ({ms} ms) {d}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
