#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use wgroup_core::cohom::{cup, h1, h2, inflation, is_normalized_cocycle, pairings_equivalent, CochainClass, H1, H2};
use wgroup_core::graded::{algebra_from_cohomology, algebra_from_milnor, quadratic_hull, GradedAlgebra2};
use wgroup_core::milnor::{symbol_algebra, FieldDescriptor, FieldElement, FieldKind, SymbolContext};
use wgroup_core::qcentral::{series_quotient, series_term, third_quotient, to_table, FiniteGroupTable};
use wgroup_core::{parse_presentation, Presentation, SeriesParams, Word};

pub const CASES: u32 = 200;
pub const SEED: [u8; 32] = *b"wgroup-fixed-seed-for-properties";

pub fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub fn params(q: u64) -> SeriesParams {
    SeriesParams::from_q(q).unwrap()
}

pub fn g3(text: &str, q: u64) -> FiniteGroupTable {
    let pres = parse_presentation(text).unwrap();
    to_table(&third_quotient(&pres, params(q), 512).unwrap()).unwrap()
}

/// Small groups with their modulus, used across suites.
pub fn group_pool() -> Vec<(String, FiniteGroupTable, u64)> {
    vec![
        ("Z/2".into(), FiniteGroupTable::cyclic(2), 2),
        ("Z/3".into(), FiniteGroupTable::cyclic(3), 3),
        ("Z/4 mod 2".into(), FiniteGroupTable::cyclic(4), 2),
        ("Z/4 mod 4".into(), FiniteGroupTable::cyclic(4), 4),
        ("Z/8".into(), FiniteGroupTable::cyclic(8), 2),
        ("V4".into(), FiniteGroupTable::abelian(&[2, 2]).unwrap(), 2),
        ("Z/2xZ/4".into(), FiniteGroupTable::abelian(&[2, 4]).unwrap(), 2),
        ("Z/3xZ/3".into(), FiniteGroupTable::abelian(&[3, 3]).unwrap(), 3),
        ("E(1,3)".into(), g3("group C { generators: x; relators: ; }", 3), 3),
        (
            "Q3 model".into(),
            g3("group D { generators: s, t; relators: s t s^-1 t^-3; }", 2),
            2,
        ),
        ("E(2,2)".into(), g3("group F { generators: x, y; relators: ; }", 2), 2),
    ]
}

pub struct GroupData {
    pub name: String,
    pub g: FiniteGroupTable,
    pub q: u64,
    pub h1: H1,
    pub h2: H2,
}

pub fn group_data() -> Vec<GroupData> {
    group_pool()
        .into_iter()
        .map(|(name, g, q)| {
            let h1 = h1(&g, params(q));
            let h2 = h2(&g, params(q), 64).unwrap();
            GroupData { name, g, q, h1, h2 }
        })
        .collect()
}

pub fn combine(basis: &[CochainClass], coeffs: &[u32], zero: CochainClass) -> CochainClass {
    basis
        .iter()
        .zip(coeffs)
        .fold(zero, |acc, (b, &c)| acc.add(&b.scale(c)).unwrap())
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn class_pair() -> impl Strategy<Value = (usize, Vec<u32>, Vec<u32>, Vec<u32>)> {
    (0usize..11, prop::collection::vec(0u32..64, 8), prop::collection::vec(0u32..64, 8), prop::collection::vec(0u32..64, 8))
}

fn reduce(v: &[u32], q: u64, len: usize) -> Vec<u32> {
    v.iter().take(len).map(|&x| x % q as u32).collect()
}

/// Random combinations of H^2 basis classes satisfy the cocycle identity.
pub fn cocycle_identity() -> Result<u32, String> {
    let data = group_data();
    runner()
        .run(&class_pair(), |(gi, a, _, _)| {
            let d = &data[gi % data.len()];
            let basis = &d.h2.space.basis;
            let f = combine(basis, &reduce(&a, d.q, basis.len()), CochainClass::zero(2, d.q, d.g.order()));
            if !is_normalized_cocycle(&d.g, &f) {
                return Err(fail(format!("{}: combination {:?} is not a cocycle", d.name, a)));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

/// `[(a+b) ∪ c] = [a ∪ c] + [b ∪ c]` and `[a ∪ b] = -[b ∪ a]`.
pub fn cup_bilinear_and_graded() -> Result<u32, String> {
    let data = group_data();
    runner()
        .run(&class_pair(), |(gi, a, b, c)| {
            let d = &data[gi % data.len()];
            let basis = &d.h1.space.basis;
            let k = basis.len();
            let zero = CochainClass::zero(1, d.q, d.g.order());
            let a = combine(basis, &reduce(&a, d.q, k), zero.clone());
            let b = combine(basis, &reduce(&b, d.q, k), zero.clone());
            let c = combine(basis, &reduce(&c, d.q, k), zero);
            let coords = |f: &CochainClass| d.h2.coords(f).unwrap();
            let orders = &d.h2.space.invariants;
            let lhs = coords(&cup(&a.add(&b).unwrap(), &c).unwrap());
            let ac = coords(&cup(&a, &c).unwrap());
            let bc = coords(&cup(&b, &c).unwrap());
            let rhs: Vec<u32> = ac.iter().zip(&bc).zip(orders).map(|((x, y), o)| (x + y) % o).collect();
            if lhs != rhs {
                return Err(fail(format!("{}: bilinearity {lhs:?} vs {rhs:?}", d.name)));
            }
            let ab = coords(&cup(&a, &b).unwrap());
            let ba = coords(&cup(&b, &a).unwrap());
            if ab.iter().zip(&ba).zip(orders).any(|((x, y), o)| (x + y) % o != 0) {
                return Err(fail(format!("{}: {ab:?} is not -{ba:?}", d.name)));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

/// Inflation from `G^[2]` to `G^[3]` commutes with cup products.
pub fn inflation_cup() -> Result<u32, String> {
    let data: Vec<_> = group_data()
        .into_iter()
        .map(|d| {
            let (quot, pi) = series_quotient(&d.g, 2, params(d.q)).unwrap();
            let hq = h1(&quot, params(d.q));
            (d, quot, pi, hq)
        })
        .collect();
    runner()
        .run(&class_pair(), |(gi, a, b, _)| {
            let (d, quot, pi, hq) = &data[gi % data.len()];
            let basis = &hq.space.basis;
            let zero = CochainClass::zero(1, d.q, quot.order());
            let a = combine(basis, &reduce(&a, d.q, basis.len()), zero.clone());
            let b = combine(basis, &reduce(&b, d.q, basis.len()), zero);
            let inf = |f: &CochainClass| inflation(pi, &d.g, quot, f).unwrap();
            let left = inf(&cup(&a, &b).unwrap());
            let right = cup(&inf(&a), &inf(&b)).unwrap();
            if left != right {
                return Err(fail(format!("{}: inflation does not commute with cup", d.name)));
            }
            if d.h2.coords(&left).unwrap() != d.h2.coords(&right).unwrap() {
                return Err(fail(format!("{}: classes differ", d.name)));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

fn random_algebra() -> impl Strategy<Value = GradedAlgebra2> {
    (prop::sample::select(vec![2u64, 3, 4]), 1usize..=3, 0usize..=3).prop_flat_map(|(q, m, k)| {
        prop::collection::vec(prop::collection::vec(0u32..q as u32, k), m * m).prop_map(move |flat| {
            let mut mult = vec![vec![Vec::new(); m]; m];
            for (idx, v) in flat.into_iter().enumerate() {
                mult[idx / m][idx % m] = v;
            }
            GradedAlgebra2 {
                q,
                dim1: m,
                dim2: k,
                orders1: vec![q as u32; m],
                orders2: vec![q as u32; k],
                mult,
                graded_commutative: false,
            }
        })
    })
}

/// `hull(hull(A)) ≅ hull(A)`, and `hull(A) ≅ A` for the algebras coming
/// from groups and fields.
pub fn hull_idempotent() -> Result<u32, String> {
    let mut fixed: Vec<(String, GradedAlgebra2)> = group_pool()
        .into_iter()
        .map(|(name, g, q)| (name, algebra_from_cohomology(&g, params(q), 512).unwrap()))
        .collect();
    for (f, q) in FIELDS {
        let field = FieldDescriptor::parse(f, params(*q)).unwrap();
        fixed.push((format!("{f} q={q}"), algebra_from_milnor(&symbol_algebra(&field).unwrap()).unwrap()));
    }
    for (name, a) in &fixed {
        let h = quadratic_hull(a).map_err(|e| e.to_string())?;
        if !pairings_equivalent(&a.as_pairing(), &h.as_pairing()).map_err(|e| e.to_string())? {
            return Err(format!("{name}: hull is not equivalent to the algebra"));
        }
    }
    runner()
        .run(&random_algebra(), |a| {
            let h1 = quadratic_hull(&a).unwrap();
            let h2 = quadratic_hull(&h1).unwrap();
            if !pairings_equivalent(&h1.as_pairing(), &h2.as_pairing()).unwrap() {
                return Err(fail(format!("hull not idempotent for {:?}", a.mult)));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

pub const FIELDS: &[(&str, u64)] = &[
    ("Fq:5", 2),
    ("Fq:7", 3),
    ("Fq:9", 2),
    ("Fq:9", 4),
    ("Fq:13", 4),
    ("Fq:25", 3),
    ("Qp:3", 2),
    ("Qp:5", 2),
    ("Qp:5", 4),
    ("Qp:7", 3),
    ("Qp:13", 3),
    ("R", 2),
];

fn element(kind: FieldKind, raw: (u64, i64, i64)) -> FieldElement {
    match kind {
        FieldKind::Finite { size } => FieldElement::Finite(1 + raw.0 % (size - 1)),
        _ => {
            let n = if raw.1 == 0 { 1 } else { raw.1 } as i128;
            let d = if raw.2 == 0 { 1 } else { raw.2.abs() } as i128;
            FieldElement::Rational(n, d)
        }
    }
}

/// `{a, 1-a} = 0`, `{a, -a} = 0` and `{a, b} = -{b, a}` in every symbol algebra.
pub fn steinberg_antisymmetry() -> Result<u32, String> {
    let contexts: Vec<SymbolContext> = FIELDS
        .iter()
        .map(|(f, q)| SymbolContext::new(FieldDescriptor::parse(f, params(*q)).unwrap()).unwrap())
        .collect();
    let raw = || (any::<u64>(), -200i64..200, -200i64..200);
    runner()
        .run(&(0usize..FIELDS.len(), raw(), raw()), |(fi, ra, rb)| {
            let ctx = &contexts[fi];
            let kind = ctx.descriptor.kind;
            let q = ctx.descriptor.params.q as u32;
            let (a, b) = (element(kind, ra), element(kind, rb));
            let zero = |v: &[u32]| v.iter().all(|&x| x == 0);
            if let Some(c) = ctx.one_minus(&a) {
                let s = ctx.symbol(&a, &c).unwrap();
                if !zero(&s) {
                    return Err(fail(format!("{}: Steinberg fails at {a:?}", FIELDS[fi].0)));
                }
            }
            if !zero(&ctx.symbol(&a, &ctx.negate(&a)).unwrap()) {
                return Err(fail(format!("{}: {{a,-a}} nonzero at {a:?}", FIELDS[fi].0)));
            }
            let ab = ctx.symbol(&a, &b).unwrap();
            let ba = ctx.symbol(&b, &a).unwrap();
            if ab.iter().zip(&ba).any(|(x, y)| (x + y) % q != 0) {
                return Err(fail(format!("{}: antisymmetry fails at {a:?}, {b:?}", FIELDS[fi].0)));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

fn random_presentation() -> impl Strategy<Value = (Presentation, u64)> {
    let shapes = vec![(1usize, 2u64), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4), (1, 5)];
    prop::sample::select(shapes).prop_flat_map(|(n, q)| {
        let letter = (0..n, prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]));
        let word = prop::collection::vec(letter, 1..10);
        prop::collection::vec(word, 0..3).prop_map(move |rels| {
            let mut pres = Presentation::free("R", n);
            pres.relators = rels.into_iter().map(|w| Word::from_letters(w).free_reduce()).collect();
            (pres, q)
        })
    })
}

/// The third series term of every computed third quotient is trivial.
pub fn third_term_trivial() -> Result<u32, String> {
    runner()
        .run(&random_presentation(), |(pres, q)| {
            let g = to_table(&third_quotient(&pres, params(q), 512).unwrap()).unwrap();
            let t = series_term(&g, 3, params(q)).unwrap();
            if t.len() != 1 {
                return Err(fail(format!("{pres}: G^(3) has {} elements", t.len())));
            }
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

pub const SUITES: &[(&str, fn() -> Result<u32, String>)] = &[
    ("2-cocycle identity on H^2 bases", cocycle_identity),
    ("cup bilinearity and graded commutation", cup_bilinear_and_graded),
    ("inflation-cup compatibility", inflation_cup),
    ("quadratic hull idempotence", hull_idempotent),
    ("Steinberg and antisymmetry in symbol algebras", steinberg_antisymmetry),
    ("trivial third series term in G^[3]", third_term_trivial),
];
