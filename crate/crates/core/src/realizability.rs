//! Criteria showing that a pro-p group is not a maximal pro-p Galois group.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::lie::{relation_rank_free_class2, relation_rank_in_d3};
use crate::presentation::{parse_presentation, Presentation, Word};
use crate::qcentral::{
    find_isomorphism, second_quotient, second_quotient_module, third_quotient, to_table, Collector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    #[serde(rename = "not-realizable")]
    NotRealizable,
    #[serde(rename = "at-most-one-realizable")]
    AtMostOneRealizable,
    #[serde(rename = "criterion-not-applicable")]
    CriterionNotApplicable,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl VerdictKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictKind::NotRealizable => "not-realizable",
            VerdictKind::AtMostOneRealizable => "at-most-one-realizable",
            VerdictKind::CriterionNotApplicable => "criterion-not-applicable",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: String,
    pub verdict: VerdictKind,
    pub witness: Value,
}

/// Which side of a comparison the user asserts to be realizable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    First,
    Second,
}

/// `dim_{F_p} H^1` of the pro-p group presented by `pres`.
pub fn h1_dimension(pres: &Presentation, p: u64) -> Result<usize> {
    Ok(second_quotient_module(pres, SeriesParams::new(p, 1)?)?.dimension())
}

/// Two groups with isomorphic third quotients but different cohomology
/// cannot both be maximal pro-p Galois groups.
pub fn principle_check(
    pres1: &Presentation,
    pres2: &Presentation,
    params: SeriesParams,
    order_bound: u64,
    assume_realizable: Option<Side>,
) -> Result<Verdict> {
    let criterion = "principle".to_string();
    let t1 = to_table(&third_quotient(pres1, params, order_bound)?)?;
    let t2 = to_table(&third_quotient(pres2, params, order_bound)?)?;
    let iso = find_isomorphism(&t1, &t2);
    let p = params.p;
    let h1 = (h1_dimension(pres1, p)?, h1_dimension(pres2, p)?);
    let h2 = (relation_rank_in_d3(pres1, p)?, relation_rank_in_d3(pres2, p)?);
    let mut witness = json!({
        "third_quotient_orders": [t1.order(), t2.order()],
        "isomorphic": iso.is_some(),
        "dim_h1": [h1.0, h1.1],
        "dim_h2": [h2.0, h2.1],
    });
    let Some(iso) = iso else {
        witness["reason"] = json!("third quotients are not isomorphic");
        return Ok(Verdict {
            criterion,
            verdict: VerdictKind::Inconclusive,
            witness,
        });
    };
    witness["isomorphism_generator_images"] = json!(iso.generator_images);
    let distinguishing = if h1.0 != h1.1 {
        Some("dim H^1")
    } else if matches!(h2, (Some(a), Some(b)) if a != b) {
        Some("dim H^2")
    } else {
        None
    };
    let Some(inv) = distinguishing else {
        witness["reason"] = json!(if h2.0.is_none() || h2.1.is_none() {
            "H^1 agrees and H^2 is not computable for these relators"
        } else {
            "cohomological data agree"
        });
        return Ok(Verdict {
            criterion,
            verdict: VerdictKind::Inconclusive,
            witness,
        });
    };
    witness["distinguishing_invariant"] = json!(inv);
    if inv == "dim H^2" {
        witness["h2_source"] =
            json!("relators lie in the third mod-p dimension subgroup with independent degree-3 Magnus parts");
        let ranks: Vec<u64> = [pres1, pres2].iter().map(|p| relation_rank_free_class2(p.rank() as u64)).collect();
        witness["free_class2_relation_rank"] = json!(ranks);
    }
    if let Some(side) = assume_realizable {
        let (yes, no) = match side {
            Side::First => (&pres1.name, &pres2.name),
            Side::Second => (&pres2.name, &pres1.name),
        };
        witness["assumed_realizable"] = json!(yes);
        witness["hence_not_realizable"] = json!(no);
    }
    Ok(Verdict {
        criterion,
        verdict: VerdictKind::AtMostOneRealizable,
        witness,
    })
}

/// A nontrivial relator set inside the third series term of the free group
/// yields a group that is not a maximal pro-p Galois group.
pub fn relators_in_third_series(pres: &Presentation, params: SeriesParams) -> Result<Verdict> {
    pres.validate()?;
    let col = Collector::new(pres.rank(), params);
    let mut rows = Vec::new();
    let (mut all_in, mut some_nontrivial) = (true, false);
    for r in &pres.relators {
        let img = col.evaluate_on_generators(r)?;
        let inside = col.is_identity(&img);
        let trivial = r.is_trivial_in_free();
        all_in &= inside;
        some_nontrivial |= !trivial;
        rows.push(json!({
            "relator": pres.format_word(r),
            "in_third_series": inside,
            "trivial_in_free": trivial,
            "image": img,
        }));
    }
    let verdict = if all_in && some_nontrivial {
        VerdictKind::NotRealizable
    } else {
        VerdictKind::CriterionNotApplicable
    };
    Ok(Verdict {
        criterion: "relators-in-third-series".into(),
        verdict,
        witness: json!({ "q": params.q, "relators": rows }),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CdProvenance {
    UserSupplied,
    FreeGroup,
    WreathFormula,
    PowerFormula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdDescriptor {
    /// `None` stands for infinite cohomological dimension.
    pub value: Option<u64>,
    pub provenance: CdProvenance,
}

impl CdDescriptor {
    pub fn user(value: u64) -> Self {
        Self {
            value: Some(value),
            provenance: CdProvenance::UserSupplied,
        }
    }

    pub fn infinite() -> Self {
        Self {
            value: None,
            provenance: CdProvenance::UserSupplied,
        }
    }

    pub fn free_group() -> Self {
        Self {
            value: Some(1),
            provenance: CdProvenance::FreeGroup,
        }
    }
}

/// `dim H^1 < cd` rules out realizability; for `p = 2` the group must also
/// be torsion-free.
pub fn h1_vs_cd_check(dim_h1: u64, cd: CdDescriptor, p: u64, torsion_free: bool) -> Verdict {
    let below = cd.value.map_or(true, |c| dim_h1 < c);
    let gate = p != 2 || torsion_free;
    Verdict {
        criterion: "h1-below-cd".into(),
        verdict: if below && gate {
            VerdictKind::NotRealizable
        } else {
            VerdictKind::CriterionNotApplicable
        },
        witness: json!({
            "dim_h1": dim_h1,
            "cd": cd.value,
            "cd_infinite": cd.value.is_none(),
            "cd_provenance": cd.provenance,
            "p": p,
            "torsion_free": torsion_free,
        }),
    }
}

/// One factor of a wreath-type product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    /// Presentation in the group DSL.
    pub presentation: String,
    pub cd: u64,
    #[serde(default)]
    pub torsion_free: bool,
    /// `H^cd(K)` is finite; required for the factor `K`.
    #[serde(default)]
    pub top_cohomology_finite: bool,
}

/// `G = K^m ⋊ L` with `L` permuting the copies through `action`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathSpec {
    pub k: FactorSpec,
    pub l: FactorSpec,
    pub m: usize,
    /// Images of `0..m` under each generator of `L`.
    pub action: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WreathReport {
    pub dim_h1_k: usize,
    pub dim_h1_l: usize,
    pub dim_h1: usize,
    pub cd_k_power: CdDescriptor,
    pub cd: CdDescriptor,
    /// Least `m` with `dim H^1 < cd` for these `K` and `L`.
    pub threshold_m: Option<u64>,
    /// `dim H^1` from the second quotient of an explicit presentation of `G`.
    pub model_dim_h1: usize,
    /// Order of the explicit `G^[2]` table, when within the bound.
    pub model_order: Option<usize>,
    pub verdict: Verdict,
}

/// Check that the action is by permutations generating a transitive group.
pub fn check_action(m: usize, action: &[Vec<usize>]) -> Result<()> {
    for img in action {
        let mut seen = vec![false; m];
        if img.len() != m || img.iter().any(|&x| x >= m || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Malformed("action images must be permutations of 0..m".into()));
        }
    }
    if m == 0 {
        return Err(Error::IntransitiveAction { m });
    }
    let mut reached = vec![false; m];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for img in action {
            if !reached[img[x]] {
                reached[img[x]] = true;
                stack.push(img[x]);
            }
        }
    }
    if reached.iter().all(|&r| r) {
        Ok(())
    } else {
        Err(Error::IntransitiveAction { m })
    }
}

/// Presentation of `K^m ⋊ L`: copies of the `K` relators, commuting copies,
/// `y^-1 x_c y = x_{pi_y(c)}`, and the `L` relators.
pub fn wreath_presentation(k: &Presentation, l: &Presentation, m: usize, action: &[Vec<usize>]) -> Presentation {
    let nk = k.rank();
    let gen = |i: usize, c: usize| c * nk + i;
    let y0 = m * nk;
    let mut names = Vec::new();
    for c in 0..m {
        for g in &k.generator_names {
            names.push(format!("{g}c{c}"));
        }
    }
    for g in &l.generator_names {
        names.push(format!("{g}l"));
    }
    let shift = |w: &Word, f: &dyn Fn(usize) -> usize| Word::from_letters(w.letters().iter().map(|&(g, e)| (f(g), e)).collect());
    let mut rels = Vec::new();
    for c in 0..m {
        rels.extend(k.relators.iter().map(|r| shift(r, &|g| gen(g, c))));
    }
    for c in 0..m {
        for d in c + 1..m {
            for i in 0..nk {
                for j in 0..nk {
                    rels.push(Word::commutator(&Word::generator(gen(i, c)), &Word::generator(gen(j, d))).expect("short"));
                }
            }
        }
    }
    for (j, img) in action.iter().enumerate() {
        for c in 0..m {
            for i in 0..nk {
                let w = Word::from_letters(vec![(y0 + j, -1), (gen(i, c), 1), (y0 + j, 1), (gen(i, img[c]), -1)]);
                rels.push(w.free_reduce());
            }
        }
    }
    rels.extend(l.relators.iter().map(|r| shift(r, &|g| y0 + g)));
    Presentation {
        name: format!("{}wr{}", k.name, l.name),
        generator_names: names,
        relators: rels,
    }
}

pub fn wreath_construct(spec: &WreathSpec, params: SeriesParams, order_bound: u64) -> Result<WreathReport> {
    let k = parse_presentation(&spec.k.presentation)?;
    let l = parse_presentation(&spec.l.presentation)?;
    if spec.action.len() != l.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} action images for {} generators of L",
            spec.action.len(),
            l.rank()
        )));
    }
    check_action(spec.m, &spec.action)?;
    if !spec.k.top_cohomology_finite {
        return Err(Error::MissingHypothesis("H^n(K) finite".into()));
    }
    let p = params.p;
    let dim_h1_k = h1_dimension(&k, p)?;
    let dim_h1_l = h1_dimension(&l, p)?;
    let dim_h1 = dim_h1_k + dim_h1_l;
    let cd_k_power = CdDescriptor {
        value: Some(spec.m as u64 * spec.k.cd),
        provenance: CdProvenance::PowerFormula,
    };
    let cd = CdDescriptor {
        value: Some(spec.m as u64 * spec.k.cd + spec.l.cd),
        provenance: CdProvenance::WreathFormula,
    };
    let threshold_m = (spec.k.cd > 0).then(|| (dim_h1 as u64).saturating_sub(spec.l.cd) / spec.k.cd + 1);
    let model = wreath_presentation(&k, &l, spec.m, &spec.action);
    let fp = SeriesParams::new(p, 1)?;
    let model_dim_h1 = second_quotient_module(&model, fp)?.dimension();
    let model_order = second_quotient(&model, fp, order_bound).ok().map(|t| t.order());
    let torsion_free = spec.k.torsion_free && spec.l.torsion_free;
    let mut verdict = h1_vs_cd_check(dim_h1 as u64, cd, p, torsion_free);
    verdict.criterion = "wreath-h1-below-cd".into();
    Ok(WreathReport {
        dim_h1_k,
        dim_h1_l,
        dim_h1,
        cd_k_power,
        cd,
        threshold_m,
        model_dim_h1,
        model_order,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> SeriesParams {
        SeriesParams::from_q(2).unwrap()
    }

    fn d3_pair() -> Presentation {
        parse_presentation("group G { generators: x,y; relators: [x,[x,y]], [y,[x,y]]; }").unwrap()
    }

    #[test]
    fn principle() {
        let free = Presentation::free("S", 2);
        let v = principle_check(&free, &d3_pair(), q2(), 512, Some(Side::First)).unwrap();
        assert_eq!(v.verdict, VerdictKind::AtMostOneRealizable);
        assert_eq!(v.witness["dim_h2"], json!([0, 2]));
        assert_eq!(v.witness["hence_not_realizable"], json!("G"));
        let v = principle_check(&d3_pair(), &d3_pair(), q2(), 512, None).unwrap();
        assert_eq!(v.verdict, VerdictKind::Inconclusive);
        let v = principle_check(&Presentation::free("A", 1), &free, q2(), 512, None).unwrap();
        assert_eq!(v.verdict, VerdictKind::Inconclusive);
    }

    #[test]
    fn third_series_relators() {
        let one = parse_presentation("group G { generators: x,y; relators: [x,[x,y]]; }").unwrap();
        assert_eq!(relators_in_third_series(&one, q2()).unwrap().verdict, VerdictKind::NotRealizable);
        let x4 = parse_presentation("group C { generators: x; relators: x^4; }").unwrap();
        assert_eq!(relators_in_third_series(&x4, q2()).unwrap().verdict, VerdictKind::NotRealizable);
        let ab = parse_presentation("group A { generators: x,y; relators: [x,y]; }").unwrap();
        assert_eq!(
            relators_in_third_series(&ab, q2()).unwrap().verdict,
            VerdictKind::CriterionNotApplicable
        );
        let free = Presentation::free("F", 2);
        assert_eq!(
            relators_in_third_series(&free, q2()).unwrap().verdict,
            VerdictKind::CriterionNotApplicable
        );
    }

    #[test]
    fn cd_gate() {
        assert_eq!(h1_vs_cd_check(2, CdDescriptor::user(3), 2, true).verdict, VerdictKind::NotRealizable);
        assert_eq!(
            h1_vs_cd_check(2, CdDescriptor::free_group(), 2, true).verdict,
            VerdictKind::CriterionNotApplicable
        );
        assert_eq!(
            h1_vs_cd_check(2, CdDescriptor::user(3), 2, false).verdict,
            VerdictKind::CriterionNotApplicable
        );
        assert_eq!(h1_vs_cd_check(2, CdDescriptor::user(3), 3, false).verdict, VerdictKind::NotRealizable);
        let v = serde_json::to_value(CdDescriptor::free_group()).unwrap();
        assert_eq!(v["provenance"], json!("free-group"));
    }

    fn spec(k: &str, m: usize, action: Vec<Vec<usize>>) -> WreathSpec {
        let factor = |text: &str| FactorSpec {
            presentation: text.into(),
            cd: 1,
            torsion_free: true,
            top_cohomology_finite: true,
        };
        WreathSpec {
            k: factor(k),
            l: factor("group L { generators: y; relators: ; }"),
            m,
            action,
        }
    }

    #[test]
    fn wreath_cases() {
        let k1 = "group K { generators: x; relators: ; }";
        let r = wreath_construct(&spec(k1, 2, vec![vec![1, 0]]), q2(), 512).unwrap();
        assert_eq!((r.dim_h1, r.cd.value), (2, Some(3)));
        assert_eq!(r.model_dim_h1, 2);
        assert_eq!(r.model_order, Some(4));
        assert_eq!(r.threshold_m, Some(2));
        assert_eq!(r.verdict.verdict, VerdictKind::NotRealizable);
        let r = wreath_construct(&spec(k1, 1, vec![vec![0]]), q2(), 512).unwrap();
        assert_eq!((r.dim_h1, r.cd.value), (2, Some(2)));
        assert_eq!(r.verdict.verdict, VerdictKind::CriterionNotApplicable);
        let k2 = "group K { generators: a,b; relators: ; }";
        let mut s = spec(k2, 2, vec![vec![1, 0]]);
        s.k.cd = 2;
        let r = wreath_construct(&s, q2(), 512).unwrap();
        assert_eq!((r.dim_h1, r.cd.value, r.model_dim_h1), (3, Some(5), 3));
        assert_eq!(r.verdict.verdict, VerdictKind::NotRealizable);
    }

    #[test]
    fn wreath_errors() {
        let k1 = "group K { generators: x; relators: ; }";
        let bad = spec(k1, 2, vec![vec![0, 1]]);
        assert!(matches!(wreath_construct(&bad, q2(), 512), Err(Error::IntransitiveAction { m: 2 })));
        let mut no_flag = spec(k1, 2, vec![vec![1, 0]]);
        no_flag.k.top_cohomology_finite = false;
        assert!(matches!(wreath_construct(&no_flag, q2(), 512), Err(Error::MissingHypothesis(_))));
        let json = serde_json::to_string(&spec(k1, 2, vec![vec![1, 0]])).unwrap();
        let back: WreathSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.m, 2);
    }
}
