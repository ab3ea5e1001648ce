mod common;

use common::params;
use wgroup_core::lie::{hall_basis, relation_rank_free_class2, witt_rank};
use wgroup_core::qcentral::{
    find_isomorphism, induced_quotient_map, quotient_at_level, second_quotient, series_step_oracle, third_quotient,
    to_table, Collector, FiniteGroupTable,
};
use wgroup_core::{parse_file, parse_presentation, Presentation, Word};

const D3_PAIR: &str = "group G { generators: x,y; relators: [x,[x,y]], [y,[x,y]]; }";
const DEMUSHKIN: &str = "group D { generators: s,t; relators: s t s^-1 t^-3; }";

#[test]
fn parse_and_reduce() {
    let t = parse_presentation("group T { generators: x; relators: ; }").unwrap();
    assert_eq!((t.rank(), t.relators.len()), (1, 0));
    let g = parse_presentation(D3_PAIR).unwrap();
    assert_eq!(g.relators.len(), 2);
    assert!(g.relators.iter().all(|r| r.is_reduced() && !r.is_trivial_in_free()));
    let err = parse_presentation("group B { generators: x; relators: [x,z]; }").unwrap_err();
    assert!(err.to_string().contains("undeclared generator z"));
    let w = Word::from_letters(vec![(0, 2), (0, 3), (1, 0)]).free_reduce();
    assert_eq!(w.letters(), &[(0, 5)]);
    assert!(Word::from_letters(vec![(0, 1), (1, 1), (1, -1), (0, -1)]).is_trivial_in_free());
    let both = parse_file(&format!("{D3_PAIR}\n{DEMUSHKIN}")).unwrap();
    assert_eq!(both.iter().map(|p| p.name.as_str()).collect::<Vec<_>>(), ["G", "D"]);
}

#[test]
fn quotient_orders() {
    let order = |p: &Presentation, q: u64| to_table(&third_quotient(p, params(q), 512).unwrap()).unwrap().order();
    assert_eq!(order(&Presentation::free("T", 0), 2), 1);
    assert_eq!(order(&Presentation::free("F", 1), 2), 4);
    assert_eq!(order(&Presentation::free("F", 1), 3), 9);
    assert_eq!(order(&Presentation::free("F", 2), 2), 32);
    assert_eq!(order(&parse_presentation(D3_PAIR).unwrap(), 2), 32);
    assert_eq!(order(&parse_presentation(DEMUSHKIN).unwrap(), 2), 16);
    let (_, rec) = quotient_at_level(&Presentation::free("F", 2), 3, params(2), 512).unwrap();
    assert_eq!((rec.order, rec.class, rec.exponent), (32, Some(2), 4));
    assert!(third_quotient(&Presentation::free("F", 4), params(2), 512).is_err());
}

#[test]
fn collection() {
    let c = Collector::new(2, params(2));
    let (x, y) = (c.generator(0), c.generator(1));
    let xy = c.collect(&x, &y).unwrap();
    assert!(c.is_identity(&c.collect(&xy, &c.inverse(&xy)).unwrap()));
    assert_eq!(c.collect(&c.identity(), &y).unwrap(), y);
    let w = parse_presentation(D3_PAIR).unwrap().relators[0].clone();
    assert!(c.is_identity(&c.evaluate_on_generators(&w).unwrap()));
    let c1 = Collector::new(1, params(2));
    assert!(c1.is_identity(&c1.evaluate_on_generators(&Word::power_of(0, 4)).unwrap()));
}

#[test]
fn abelian_quotients() {
    let z2 = second_quotient(&parse_presentation("group C { generators: x; relators: x^2; }").unwrap(), params(2), 512).unwrap();
    assert_eq!(z2.order(), 2);
    let z3 = second_quotient(&parse_presentation("group C { generators: x,y; relators: x y^-1; }").unwrap(), params(3), 512).unwrap();
    assert_eq!(z3.order(), 3);
    assert_eq!(second_quotient(&Presentation::free("F", 3), params(2), 512).unwrap().order(), 8);
}

#[test]
fn oracle_and_isomorphism() {
    let z4 = FiniteGroupTable::cyclic(4);
    let all = (0..4).collect();
    let step = series_step_oracle(&z4, &all, params(2)).unwrap();
    assert_eq!(step.len(), 2);
    assert_eq!(series_step_oracle(&z4, &step, params(2)).unwrap().len(), 1);
    let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
    assert!(find_isomorphism(&z4, &v4).is_none());
    let e22 = to_table(&third_quotient(&Presentation::free("F", 2), params(2), 512).unwrap()).unwrap();
    let g = to_table(&third_quotient(&parse_presentation(D3_PAIR).unwrap(), params(2), 512).unwrap()).unwrap();
    let w = find_isomorphism(&e22, &g).unwrap();
    assert!(w.map.is_homomorphism(&e22, &g));
    assert!(find_isomorphism(&g, &g).is_some());
}

#[test]
fn induced_maps() {
    let f2 = Presentation::free("F", 2);
    let f1 = Presentation::free("F", 1);
    let (x, y) = (Word::generator(0), Word::generator(1));
    let id = induced_quotient_map(&[x.clone(), y.clone()], &f2, &f2, params(2), 512).unwrap();
    assert!(id.is_isomorphism);
    let kill = induced_quotient_map(&[x.clone(), Word::identity()], &f2, &f1, params(2), 512).unwrap();
    assert!(kill.is_surjective() && !kill.is_injective());
    let shear = induced_quotient_map(&[x.mul(&y).unwrap(), y], &f2, &f2, params(2), 512).unwrap();
    assert!(shear.is_isomorphism);
}

#[test]
fn lie_counts() {
    assert_eq!((witt_rank(1, 2), witt_rank(2, 2), witt_rank(2, 3)), (0, 1, 2));
    let names = |w| hall_basis(2, w).unwrap().iter().map(|e| e.tree.to_string()).collect::<Vec<_>>();
    assert_eq!(names(1), ["x1", "x2"]);
    assert_eq!(names(2), ["[x2,x1]"]);
    assert_eq!(names(3), ["[[x2,x1],x1]", "[[x2,x1],x2]"]);
    assert_eq!(
        [1, 2, 3].map(relation_rank_free_class2),
        [0, 2, 8]
    );
}
