//! Isomorphism testing of small tables by invariant pruning and backtracking.

use super::table::{FiniteGroupTable, GroupHom};

/// An isomorphism `g1 -> g2` given by the images of the listed generators
/// of `g1`, together with the full map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub generator_images: Vec<usize>,
    pub map: GroupHom,
}

/// Cheap invariants that must agree for isomorphic groups.
pub fn invariants_match(g1: &FiniteGroupTable, g2: &FiniteGroupTable) -> bool {
    g1.order() == g2.order()
        && g1.exponent() == g2.exponent()
        && g1.order_statistics() == g2.order_statistics()
        && g1.abelian_invariants() == g2.abelian_invariants()
        && g1.center().len() == g2.center().len()
}

/// Decide whether `g1` and `g2` are isomorphic. Generator images are tried
/// in table index order and the first witness found is returned.
pub fn is_isomorphic(g1: &FiniteGroupTable, g2: &FiniteGroupTable) -> (bool, Option<IsoWitness>) {
    match find_isomorphism(g1, g2) {
        Some(w) => (true, Some(w)),
        None => (false, None),
    }
}

pub fn find_isomorphism(g1: &FiniteGroupTable, g2: &FiniteGroupTable) -> Option<IsoWitness> {
    if !invariants_match(g1, g2) {
        return None;
    }
    let gens = g1.generators().to_vec();
    let z1 = center_flags(g1);
    let z2 = center_flags(g2);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..g2.order())
                .filter(|&h| g1.element_order(g) == g2.element_order(h) && z1[g] == z2[h])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g1, g2, &gens, &candidates, &mut images)
}

fn center_flags(g: &FiniteGroupTable) -> Vec<bool> {
    let mut flags = vec![false; g.order()];
    for z in g.center() {
        flags[z] = true;
    }
    flags
}

fn search(
    g1: &FiniteGroupTable,
    g2: &FiniteGroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<IsoWitness> {
    let k = images.len();
    if k == gens.len() {
        let map = extend(g1, g2, gens, images)?;
        if map.images.iter().any(|&x| x == usize::MAX) || !map.is_bijective(g2.order()) {
            return None;
        }
        return Some(IsoWitness {
            generator_images: images.clone(),
            map,
        });
    }
    for &h in &candidates[k] {
        images.push(h);
        if extend(g1, g2, &gens[..=k], images).is_some_and(|m| partial_injective(&m, g2.order())) {
            if let Some(w) = search(g1, g2, gens, candidates, images) {
                return Some(w);
            }
        }
        images.pop();
    }
    None
}

/// Extend generator images over the subgroup they generate. Elements
/// outside it map to `usize::MAX`. Fails on inconsistency.
fn extend(g1: &FiniteGroupTable, g2: &FiniteGroupTable, gens: &[usize], images: &[usize]) -> Option<GroupHom> {
    let mut img = vec![usize::MAX; g1.order()];
    img[g1.identity()] = g2.identity();
    let mut stack = vec![g1.identity()];
    while let Some(x) = stack.pop() {
        for (k, &g) in gens.iter().enumerate() {
            let y = g1.mul(x, g);
            let fy = g2.mul(img[x], images[k]);
            if img[y] == usize::MAX {
                img[y] = fy;
                stack.push(y);
            } else if img[y] != fy {
                return None;
            }
        }
    }
    Some(GroupHom::new(img))
}

fn partial_injective(m: &GroupHom, n: usize) -> bool {
    let mut seen = vec![false; n];
    m.images
        .iter()
        .filter(|&&x| x != usize::MAX)
        .all(|&x| !std::mem::replace(&mut seen[x], true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let z4 = FiniteGroupTable::cyclic(4);
        let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
        assert!(!is_isomorphic(&z4, &v4).0);
        let (ok, w) = is_isomorphic(&v4, &v4);
        assert!(ok);
        let w = w.unwrap();
        assert_eq!(w.map, GroupHom::identity(&v4));
        assert!(w.map.is_homomorphism(&v4, &v4));
    }

    #[test]
    fn product_orderings() {
        let a = FiniteGroupTable::abelian(&[2, 4]).unwrap();
        let b = FiniteGroupTable::abelian(&[4, 2]).unwrap();
        let (ok, w) = is_isomorphic(&a, &b);
        assert!(ok);
        let w = w.unwrap();
        assert!(w.map.is_homomorphism(&a, &b) && w.map.is_bijective(b.order()));
        let c = FiniteGroupTable::abelian(&[8]).unwrap();
        assert!(!is_isomorphic(&a, &c).0);
    }
}
