//! Normalized bar cochains in degrees 1 and 2 with trivial `Z/q` action.
//!
//! A normalized 2-cocycle is determined by its values `f(x, s)` on the
//! listed generators `s`: the identity `δf(g, h, s) = 0` reads
//! `f(g, hs) = f(g, h) + f(gh, s) - f(h, s)`, so `f(g, -)` unrolls along a
//! spanning tree of the Cayley graph. The remaining Cayley edges give the
//! linear conditions, and `δf(g, h, ks) = δf(g, h, k)` shows those suffice.

use serde::{Deserialize, Serialize};

use crate::arith::{SeriesParams, Zq};
use crate::error::{Error, Result};
use crate::linalg::{quotient_module, solve, relation_rows, span_module, ColumnReduction, Cokernel};
use crate::qcentral::FiniteGroupTable;

/// Default bound on `|G|` for the full `H^2` solve.
pub const DEFAULT_H2_BOUND: u64 = 64;

/// A cochain of degree 1 (`G -> Z/q`, indexed by element) or degree 2
/// (`G x G -> Z/q`, index `g * |G| + h`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainClass {
    pub degree: u8,
    pub modulus: u64,
    pub group_order: usize,
    pub values: Vec<u32>,
}

impl CochainClass {
    pub fn zero(degree: u8, modulus: u64, group_order: usize) -> Self {
        let len = if degree == 1 { group_order } else { group_order * group_order };
        Self {
            degree,
            modulus,
            group_order,
            values: vec![0; len],
        }
    }

    pub fn at(&self, g: usize, h: usize) -> u32 {
        self.values[g * self.group_order + h]
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&x| x != 0).count()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.modulus != other.modulus || self.group_order != other.group_order {
            return Err(Error::DimensionMismatch("cochains on different groups or moduli".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let q = self.modulus as u32;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % q).collect();
        Ok(Self { values, ..self.clone() })
    }

    pub fn scale(&self, k: u32) -> Self {
        let q = self.modulus;
        let values = self.values.iter().map(|&a| (a as u64 * k as u64 % q) as u32).collect();
        Self { values, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        self.scale((self.modulus - 1) as u32)
    }
}

/// A basis of `H^1` or `H^2` with representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologySpace {
    pub degree: u8,
    pub modulus: u64,
    /// Orders of the cyclic summands; all equal `q` when `q` is prime.
    pub invariants: Vec<u32>,
    /// Number of cyclic summands.
    pub dimension: usize,
    pub basis: Vec<CochainClass>,
}

/// Summary record of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRecord {
    pub degree: u8,
    pub modulus: u64,
    pub dimension: usize,
    pub invariants: Vec<u32>,
    pub basis_support_size: usize,
}

impl CohomologySpace {
    pub fn record(&self) -> CohomologyRecord {
        CohomologyRecord {
            degree: self.degree,
            modulus: self.modulus,
            dimension: self.dimension,
            invariants: self.invariants.clone(),
            basis_support_size: self.basis.iter().map(|c| c.support_size()).sum(),
        }
    }
}

/// Spanning tree data shared by both degrees.
pub(crate) struct Bar<'a> {
    pub g: &'a FiniteGroupTable,
    pub ring: Zq,
    pub gens: Vec<usize>,
    /// `(child, parent, slot)` with `child = parent * gens[slot]`, parents first.
    tree: Vec<(usize, usize, usize)>,
    /// Cayley edges `(h, slot, h * gens[slot])` outside the tree.
    extra: Vec<(usize, usize, usize)>,
    /// Index of each non-identity element, `usize::MAX` at the identity.
    slot_of: Vec<usize>,
}

impl<'a> Bar<'a> {
    pub fn new(g: &'a FiniteGroupTable, params: SeriesParams) -> Self {
        let gens = g.effective_generators();
        let n = g.order();
        let mut seen = vec![false; n];
        seen[g.identity()] = true;
        let mut queue = std::collections::VecDeque::from([g.identity()]);
        let mut tree = Vec::new();
        let mut extra = Vec::new();
        while let Some(h) = queue.pop_front() {
            for (s, &x) in gens.iter().enumerate() {
                let k = g.mul(h, x);
                if seen[k] {
                    extra.push((h, s, k));
                } else {
                    seen[k] = true;
                    tree.push((k, h, s));
                    queue.push_back(k);
                }
            }
        }
        let mut slot_of = vec![usize::MAX; n];
        let mut next = 0;
        for (x, slot) in slot_of.iter_mut().enumerate() {
            if x != g.identity() {
                *slot = next;
                next += 1;
            }
        }
        Self {
            g,
            ring: params.ring(),
            gens,
            tree,
            extra,
            slot_of,
        }
    }

    pub fn n_params(&self) -> usize {
        (self.g.order() - 1) * self.gens.len()
    }

    /// Parameter index of `f(x, s)`, `None` when `x` is the identity.
    fn param(&self, x: usize, s: usize) -> Option<usize> {
        let i = self.slot_of[x];
        (i != usize::MAX).then(|| i * self.gens.len() + s)
    }

    // ----- degree 1 -----

    /// Values of a homomorphism on all elements from its values on the
    /// generators.
    fn unroll1(&self, on_gens: &[u32]) -> Vec<u32> {
        let mut phi = vec![0u32; self.g.order()];
        for &(k, h, s) in &self.tree {
            phi[k] = self.ring.add(phi[h], on_gens[s]);
        }
        phi
    }

    fn h1_reduction(&self) -> ColumnReduction {
        let sgen = self.gens.len();
        let mut sym = vec![vec![0u32; sgen]; self.g.order()];
        for &(k, h, s) in &self.tree {
            let mut v = sym[h].clone();
            v[s] = self.ring.add(v[s], 1);
            sym[k] = v;
        }
        let rows = self
            .extra
            .iter()
            .map(|&(h, s, k)| {
                let mut v = sym[h].clone();
                v[s] = self.ring.add(v[s], 1);
                v.iter().zip(&sym[k]).map(|(&a, &b)| self.ring.sub(a, b)).collect()
            })
            .collect();
        ColumnReduction::new(self.ring, rows, sgen)
    }

    // ----- degree 2 -----

    /// Full table of a normalized cocycle from its parameters.
    pub fn unroll2(&self, params: &[u32]) -> Vec<u32> {
        let n = self.g.order();
        let r = &self.ring;
        let val = |x: usize, s: usize| self.param(x, s).map_or(0, |i| params[i]);
        let mut f = vec![0u32; n * n];
        for g in 0..n {
            let row = &mut f[g * n..(g + 1) * n];
            for &(k, h, s) in &self.tree {
                let gh = self.g.mul(g, h);
                row[k] = r.sub(r.add(row[h], val(gh, s)), val(h, s));
            }
        }
        f
    }

    /// Parameters of a degree-2 cochain table.
    pub fn restrict2(&self, f: &[u32]) -> Vec<u32> {
        let n = self.g.order();
        let mut out = vec![0u32; self.n_params()];
        for x in 0..n {
            for (s, &sx) in self.gens.iter().enumerate() {
                if let Some(i) = self.param(x, s) {
                    out[i] = f[x * n + sx];
                }
            }
        }
        out
    }

    /// Parameters of the coboundary of the indicator 1-cochain of `e`.
    fn coboundary_of_point(&self, e: usize) -> Vec<u32> {
        let r = &self.ring;
        let ind = |x: usize| u32::from(x == e);
        let mut out = vec![0u32; self.n_params()];
        for x in 0..self.g.order() {
            for (s, &sx) in self.gens.iter().enumerate() {
                if let Some(i) = self.param(x, s) {
                    out[i] = r.sub(r.add(ind(x), ind(sx)), ind(self.g.mul(x, sx)));
                }
            }
        }
        out
    }

    pub fn coboundaries(&self) -> Vec<Vec<u32>> {
        (0..self.g.order())
            .filter(|&e| e != self.g.identity())
            .map(|e| self.coboundary_of_point(e))
            .collect()
    }

    fn z2_reduction(&self) -> ColumnReduction {
        let n = self.g.order();
        let np = self.n_params();
        let r = &self.ring;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for g in 0..n {
            if g == self.g.identity() {
                continue;
            }
            // F[h] = coefficients of f(g, h) in the parameters
            let mut sym = vec![Vec::new(); n];
            sym[self.g.identity()] = vec![0u32; np];
            let edge = |sym: &Vec<Vec<u32>>, h: usize, s: usize| {
                let mut v = sym[h].clone();
                if let Some(i) = self.param(self.g.mul(g, h), s) {
                    v[i] = r.add(v[i], 1);
                }
                if let Some(i) = self.param(h, s) {
                    v[i] = r.sub(v[i], 1);
                }
                v
            };
            for &(k, h, s) in &self.tree {
                sym[k] = edge(&sym, h, s);
            }
            for &(h, s, k) in &self.extra {
                let v = edge(&sym, h, s);
                let row: Vec<u32> = v.iter().zip(&sym[k]).map(|(&a, &b)| r.sub(a, b)).collect();
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        rows.sort_unstable();
        rows.dedup();
        ColumnReduction::new(self.ring, rows, np)
    }
}

/// `H^1(G, Z/q) = Hom(G, Z/q)` with coordinates.
#[derive(Clone, Debug)]
pub struct H1 {
    pub space: CohomologySpace,
    red: ColumnReduction,
    gens: Vec<usize>,
}

impl H1 {
    /// Coordinates of a homomorphism `G -> Z/q` on the basis.
    pub fn coords(&self, phi: &CochainClass) -> Result<Vec<u32>> {
        if phi.degree != 1 || phi.modulus != self.space.modulus {
            return Err(Error::DimensionMismatch("expected a degree-1 cochain".into()));
        }
        let on_gens: Vec<u32> = self.gens.iter().map(|&s| phi.values[s]).collect();
        Ok(self.red.kernel_coords(&on_gens))
    }
}

pub fn h1(g: &FiniteGroupTable, params: SeriesParams) -> H1 {
    let bar = Bar::new(g, params);
    let red = bar.h1_reduction();
    let ker = red.kernel();
    let basis = ker
        .iter()
        .map(|(v, _)| CochainClass {
            degree: 1,
            modulus: params.q,
            group_order: g.order(),
            values: bar.unroll1(v),
        })
        .collect();
    let invariants: Vec<u32> = ker.iter().map(|&(_, o)| o).collect();
    H1 {
        space: CohomologySpace {
            degree: 1,
            modulus: params.q,
            dimension: invariants.len(),
            invariants,
            basis,
        },
        red,
        gens: bar.gens,
    }
}

/// `H^2(G, Z/q)` with coordinates.
#[derive(Clone, Debug)]
pub struct H2 {
    pub space: CohomologySpace,
    z2: ColumnReduction,
    module: Cokernel,
    gens: Vec<usize>,
    group: FiniteGroupTable,
}

impl H2 {
    /// Coordinates of the class of a normalized 2-cocycle.
    pub fn coords(&self, f: &CochainClass) -> Result<Vec<u32>> {
        let n = self.group.order();
        if f.degree != 2 || f.modulus != self.space.modulus || f.group_order != n {
            return Err(Error::DimensionMismatch("expected a degree-2 cochain on this group".into()));
        }
        if !satisfies_generator_identities(&self.group, &self.gens, f) {
            return Err(Error::Malformed("not a normalized 2-cocycle".into()));
        }
        let mut params = Vec::with_capacity((n - 1) * self.gens.len());
        for x in (0..n).filter(|&x| x != self.group.identity()) {
            for &s in &self.gens {
                params.push(f.values[x * n + s]);
            }
        }
        let z = self.z2.kernel_coords(&params);
        Ok(self.module.coords(&z))
    }

    pub fn is_zero_class(&self, f: &CochainClass) -> Result<bool> {
        Ok(self.coords(f)?.iter().all(|&x| x == 0))
    }
}

pub fn h2(g: &FiniteGroupTable, params: SeriesParams, h2_bound: u64) -> Result<H2> {
    if g.order() as u64 > h2_bound {
        return Err(Error::SizeOverflow {
            order: g.order().to_string(),
            bound: h2_bound,
        });
    }
    let bar = Bar::new(g, params);
    let ring = bar.ring;
    let z2 = bar.z2_reduction();
    let zgens = z2.kernel();
    let nz = zgens.len();
    let mut rels: Vec<Vec<u32>> = Vec::new();
    for (i, &(_, o)) in zgens.iter().enumerate() {
        if o as u64 != params.q {
            let mut v = vec![0u32; nz];
            v[i] = o;
            rels.push(v);
        }
    }
    for b in bar.coboundaries() {
        rels.push(z2.kernel_coords(&b));
    }
    let module = quotient_module(ring, nz, rels);
    let basis = (0..module.len())
        .map(|i| {
            let c = module.basis_rep(i);
            let mut p = vec![0u32; bar.n_params()];
            for (k, (v, _)) in zgens.iter().enumerate() {
                if c[k] == 0 {
                    continue;
                }
                for (pi, &x) in p.iter_mut().zip(v) {
                    *pi = ring.add(*pi, ring.mul(c[k], x));
                }
            }
            CochainClass {
                degree: 2,
                modulus: params.q,
                group_order: g.order(),
                values: bar.unroll2(&p),
            }
        })
        .collect();
    Ok(H2 {
        space: CohomologySpace {
            degree: 2,
            modulus: params.q,
            invariants: module.orders().to_vec(),
            dimension: module.dimension(),
            basis,
        },
        z2,
        module,
        gens: bar.gens.clone(),
        group: g.clone(),
    })
}

/// Normalization and `δf(a, b, s) = 0` for listed generators `s`, which
/// implies the full cocycle identity.
fn satisfies_generator_identities(g: &FiniteGroupTable, gens: &[usize], f: &CochainClass) -> bool {
    let n = g.order();
    let q = f.modulus;
    let e = g.identity();
    if (0..n).any(|x| f.at(e, x) != 0 || f.at(x, e) != 0) {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = g.mul(a, b);
            gens.iter().all(|&c| {
                let lhs = f.at(a, b) as u64 + f.at(ab, c) as u64;
                let rhs = f.at(b, c) as u64 + f.at(a, g.mul(b, c)) as u64;
                lhs % q == rhs % q
            })
        })
    })
}

/// `(a ∪ b)(g, h) = a(g) b(h)`.
pub fn cup(a: &CochainClass, b: &CochainClass) -> Result<CochainClass> {
    if a.degree != 1 || b.degree != 1 {
        return Err(Error::DimensionMismatch("cup expects degree-1 cochains".into()));
    }
    if a.modulus != b.modulus || a.group_order != b.group_order {
        return Err(Error::DimensionMismatch("cochains on different groups or moduli".into()));
    }
    let q = a.modulus;
    let mut values = Vec::with_capacity(a.group_order * a.group_order);
    for &x in &a.values {
        for &y in &b.values {
            values.push((x as u64 * y as u64 % q) as u32);
        }
    }
    Ok(CochainClass {
        degree: 2,
        modulus: q,
        group_order: a.group_order,
        values,
    })
}

/// True iff `f` is normalized and satisfies the 2-cocycle identity on
/// the whole domain.
pub fn is_normalized_cocycle(g: &FiniteGroupTable, f: &CochainClass) -> bool {
    let n = g.order();
    let q = f.modulus;
    let e = g.identity();
    if (0..n).any(|x| f.at(e, x) != 0 || f.at(x, e) != 0) {
        return false;
    }
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ab = g.mul(a, b);
            (0..n).all(|c| {
                let lhs = f.at(a, b) as u64 + f.at(ab, c) as u64;
                let rhs = f.at(b, c) as u64 + f.at(a, g.mul(b, c)) as u64;
                lhs % q == rhs % q
            })
        })
    })
}

/// The decomposable part of `H^2`: the span of cup products of `H^1`
/// classes, computed as `(cups + B^2) / B^2` without solving for `Z^2`.
#[derive(Clone, Debug)]
pub struct Decomposable {
    pub modulus: u64,
    /// Cyclic orders of the decomposable subgroup.
    pub invariants: Vec<u32>,
    pub dimension: usize,
    /// `cups[i][j]` are the coordinates of `[a_i ∪ a_j]`.
    pub cups: Vec<Vec<Vec<u32>>>,
    /// Representatives of the basis, as cochain tables.
    pub basis: Vec<CochainClass>,
    /// `H^2` coordinates of the basis, when the full `H^2` was computed.
    pub inclusion: Option<Vec<Vec<u32>>>,
    pub h1: H1,
    ambient: Cokernel,
    span: Cokernel,
    cup_ambient: Vec<Vec<u32>>,
    restrict: Restrictor,
}

/// Maps a 2-cochain table to its generator parameters.
#[derive(Clone, Debug)]
struct Restrictor {
    gens: Vec<usize>,
    order: usize,
    identity: usize,
}

impl Restrictor {
    fn apply(&self, f: &[u32]) -> Vec<u32> {
        let n = self.order;
        let mut out = Vec::new();
        for x in (0..n).filter(|&x| x != self.identity) {
            for &s in &self.gens {
                out.push(f[x * n + s]);
            }
        }
        out
    }
}

impl Decomposable {
    /// Coordinates of a decomposable class, `None` if `f` is not in the
    /// span of cup products modulo coboundaries.
    pub fn coords(&self, f: &CochainClass) -> Result<Option<Vec<u32>>> {
        if f.degree != 2 || f.modulus != self.modulus {
            return Err(Error::DimensionMismatch("expected a degree-2 cochain".into()));
        }
        let t = self.ambient.coords(&self.restrict.apply(&f.values));
        let ring = crate::arith::SeriesParams::from_q(self.modulus)?.ring();
        let rows = relation_rows(&ring, self.ambient.orders(), &self.cup_ambient);
        let q = ring.modulus();
        let b: Vec<u32> = t
            .iter()
            .zip(self.ambient.orders())
            .map(|(&x, &o)| ring.mul(x, q / o))
            .collect();
        Ok(solve(ring, &rows, self.cup_ambient.len(), &b).map(|lam| self.span.coords(&lam)))
    }
}

/// Decomposable `H^2`, with the `H^2` inclusion when `|G| <= h2_bound`.
pub fn decomposable_h2(g: &FiniteGroupTable, params: SeriesParams, h2_bound: u64) -> Result<Decomposable> {
    let full = if g.order() as u64 <= h2_bound {
        Some(h2(g, params, h2_bound)?)
    } else {
        None
    };
    decomposable_with(g, params, full.as_ref())
}

pub(crate) fn decomposable_with(g: &FiniteGroupTable, params: SeriesParams, full: Option<&H2>) -> Result<Decomposable> {
    let bar = Bar::new(g, params);
    let ring = bar.ring;
    let h1 = h1(g, params);
    let ambient = quotient_module(ring, bar.n_params(), bar.coboundaries());
    let m = h1.space.dimension;
    let mut cup_tables = Vec::with_capacity(m * m);
    let mut cup_ambient = Vec::with_capacity(m * m);
    for a in &h1.space.basis {
        for b in &h1.space.basis {
            let c = cup(a, b)?;
            cup_ambient.push(ambient.coords(&bar.restrict2(&c.values)));
            cup_tables.push(c);
        }
    }
    let span = span_module(ring, ambient.orders(), &cup_ambient);
    let mut cups = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut e = vec![0u32; m * m];
            e[i * m + j] = 1;
            cups[i][j] = span.coords(&e);
        }
    }
    let basis: Vec<CochainClass> = (0..span.len())
        .map(|k| {
            let lam = span.basis_rep(k);
            let mut acc = CochainClass::zero(2, params.q, g.order());
            for (c, &l) in cup_tables.iter().zip(lam) {
                if l != 0 {
                    acc = acc.add(&c.scale(l)).expect("same shape");
                }
            }
            acc
        })
        .collect();
    let inclusion = match full {
        Some(h) => Some(basis.iter().map(|b| h.coords(b)).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    Ok(Decomposable {
        modulus: params.q,
        invariants: span.orders().to_vec(),
        dimension: span.dimension(),
        cups,
        basis,
        inclusion,
        restrict: Restrictor {
            gens: bar.gens.clone(),
            order: g.order(),
            identity: g.identity(),
        },
        h1,
        ambient,
        span,
        cup_ambient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(q: u64) -> SeriesParams {
        SeriesParams::from_q(q).unwrap()
    }

    #[test]
    fn h1_small() {
        assert_eq!(h1(&FiniteGroupTable::cyclic(4), q(2)).space.dimension, 1);
        let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
        assert_eq!(h1(&v4, q(2)).space.dimension, 2);
        assert_eq!(h1(&FiniteGroupTable::cyclic(1), q(2)).space.dimension, 0);
        let h = h1(&FiniteGroupTable::cyclic(2), q(4));
        assert_eq!(h.space.invariants, vec![2]);
    }

    #[test]
    fn h2_small() {
        for qq in [2, 3, 4] {
            let h = h2(&FiniteGroupTable::cyclic(qq), q(qq), 64).unwrap();
            assert_eq!(h.space.invariants, vec![qq as u32], "q = {qq}");
        }
        let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
        assert_eq!(h2(&v4, q(2), 64).unwrap().space.dimension, 3);
        assert_eq!(h2(&FiniteGroupTable::cyclic(4), q(2), 64).unwrap().space.dimension, 1);
        assert_eq!(h2(&FiniteGroupTable::cyclic(1), q(2), 64).unwrap().space.dimension, 0);
        assert!(matches!(
            h2(&FiniteGroupTable::cyclic(128), q(2), 64),
            Err(Error::SizeOverflow { .. })
        ));
    }

    #[test]
    fn basis_cocycles_hold_pointwise() {
        let g = FiniteGroupTable::abelian(&[2, 4]).unwrap();
        let h = h2(&g, q(2), 64).unwrap();
        for b in &h.space.basis {
            assert!(is_normalized_cocycle(&g, b));
        }
        for (i, b) in h.space.basis.iter().enumerate() {
            let mut e = vec![0; h.space.dimension];
            e[i] = 1;
            assert_eq!(h.coords(b).unwrap(), e);
        }
    }

    #[test]
    fn cups_on_small_groups() {
        let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
        let d = decomposable_h2(&v4, q(2), 64).unwrap();
        assert_eq!(d.dimension, 3);
        let z4 = FiniteGroupTable::cyclic(4);
        let d = decomposable_h2(&z4, q(2), 64).unwrap();
        assert_eq!(d.dimension, 0);
        let x = &d.h1.space.basis[0];
        let h = h2(&z4, q(2), 64).unwrap();
        assert!(h.is_zero_class(&cup(x, x).unwrap()).unwrap());
        let zero = CochainClass::zero(1, 2, 4);
        assert!(h.is_zero_class(&cup(&zero, x).unwrap()).unwrap());
        let z2 = FiniteGroupTable::cyclic(2);
        let d = decomposable_h2(&z2, q(2), 64).unwrap();
        assert_eq!(d.dimension, 1);
    }

    #[test]
    fn decomposable_without_full_h2() {
        let v4 = FiniteGroupTable::abelian(&[2, 2]).unwrap();
        let a = decomposable_h2(&v4, q(2), 64).unwrap();
        let b = decomposable_h2(&v4, q(2), 1).unwrap();
        assert_eq!(a.invariants, b.invariants);
        assert!(b.inclusion.is_none());
        assert_eq!(a.inclusion.unwrap().len(), 3);
    }

    #[test]
    fn third_quotients() {
        use crate::parse_presentation;
        use crate::qcentral::{third_quotient, to_table};
        let e22 = to_table(&third_quotient(&crate::Presentation::free("F", 2), q(2), 512).unwrap()).unwrap();
        assert_eq!(h1(&e22, q(2)).space.dimension, 2);
        let d = decomposable_h2(&e22, q(2), 64).unwrap();
        assert_eq!(d.dimension, 0);
        let dem = parse_presentation("group D { generators: s,t; relators: s t s^-1 t^-3; }").unwrap();
        let g = to_table(&third_quotient(&dem, q(2), 512).unwrap()).unwrap();
        let d = decomposable_h2(&g, q(2), 64).unwrap();
        assert_eq!((d.h1.space.dimension, d.dimension), (2, 1));
        let dem7 = parse_presentation("group D { generators: s,t; relators: s t s^-1 t^-7; }").unwrap();
        let g = to_table(&third_quotient(&dem7, q(3), 512).unwrap()).unwrap();
        assert_eq!(g.order(), 81);
        let d = decomposable_h2(&g, q(3), 64).unwrap();
        assert_eq!((d.h1.space.dimension, d.dimension), (2, 1));
    }
}
