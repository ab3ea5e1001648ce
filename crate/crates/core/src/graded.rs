//! Graded algebras in degrees 1 and 2 and their quadratic hulls, truncated
//! at degree 2.

use serde::{Deserialize, Serialize};

use crate::arith::SeriesParams;
use crate::cohom::{decomposable_h2, PairingTensor, MAX_PAIRING_RANK};
use crate::error::{Error, Result};
use crate::linalg::{quotient_module, relation_rows, ColumnReduction};
use crate::milnor::{galois_model, symbol_algebra, FieldDescriptor, SymbolAlgebra};
use crate::qcentral::{third_quotient, to_table, FiniteGroupTable};
use crate::cohom::pairings_equivalent;

/// `A = Z/q + A^1 + A^2` with product `A^1 x A^1 -> A^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAlgebra2 {
    pub q: u64,
    pub dim1: usize,
    pub dim2: usize,
    pub orders1: Vec<u32>,
    pub orders2: Vec<u32>,
    /// `mult[i][j]` = coordinates of `x_i x_j` in `A^2`.
    pub mult: Vec<Vec<Vec<u32>>>,
    /// Sign convention on degree 1: `xy = -yx`, so squares are 2-torsion.
    pub graded_commutative: bool,
}

/// JSON export record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRecord {
    pub q: u64,
    pub dim1: usize,
    pub dim2: usize,
    pub mult: Vec<Vec<Vec<u32>>>,
}

impl GradedAlgebra2 {
    pub fn record(&self) -> GradedRecord {
        GradedRecord {
            q: self.q,
            dim1: self.dim1,
            dim2: self.dim2,
            mult: self.mult.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("plain data")
    }

    pub fn as_pairing(&self) -> PairingTensor {
        PairingTensor {
            modulus: self.q,
            m: self.dim1,
            target_dim: self.dim2,
            source_orders: self.orders1.clone(),
            target_orders: self.orders2.clone(),
            values: self.mult.clone(),
        }
    }

    fn from_pairing(t: PairingTensor, graded_commutative: bool) -> Self {
        Self {
            q: t.modulus,
            dim1: t.m,
            dim2: t.target_dim,
            orders1: t.source_orders,
            orders2: t.target_orders,
            mult: t.values,
            graded_commutative,
        }
    }
}

/// `H^1` and decomposable `H^2` of `G` with the cup product.
pub fn algebra_from_cohomology(g: &FiniteGroupTable, params: SeriesParams, order_bound: u64) -> Result<GradedAlgebra2> {
    if g.order() as u64 > order_bound {
        return Err(Error::SizeOverflow {
            order: g.order().to_string(),
            bound: order_bound,
        });
    }
    let d = decomposable_h2(g, params, 0)?;
    Ok(GradedAlgebra2::from_pairing(PairingTensor::from_decomposable(&d), true))
}

/// `k_1` and `k_2` with the symbol product.
pub fn algebra_from_milnor(s: &SymbolAlgebra) -> Result<GradedAlgebra2> {
    let m = s.k1_basis.len();
    if m > MAX_PAIRING_RANK {
        return Err(Error::RankBound {
            rank: m,
            bound: MAX_PAIRING_RANK,
        });
    }
    Ok(GradedAlgebra2 {
        q: s.modulus,
        dim1: m,
        dim2: s.k2_invariants.len(),
        orders1: s.k1_orders.clone(),
        orders2: s.k2_invariants.clone(),
        mult: s.pairing.clone(),
        graded_commutative: true,
    })
}

/// Degree-2 truncation of the quadratic hull: `A^1` unchanged, degree 2
/// equal to `A^1 ⊗ A^1` modulo `x y + y x` (which removes squares for odd
/// `p` and keeps them for `q = 2`) and the kernel of the product.
pub fn quadratic_hull(a: &GradedAlgebra2) -> Result<GradedAlgebra2> {
    let ring = SeriesParams::from_q(a.q)?.ring();
    let m = a.dim1;
    let idx = |i: usize, j: usize| i * m + j;
    let mut rels: Vec<Vec<u32>> = Vec::new();
    let products: Vec<Vec<u32>> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).map(|(i, j)| a.mult[i][j].clone()).collect();
    rels.extend(
        ColumnReduction::new(ring, relation_rows(&ring, &a.orders2, &products), m * m)
            .kernel()
            .into_iter()
            .map(|(v, _)| v),
    );
    for i in 0..m {
        for j in 0..m {
            // graded commutativity
            let mut v = vec![0u32; m * m];
            v[idx(i, j)] = ring.add(v[idx(i, j)], 1);
            v[idx(j, i)] = ring.add(v[idx(j, i)], 1);
            rels.push(v);
            // x_i ⊗ x_j is killed by the order of either factor
            let o = a.orders1[i].min(a.orders1[j]);
            let mut v = vec![0u32; m * m];
            v[idx(i, j)] = ring.from_i128(o as i128);
            rels.push(v);
        }
    }
    let hull = quotient_module(ring, m * m, rels);
    let mut mult = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut e = vec![0u32; m * m];
            e[idx(i, j)] = 1;
            mult[i][j] = hull.coords(&e);
        }
    }
    Ok(GradedAlgebra2 {
        q: a.q,
        dim1: m,
        dim2: hull.dimension(),
        orders1: a.orders1.clone(),
        orders2: hull.orders().to_vec(),
        mult,
        graded_commutative: true,
    })
}

/// Outcome of comparing the Galois side with the Milnor side of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub field: String,
    pub q: u64,
    pub group_order: u64,
    pub galois: GradedRecord,
    pub milnor: GradedRecord,
    pub pairing_equivalent: bool,
    pub consistent: bool,
    pub diff: Vec<String>,
}

/// Third quotient of the field's Galois model, its cup-product algebra, and
/// the symbol algebra, compared in degrees 1 and 2.
pub fn compare_field(field: &FieldDescriptor, order_bound: u64) -> Result<CompareReport> {
    let model = galois_model(field)?;
    let g = to_table(&third_quotient(&model, field.params, order_bound)?)?;
    let galois = algebra_from_cohomology(&g, field.params, order_bound)?;
    let milnor = algebra_from_milnor(&symbol_algebra(field)?)?;
    let sorted = |v: &[u32]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    let mut diff = Vec::new();
    if galois.dim1 != milnor.dim1 || sorted(&galois.orders1) != sorted(&milnor.orders1) {
        diff.push(format!("degree 1: H^1 {:?} vs k1 {:?}", galois.orders1, milnor.orders1));
    }
    if galois.dim2 != milnor.dim2 || sorted(&galois.orders2) != sorted(&milnor.orders2) {
        diff.push(format!("degree 2: dec H^2 {:?} vs k2 {:?}", galois.orders2, milnor.orders2));
    }
    let pairing_equivalent = diff.is_empty() && pairings_equivalent(&galois.as_pairing(), &milnor.as_pairing())?;
    if diff.is_empty() && !pairing_equivalent {
        diff.push("cup product and symbol pairing are not equivalent".into());
    }
    Ok(CompareReport {
        field: field.kind.to_string(),
        q: field.params.q,
        group_order: g.order() as u64,
        galois: galois.record(),
        milnor: milnor.record(),
        pairing_equivalent,
        consistent: diff.is_empty(),
        diff,
    })
}
