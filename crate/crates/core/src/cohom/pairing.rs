//! Cup-product tensors `H^1 x H^1 -> H^2_dec` and their comparison up to
//! change of basis.

use serde::{Deserialize, Serialize};

use crate::arith::{SeriesParams, Zq};
use crate::error::{Error, Result};
use crate::linalg::{relation_rows, span_module, ColumnReduction};
use crate::qcentral::FiniteGroupTable;

use super::engine::{decomposable_with, Decomposable};

/// Largest source rank accepted by [`pairings_equivalent`].
pub const MAX_PAIRING_RANK: usize = 4;

/// A bilinear map `A x A -> B` in chosen bases, `values[i][j]` holding the
/// coordinates of the product of basis elements `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingTensor {
    pub modulus: u64,
    pub m: usize,
    pub target_dim: usize,
    pub source_orders: Vec<u32>,
    pub target_orders: Vec<u32>,
    pub values: Vec<Vec<Vec<u32>>>,
}

impl PairingTensor {
    pub fn from_decomposable(d: &Decomposable) -> Self {
        Self {
            modulus: d.modulus,
            m: d.h1.space.dimension,
            target_dim: d.dimension,
            source_orders: d.h1.space.invariants.clone(),
            target_orders: d.invariants.clone(),
            values: d.cups.clone(),
        }
    }

    /// The zero tensor on an `m`-dimensional source.
    pub fn zero(modulus: u64, m: usize) -> Self {
        Self {
            modulus,
            m,
            target_dim: 0,
            source_orders: vec![modulus as u32; m],
            target_orders: Vec::new(),
            values: vec![vec![Vec::new(); m]; m],
        }
    }

    fn flat(&self) -> Vec<Vec<u32>> {
        self.values.iter().flatten().cloned().collect()
    }
}

/// Cup-product tensor of `G` in decomposable-`H^2` coordinates.
pub fn pairing_gram(g: &FiniteGroupTable, params: SeriesParams, order_bound: u64) -> Result<PairingTensor> {
    if g.order() as u64 > order_bound {
        return Err(Error::SizeOverflow {
            order: g.order().to_string(),
            bound: order_bound,
        });
    }
    Ok(PairingTensor::from_decomposable(&decomposable_with(g, params, None)?))
}

/// Whether some automorphisms of source and target carry `t1` to `t2`.
///
/// Both tensors are assumed to have values spanning their targets, which
/// holds for cup products onto the decomposable part and for symbols onto
/// `k_2`. Then a target automorphism exists iff, after the source change,
/// the two families of values satisfy the same linear relations. Source
/// changes are searched column by column, pruning on the relations among
/// the products of the columns chosen so far.
pub fn pairings_equivalent(t1: &PairingTensor, t2: &PairingTensor) -> Result<bool> {
    if t1.modulus != t2.modulus {
        return Err(Error::DimensionMismatch("tensors over different moduli".into()));
    }
    let m = t1.m.max(t2.m);
    if m > MAX_PAIRING_RANK {
        return Err(Error::RankBound {
            rank: m,
            bound: MAX_PAIRING_RANK,
        });
    }
    let sorted = |v: &[u32]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    if t1.m != t2.m
        || sorted(&t1.source_orders) != sorted(&t2.source_orders)
        || sorted(&t1.target_orders) != sorted(&t2.target_orders)
    {
        return Ok(false);
    }
    let ring = SeriesParams::from_q(t1.modulus)?.ring();
    let span_size = |t: &PairingTensor| span_module(ring, &t.target_orders, &t.flat()).size();
    if span_size(t1) != span_size(t2) {
        return Ok(false);
    }
    let mut search = Search {
        ring,
        t1,
        t2,
        columns: Vec::new(),
        candidates: all_vectors(t1.modulus as u32, t1.m),
    };
    Ok(search.run())
}

struct Search<'a> {
    ring: Zq,
    t1: &'a PairingTensor,
    t2: &'a PairingTensor,
    /// Images of the source basis of `t2` written in the source basis of `t1`.
    columns: Vec<Vec<u32>>,
    candidates: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let k = self.columns.len();
        if k == self.t1.m {
            return true;
        }
        let o = self.t2.source_orders[k];
        for c in self.candidates.clone() {
            // the column must have order dividing that of the basis element it replaces
            let ok_order = c
                .iter()
                .zip(&self.t1.source_orders)
                .all(|(&x, &ok)| (x as u64 * o as u64) % ok as u64 == 0);
            if !ok_order {
                continue;
            }
            self.columns.push(c);
            if self.independent() && self.relations_agree() && self.run() {
                return true;
            }
            self.columns.pop();
        }
        false
    }

    /// The chosen columns span a copy of the matching summands of `t2`'s
    /// source.
    fn independent(&self) -> bool {
        let want: u128 = self.t2.source_orders[..self.columns.len()].iter().map(|&o| o as u128).product();
        span_module(self.ring, &self.t1.source_orders, &self.columns).size() == want
    }

    fn transformed(&self, i: usize, j: usize) -> Vec<u32> {
        let t = self.t1;
        let (a, b) = (&self.columns[i], &self.columns[j]);
        (0..t.target_dim)
            .map(|r| {
                let o = t.target_orders[r] as u64;
                let mut s = 0u64;
                for k in 0..t.m {
                    for l in 0..t.m {
                        s += a[k] as u64 * b[l] as u64 % o * t.values[k][l][r] as u64 % o;
                    }
                }
                (s % o) as u32
            })
            .collect()
    }

    fn relations_agree(&self) -> bool {
        let k = self.columns.len();
        let mut v1 = Vec::with_capacity(k * k);
        let mut v2 = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                v1.push(self.transformed(i, j));
                v2.push(self.t2.values[i][j].clone());
            }
        }
        annihilates(&self.ring, &self.t1.target_orders, &v1, &self.t2.target_orders, &v2)
            && annihilates(&self.ring, &self.t2.target_orders, &v2, &self.t1.target_orders, &v1)
    }
}

/// Every relation among `a` also holds among `b`.
fn annihilates(ring: &Zq, oa: &[u32], a: &[Vec<u32>], ob: &[u32], b: &[Vec<u32>]) -> bool {
    let rels = ColumnReduction::new(*ring, relation_rows(ring, oa, a), a.len()).kernel();
    let rows_b = relation_rows(ring, ob, b);
    rels.iter()
        .all(|(lam, _)| rows_b.iter().all(|row| crate::linalg::dot(ring, row, lam) == 0))
}

fn all_vectors(q: u32, m: usize) -> Vec<Vec<u32>> {
    let total = (q as usize).pow(m as u32);
    (0..total)
        .map(|mut x| {
            (0..m)
                .map(|_| {
                    let d = (x % q as usize) as u32;
                    x /= q as usize;
                    d
                })
                .collect()
        })
        .filter(|v: &Vec<u32>| v.iter().any(|&d| d != 0))
        .collect()
}
