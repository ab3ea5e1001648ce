//! Inflation and maps induced on `H^1` and decomposable `H^2`.

use serde::{Deserialize, Serialize};

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::linalg::span_module;
use crate::qcentral::{FiniteGroupTable, GroupHom};

use super::engine::{decomposable_with, h1, CochainClass};

/// Pull a cochain on `dst` back along `pi: src -> dst`.
pub fn pullback(pi: &GroupHom, src: &FiniteGroupTable, dst: &FiniteGroupTable, c: &CochainClass) -> Result<CochainClass> {
    if c.group_order != dst.order() || pi.images.len() != src.order() {
        return Err(Error::DimensionMismatch("map and cochain do not match".into()));
    }
    let n = src.order();
    let values = match c.degree {
        1 => pi.images.iter().map(|&x| c.values[x]).collect(),
        _ => {
            let mut v = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    v.push(c.at(pi.apply(a), pi.apply(b)));
                }
            }
            v
        }
    };
    Ok(CochainClass {
        degree: c.degree,
        modulus: c.modulus,
        group_order: n,
        values,
    })
}

/// Inflation along a surjective homomorphism `quotient_map: G -> Q`.
pub fn inflation(quotient_map: &GroupHom, g: &FiniteGroupTable, q: &FiniteGroupTable, c: &CochainClass) -> Result<CochainClass> {
    quotient_map.check(g, q)?;
    if !quotient_map.is_surjective(q.order()) {
        return Err(Error::NotHomomorphism("inflation needs a surjective map".into()));
    }
    pullback(quotient_map, g, q, c)
}

/// Matrices of `pi^*` for `pi: G1 -> G2`. Column `j` holds the coordinates
/// in the `G1` basis of the pullback of basis element `j` of `G2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedHMaps {
    pub h1: Vec<Vec<u32>>,
    pub h1_orders: (Vec<u32>, Vec<u32>),
    pub h1_bijective: bool,
    pub dec: Vec<Vec<u32>>,
    pub dec_orders: (Vec<u32>, Vec<u32>),
    pub dec_bijective: bool,
}

pub fn induced_h_maps(pi: &GroupHom, g1: &FiniteGroupTable, g2: &FiniteGroupTable, params: SeriesParams) -> Result<InducedHMaps> {
    pi.check(g1, g2)?;
    let ring = params.ring();
    let (a1, a2) = (h1(g1, params), h1(g2, params));
    let h1_cols = a2
        .space
        .basis
        .iter()
        .map(|b| a1.coords(&pullback(pi, g1, g2, b)?))
        .collect::<Result<Vec<_>>>()?;
    let (d1, d2) = (decomposable_with(g1, params, None)?, decomposable_with(g2, params, None)?);
    let dec_cols = d2
        .basis
        .iter()
        .map(|b| {
            d1.coords(&pullback(pi, g1, g2, b)?)?
                .ok_or_else(|| Error::Malformed("pullback left the decomposable part".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bij = |cols: &[Vec<u32>], src: &[u32], dst: &[u32]| {
        let size = |o: &[u32]| o.iter().map(|&x| x as u128).product::<u128>();
        size(src) == size(dst) && span_module(ring, dst, cols).size() == size(dst)
    };
    Ok(InducedHMaps {
        h1_bijective: bij(&h1_cols, &a2.space.invariants, &a1.space.invariants),
        dec_bijective: bij(&dec_cols, &d2.invariants, &d1.invariants),
        h1_orders: (a1.space.invariants.clone(), a2.space.invariants.clone()),
        dec_orders: (d1.invariants.clone(), d2.invariants.clone()),
        h1: h1_cols,
        dec: dec_cols,
    })
}

/// Columns of the composite `first` then `second`, entries reduced by the
/// target orders: `(second . first)_j = sum_k first_kj second_k`.
pub fn compose_columns(first: &[Vec<u32>], second: &[Vec<u32>], orders: &[u32]) -> Vec<Vec<u32>> {
    first
        .iter()
        .map(|col| {
            (0..orders.len())
                .map(|r| {
                    let s: u64 = col.iter().zip(second).map(|(&c, s)| c as u64 * s[r] as u64).sum();
                    (s % orders[r] as u64) as u32
                })
                .collect()
        })
        .collect()
}
