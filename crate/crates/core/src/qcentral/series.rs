//! The descending q-central series on explicit tables.

use std::collections::BTreeSet;

use crate::arith::SeriesParams;
use crate::error::{Error, Result};

use super::table::{FiniteGroupTable, GroupHom};

/// `H -> H^q [H, G]` for a normal subgroup `H` of `G`.
pub fn series_step_oracle(g: &FiniteGroupTable, subgroup: &BTreeSet<usize>, params: SeriesParams) -> Result<BTreeSet<usize>> {
    if subgroup.iter().any(|&h| h >= g.order()) || !g.is_subgroup(subgroup) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_normal(subgroup) {
        return Err(Error::NotNormal);
    }
    let mut gens = BTreeSet::new();
    for &h in subgroup {
        gens.insert(g.pow(h, params.q));
        for x in 0..g.order() {
            gens.insert(g.commutator(h, x));
        }
    }
    let gens: Vec<usize> = gens.into_iter().collect();
    Ok(g.generated_subgroup(&gens).into_iter().collect())
}

/// `G^(i)` as an element set, `i >= 1`.
pub fn series_term(g: &FiniteGroupTable, i: u32, params: SeriesParams) -> Result<BTreeSet<usize>> {
    let mut term: BTreeSet<usize> = (0..g.order()).collect();
    for _ in 1..i {
        term = series_step_oracle(g, &term, params)?;
    }
    Ok(term)
}

/// `G^[i] = G / G^(i)` with its projection.
pub fn series_quotient(g: &FiniteGroupTable, i: u32, params: SeriesParams) -> Result<(FiniteGroupTable, GroupHom)> {
    g.quotient(&series_term(g, i, params)?)
}
