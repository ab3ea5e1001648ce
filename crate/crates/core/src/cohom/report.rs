use serde::{Deserialize, Serialize};

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::qcentral::FiniteGroupTable;

use super::engine::{decomposable_with, h2, CohomologyRecord};
use super::pairing::PairingTensor;

/// Degree-1 and degree-2 summary of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub group_order: u64,
    pub h1: CohomologyRecord,
    /// Absent when the group exceeds the `H^2` bound.
    pub h2: Option<CohomologyRecord>,
    pub decomposable_dimension: usize,
    pub decomposable_invariants: Vec<u32>,
    pub pairing: PairingTensor,
}

pub fn cohomology_report(g: &FiniteGroupTable, params: SeriesParams, order_bound: u64, h2_bound: u64) -> Result<CohomologyReport> {
    if g.order() as u64 > order_bound {
        return Err(Error::SizeOverflow {
            order: g.order().to_string(),
            bound: order_bound,
        });
    }
    let full = if g.order() as u64 <= h2_bound {
        Some(h2(g, params, h2_bound)?)
    } else {
        None
    };
    let d = decomposable_with(g, params, full.as_ref())?;
    Ok(CohomologyReport {
        group_order: g.order() as u64,
        h1: d.h1.space.record(),
        h2: full.as_ref().map(|h| h.space.record()),
        decomposable_dimension: d.dimension,
        decomposable_invariants: d.invariants.clone(),
        pairing: PairingTensor::from_decomposable(&d),
    })
}
