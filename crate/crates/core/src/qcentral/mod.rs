//! Third and second q-central quotients as explicit finite groups.
//!
//! Series convention: `G^(1) = G`, `G^(i+1) = (G^(i))^q [G^(i), G]`, and
//! `G^[i] = G / G^(i)`.

mod abelian;
mod class_two;
mod induced;
mod iso;
mod series;
mod table;

pub use abelian::{second_quotient, second_quotient_module};
pub use class_two::{
    extend_to_homomorphism, pair_index, third_quotient, to_table, universal_class2, ClassTwoElement,
    ClassTwoGroup, Collector, GroupRecord, QuotientModel, DEFAULT_ORDER_BOUND,
};
pub use induced::{induced_quotient_map, InducedMap};
pub use iso::{find_isomorphism, invariants_match, is_isomorphic, IsoWitness};
pub use series::{series_quotient, series_step_oracle, series_term};
pub use table::{FiniteGroupTable, GroupHom};

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// `G^[level]` for `level` in `{2, 3}` as a table, with its record.
pub fn quotient_at_level(
    pres: &Presentation,
    level: u32,
    params: SeriesParams,
    order_bound: u64,
) -> Result<(FiniteGroupTable, GroupRecord)> {
    match level {
        2 => {
            let t = second_quotient(pres, params, order_bound)?;
            let rec = GroupRecord::from_table(&t, &pres.generator_names, Vec::new());
            Ok((t, rec))
        }
        3 => {
            let g = third_quotient(pres, params, order_bound)?;
            let t = to_table(&g)?;
            let rec = GroupRecord::from_table(&t, &pres.generator_names, g.kernel_basis.clone());
            Ok((t, rec))
        }
        _ => Err(Error::InvalidParams(format!("level must be 2 or 3, got {level}"))),
    }
}
