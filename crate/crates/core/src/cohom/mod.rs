//! Mod-q cohomology of explicit finite groups in degrees 1 and 2.
//!
//! Coefficients are `Z/q` with trivial action. For composite `q` the groups
//! are reported by their cyclic invariants, and `dimension` counts the
//! cyclic summands. The decomposable part of `H^2` is the span of cup
//! products of two degree-1 classes.

mod engine;
mod maps;
mod pairing;
mod report;

pub use engine::{
    cup, decomposable_h2, h1, h2, is_normalized_cocycle, CochainClass, CohomologyRecord, CohomologySpace,
    Decomposable, H1, H2, DEFAULT_H2_BOUND,
};
pub use maps::{compose_columns, induced_h_maps, inflation, pullback, InducedHMaps};
pub use pairing::{pairing_gram, pairings_equivalent, PairingTensor, MAX_PAIRING_RANK};
pub use report::{cohomology_report, CohomologyReport};
