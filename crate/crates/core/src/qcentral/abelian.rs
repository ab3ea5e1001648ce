//! The second quotient `G / G^q [G, G]`.

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::linalg::{quotient_module, Cokernel};
use crate::presentation::Presentation;

use super::table::FiniteGroupTable;

/// `(Z/q)^n` modulo the exponent-sum rows of the relators.
pub fn second_quotient_module(pres: &Presentation, params: SeriesParams) -> Result<Cokernel> {
    pres.validate()?;
    let ring = params.ring();
    let n = pres.rank();
    let rows = pres
        .relators
        .iter()
        .map(|r| r.exponent_sums(n).into_iter().map(|e| ring.from_i128(e)).collect())
        .collect();
    Ok(quotient_module(ring, n, rows))
}

/// `G^[2]` as an explicit abelian table whose listed generators are the
/// images of the presentation generators.
///
/// For `q = p` this is `(Z/q)^r` with `r = n - rank` of the exponent matrix.
/// For composite `q` the factors are the invariants of the cokernel and need
/// not all equal `q`.
pub fn second_quotient(pres: &Presentation, params: SeriesParams, order_bound: u64) -> Result<FiniteGroupTable> {
    let module = second_quotient_module(pres, params)?;
    if module.size() > order_bound as u128 {
        return Err(Error::SizeOverflow {
            order: module.size().to_string(),
            bound: order_bound,
        });
    }
    let orders: Vec<u64> = module.orders().iter().map(|&o| o as u64).collect();
    let table = FiniteGroupTable::abelian(&orders)?;
    let n = pres.rank();
    let gens = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            let c = module.coords(&e);
            let mut x = 0usize;
            for (k, &o) in orders.iter().enumerate().rev() {
                x = x * o as usize + c[k] as usize;
            }
            x
        })
        .collect();
    table.with_generators(gens)
}
