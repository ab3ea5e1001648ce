//! Maps between third quotients induced by generator substitutions.

use crate::arith::SeriesParams;
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};

use super::class_two::{third_quotient, QuotientModel};
use super::table::GroupHom;

/// A homomorphism `G_1^[3] -> G_2^[3]` between explicit quotients.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: QuotientModel,
    pub target: QuotientModel,
    pub hom: GroupHom,
    pub is_isomorphism: bool,
}

impl InducedMap {
    pub fn is_surjective(&self) -> bool {
        self.hom.is_surjective(self.target.table.order())
    }

    pub fn is_injective(&self) -> bool {
        let n = self.target.table.order();
        let mut seen = vec![false; n];
        self.hom.images.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }
}

/// The map sending source generator `i` to the word `images[i]` in the
/// target generators. Fails if some source relator survives in the target
/// quotient.
pub fn induced_quotient_map(
    images: &[Word],
    source: &Presentation,
    target: &Presentation,
    params: SeriesParams,
    order_bound: u64,
) -> Result<InducedMap> {
    if images.len() != source.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            images.len(),
            source.rank()
        )));
    }
    for w in images {
        if let Some(m) = w.max_generator() {
            if m >= target.rank() {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    len: target.rank(),
                });
            }
        }
    }
    let src = QuotientModel::new(third_quotient(source, params, order_bound)?)?;
    let dst = QuotientModel::new(third_quotient(target, params, order_bound)?)?;
    let col = dst.group.collector();
    let gen_images = images
        .iter()
        .map(|w| col.evaluate_on_generators(w))
        .collect::<Result<Vec<_>>>()?;
    for (k, r) in source.relators.iter().enumerate() {
        if !dst.in_kernel(&col.evaluate_word(r, &gen_images)?) {
            return Err(Error::NotHomomorphismAtLevel3 { relator: k });
        }
    }
    let located: Vec<usize> = gen_images.iter().map(|e| dst.locate(e)).collect();
    let hom = GroupHom::from_generator_images(&src.table, &dst.table, &located)?;
    let is_isomorphism = hom.is_bijective(dst.table.order());
    Ok(InducedMap {
        source: src,
        target: dst,
        hom,
        is_isomorphism,
    })
}
