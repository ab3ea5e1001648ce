//! Third q-central quotients of finitely presented pro-p groups, their
//! mod-q cohomology in degrees 1 and 2, and Milnor K-theory mod q of small
//! concrete fields.

pub mod arith;
pub mod cohom;
mod error;
pub mod graded;
pub mod lie;
pub mod linalg;
pub mod milnor;
pub mod presentation;
pub mod qcentral;
pub mod realizability;

pub use arith::SeriesParams;
pub use error::{Error, Result};
pub use presentation::{parse_file, parse_presentation, Presentation, Word};
