//! Isotropy strata, isovariant link models, integer homology and
//! connectivity bounds for finite group actions on simplicial complexes.

pub mod cli;
pub mod complexes;
pub mod conncalc;
pub mod error;
pub mod groups;
pub mod homology;
pub mod strata;
pub mod universe;

pub use error::{Error, Result};
