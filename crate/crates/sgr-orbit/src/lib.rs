//! Exhaustive corpora of centrally symmetric standard graphs over a sector
//! frame, and their partition into connected components under the squared
//! braid generators.
//!
//! [`enumerate`] produces every valid symmetric graph up to a vertex
//! budget, canonical and deduplicated, by planting rays and forced edge
//! labelings on half-turn symmetric tree shapes. [`orbit_partition`]
//! connects the corpus by the squared generators and returns the
//! components, each certified to carry a single class invariant.

mod enumerate;
mod orbit;
mod shapes;

pub use enumerate::{enumerate, Corpus, EnumerateError};
pub use orbit::{orbit_partition, OrbitClass, OrbitError, OrbitReport};
