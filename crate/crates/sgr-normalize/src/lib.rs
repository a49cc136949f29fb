//! Normalization of centrally symmetric cell graphs.
//!
//! Two passes, both driven by the halved braid moves and composite rewrites
//! of `sgr-braid` and both returning a digest-checked [`ActionLog`]:
//!
//! * [`to_ivy`] gathers every branching vertex onto the roots, producing a
//!   graph in ivy form while strictly lowering the root metric.
//! * [`reduce`] continues from ivy form to the canonical representative of
//!   the graph's monodromy class: stems dissolved (or, on alternating
//!   frames, merged into a single stem pair at the lowest slot) and the
//!   central doubled edge rotated to the lowest dominant label.
//!
//! [`component_invariant`] names the value that separates monodromy classes
//! on a frame: the center shape in general, the bounded face count on
//! alternating frames.

mod gather;
mod invariant;
mod reduce;

pub use gather::to_ivy;
pub use invariant::{component_invariant, ComponentInvariant};
pub use reduce::reduce;

use sgr_braid::{ActionError, MacroError};
use sgr_core::{CanonicalError, FaceError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NormalizeError {
    #[error("input graph fails validation or is not centrally symmetric")]
    BadInput,
    #[error("braid move failed during normalization: {0}")]
    Action(#[from] ActionError),
    #[error("composite rewrite failed during normalization: {0}")]
    Macro(#[from] MacroError),
    #[error("canonical form failed during normalization: {0}")]
    Canonical(#[from] CanonicalError),
    #[error("face traversal failed during normalization: {0}")]
    Faces(#[from] FaceError),
    #[error("normalization stalled: {detail}")]
    Stalled { detail: String },
}
