//! The value that separates monodromy classes on a frame.
//!
//! On a frame with an adjacent dominant pair the braid moves can change
//! everything except the center shape, so the class is named by the center
//! tag. On an alternating frame both center shapes occur inside one class;
//! there the bounded face count is conserved instead and names the class.

use sgr_core::{bounded_face_count, center_type, CellGraph, CenterTag};

/// Class invariant of a centrally symmetric graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentInvariant {
    Center(CenterTag),
    ZeroCount(usize),
}

/// Computes the invariant; `None` when the graph is not centrally
/// symmetric.
#[must_use]
pub fn component_invariant(g: &CellGraph) -> Option<ComponentInvariant> {
    let center = center_type(g)?;
    if g.frame().is_alternating() {
        Some(ComponentInvariant::ZeroCount(bounded_face_count(g)))
    } else {
        Some(ComponentInvariant::Center(center.tag()))
    }
}
