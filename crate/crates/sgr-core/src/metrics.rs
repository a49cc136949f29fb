//! Distance-weighted branching measures used to steer normalization.

use crate::canonical::trim;
use crate::faces::FaceData;
use crate::graph::CellGraph;
use crate::symmetry::center_type;
use crate::tree::TreeView;

/// Sum over branch vertices (tree degree at least three, rays included) of
/// `(degree - 2)` times the distance to the nearest root, computed on the
/// trimmed graph. Normalization lowers this monotonically; in ivy form the
/// only off-root branch vertices are stem tops of degree three, so the
/// metric equals the total stem length.
///
/// `None` when the graph is not centrally symmetric.
#[must_use]
pub fn root_metric(g: &CellGraph) -> Option<u64> {
    let t = trim(g).ok()?;
    let center = center_type(&t)?;
    let roots = center.roots();
    let tree = TreeView::build(&t);
    let dist = tree.distances_from(&roots);
    let mut total = 0u64;
    for v in t.vertex_ids() {
        let deg = tree.t_degree(v);
        if deg >= 3 {
            total += (deg as u64 - 2) * dist[&v] as u64;
        }
    }
    Some(total)
}

/// Number of bounded faces of the graph.
#[must_use]
pub fn bounded_face_count(g: &CellGraph) -> usize {
    FaceData::compute(g).map_or(0, |f| f.bounded.len())
}
