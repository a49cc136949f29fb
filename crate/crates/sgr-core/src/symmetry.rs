//! Central symmetry: a graph is centrally symmetric when shifting every
//! label (and the anchor sector) by half a turn yields an equal graph. The
//! witnessing vertex involution is recovered by composing the canonical
//! renumberings of the graph and its shifted copy; it either fixes exactly
//! one vertex or inverts exactly one doubled link of the tree.

use std::collections::BTreeMap;

use crate::canonical::{canonicalize, trim};
use crate::graph::{CellGraph, EdgeId, VertexId};
use crate::tree::TreeView;

/// True when the graph equals its half-turn relabeling.
#[must_use]
pub fn is_centrally_symmetric(g: &CellGraph) -> bool {
    let nu = g.frame().nu();
    match (canonicalize(g), canonicalize(&g.shifted_labels(nu))) {
        (Ok(a), Ok(b)) => a.text == b.text,
        _ => false,
    }
}

/// The vertex involution realizing the central symmetry, on the trimmed
/// graph's vertices. `None` when the graph is not centrally symmetric.
///
/// The map is a genuine involution: rays are pinned by their flank sectors,
/// so an anchored labeled graph has no nontrivial automorphisms and the
/// isomorphism onto the shifted copy is unique.
#[must_use]
pub fn central_involution(g: &CellGraph) -> Option<BTreeMap<VertexId, VertexId>> {
    let trimmed = trim(g).ok()?;
    let nu = trimmed.frame().nu();
    let c1 = canonicalize(&trimmed).ok()?;
    let c2 = canonicalize(&trimmed.shifted_labels(nu)).ok()?;
    if c1.text != c2.text {
        return None;
    }
    let inverse2: BTreeMap<VertexId, VertexId> =
        c2.vertex_map.iter().map(|(&v, &c)| (c, v)).collect();
    let sigma: BTreeMap<VertexId, VertexId> = c1
        .vertex_map
        .iter()
        .map(|(&v, &c)| (v, inverse2[&c]))
        .collect();
    debug_assert!(sigma.iter().all(|(&v, &w)| sigma[&w] == v));
    Some(sigma)
}

/// Where the central symmetry pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterType {
    /// The involution fixes exactly one vertex.
    Vertex(VertexId),
    /// The involution inverts one doubled link; its endpoints are the two
    /// roots and its edges carry labels half a turn apart.
    DoubleEdge {
        roots: (VertexId, VertexId),
        edges: (EdgeId, EdgeId),
    },
}

/// The two possible center shapes, with locations erased. This is the part
/// of [`CenterType`] that is invariant under renumbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CenterTag {
    Vertex,
    DoubleEdge,
}

impl CenterType {
    #[must_use]
    pub fn tag(&self) -> CenterTag {
        match self {
            CenterType::Vertex(_) => CenterTag::Vertex,
            CenterType::DoubleEdge { .. } => CenterTag::DoubleEdge,
        }
    }

    /// The root vertices: the fixed vertex, or both endpoints of the
    /// inverted link.
    #[must_use]
    pub fn roots(&self) -> Vec<VertexId> {
        match self {
            CenterType::Vertex(v) => vec![*v],
            CenterType::DoubleEdge { roots, .. } => vec![roots.0, roots.1],
        }
    }
}

/// Classifies the center of a centrally symmetric graph. Vertex and edge
/// ids refer to the trimmed graph, so callers that need locations should
/// pass an already canonical graph. `None` when not symmetric.
#[must_use]
pub fn center_type(g: &CellGraph) -> Option<CenterType> {
    let trimmed = trim(g).ok()?;
    let sigma = central_involution(&trimmed)?;
    let fixed: Vec<VertexId> = sigma
        .iter()
        .filter(|(v, w)| v == w)
        .map(|(&v, _)| v)
        .collect();
    match fixed.as_slice() {
        [v] => Some(CenterType::Vertex(*v)),
        [] => {
            // No fixed vertex: the involution inverts the middle link of the
            // path from any vertex to its image.
            let tree = TreeView::build(&trimmed);
            let u = trimmed.vertex_ids().next()?;
            let w = sigma[&u];
            let parents = tree.parents_from(&[u]);
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = parents[&cur];
                path.push(cur);
            }
            // path runs w .. u and has odd length in edges.
            let k = path.len() - 1;
            debug_assert!(k % 2 == 1, "fixed-point-free involution inverts an edge");
            let a = path[k / 2];
            let b = path[k / 2 + 1];
            debug_assert_eq!(sigma[&a], b);
            let link_edges: Vec<EdgeId> = tree
                .links(a)
                .iter()
                .find(|l| l.other == b)
                .map(|l| l.edges.clone())
                .unwrap_or_default();
            let [e1, e2] = link_edges.as_slice() else {
                return None;
            };
            let (lo, hi) = if trimmed.edge(*e1).label <= trimmed.edge(*e2).label {
                (*e1, *e2)
            } else {
                (*e2, *e1)
            };
            // Orient the root pair so the first root carries the tail of the
            // lower-labeled central edge.
            let first = trimmed.edge(lo).tail;
            let second = if first == a { b } else { a };
            Some(CenterType::DoubleEdge {
                roots: (first, second),
                edges: (lo, hi),
            })
        }
        _ => None,
    }
}
