//! Exhaustive generation of the centrally symmetric standard graphs over a
//! frame, up to a vertex budget.
//!
//! A candidate is a symmetric shape, a symmetric distribution of the rays
//! over the contour corners, and a sector offset. Everything else is
//! forced: each contour stretch between consecutive rays is one unbounded
//! face, each tree edge sees two such sectors, and the dominant-face law
//! dictates whether the edge is single or doubled, its directions, and its
//! labels. The laws then filter the candidates, and trimming plus
//! canonicalization remove duplicates.

use std::collections::BTreeMap;

use thiserror::Error;

use sgr_core::canonical::{canonical_text, canonicalize, trim, CanonicalError};
use sgr_core::format::to_text;
use sgr_core::frame::SectorFrame;
use sgr_core::graph::{CellGraph, Dart, Edge, EdgeId, RayId, StructureIssue, VertexId};
use sgr_core::validate::validate;

use crate::shapes::{symmetric_shapes, Shape};

/// Every centrally symmetric standard graph over one frame with at most
/// `max_vertices` vertices, canonical and sorted by size then text.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub frame: SectorFrame,
    pub max_vertices: usize,
    graphs: Vec<CellGraph>,
    index: BTreeMap<String, usize>,
}

impl Corpus {
    #[must_use]
    pub fn graphs(&self) -> &[CellGraph] {
        &self.graphs
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Index of a graph, matched up to canonical form.
    pub fn position(&self, g: &CellGraph) -> Result<Option<usize>, CanonicalError> {
        Ok(self.index.get(&canonical_text(g)?).copied())
    }

    /// Number of members with each vertex count, keyed by count.
    #[must_use]
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for g in &self.graphs {
            *out.entry(g.vertex_count()).or_insert(0) += 1;
        }
        out
    }
}

/// Failures of the generation pipeline itself; laws merely rejecting a
/// candidate are not errors.
#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error("generated candidate is structurally broken: {0}")]
    Structure(#[from] StructureIssue),
}

/// Enumerates the corpus for `frame` with at most `max_vertices` vertices.
pub fn enumerate(frame: &SectorFrame, max_vertices: usize) -> Result<Corpus, EnumerateError> {
    let n = frame.n();
    let nu = frame.nu();
    let mut graphs: Vec<CellGraph> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();

    for shape in symmetric_shapes(max_vertices) {
        let half_corners = shape.ends.len();
        let distributions = if half_corners == 0 {
            vec![Vec::new()]
        } else {
            compositions(nu, half_corners)
        };
        for half_cuts in &distributions {
            for offset in 0..n {
                let Some(candidate) = build_candidate(frame, &shape, half_cuts, offset)? else {
                    continue;
                };
                let report = validate(&candidate);
                if !report.ok() || report.symmetric != Some(true) {
                    continue;
                }
                let trimmed = trim(&candidate)?;
                if trimmed.vertex_count() != candidate.vertex_count() {
                    continue;
                }
                let canon = canonicalize(&candidate)?.graph;
                let text = to_text(&canon);
                if !index.contains_key(&text) {
                    index.insert(text, graphs.len());
                    graphs.push(canon);
                }
            }
        }
    }

    graphs.sort_by(|a, b| (a.vertex_count(), to_text(a)).cmp(&(b.vertex_count(), to_text(b))));
    let index = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| (to_text(g), i))
        .collect();
    Ok(Corpus {
        frame: frame.clone(),
        max_vertices,
        graphs,
        index,
    })
}

/// All sequences of `bins` nonnegative integers summing to `total`.
fn compositions(total: usize, bins: usize) -> Vec<Vec<usize>> {
    if bins == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if bins == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for rest in compositions(total - first, bins - 1) {
            let mut seq = Vec::with_capacity(bins);
            seq.push(first);
            seq.extend(rest);
            out.push(seq);
        }
    }
    out
}

/// Realizes one candidate, or `None` when the flank sectors force an
/// impossible edge (both sides subdominant, or the same face on both
/// sides).
fn build_candidate(
    frame: &SectorFrame,
    shape: &Shape,
    half_cuts: &[usize],
    offset: usize,
) -> Result<Option<CellGraph>, EnumerateError> {
    let n = frame.n();
    let steps = &shape.contour;
    let tree_edges = shape.ends.len();

    // Rays per corner: the half pattern repeated, so the half turn maps the
    // distribution to itself.
    let corner_rays: Vec<usize> = if tree_edges == 0 {
        vec![n]
    } else {
        (0..2 * tree_edges)
            .map(|k| half_cuts[k % tree_edges])
            .collect()
    };

    // Rays seen strictly before each traversal; corner `k` follows
    // traversal `k`.
    let mut rays_before = Vec::with_capacity(steps.len() + 1);
    let mut acc = 0;
    for &c in &corner_rays {
        rays_before.push(acc);
        acc += c;
    }
    rays_before.push(acc);

    // The face covering a traversal started at the most recent ray; the
    // face starting at the i-th ray overall carries sector offset + i - 1.
    let sector_of = |t: usize| (offset + (rays_before[t] + n - 1) % n) % n;

    let mut edges: BTreeMap<EdgeId, Edge> = BTreeMap::new();
    let mut next_edge = 1u32;
    // Expansion of each tree-edge end into real darts, keyed by (vertex,
    // tree edge), in counterclockwise order.
    let mut expansion: BTreeMap<(usize, usize), Vec<Dart>> = BTreeMap::new();

    for te in 0..tree_edges {
        let fwd = steps
            .iter()
            .position(|s| s.edge == te && (s.from, s.to) == shape.ends[te])
            .expect("every edge is traversed forward");
        let rev = steps
            .iter()
            .position(|s| s.edge == te && (s.to, s.from) == shape.ends[te])
            .expect("every edge is traversed backward");
        let (a, b) = shape.ends[te];
        let x = sector_of(fwd);
        let y = sector_of(rev);
        if x == y {
            return Ok(None);
        }
        match (frame.is_dominant(x), frame.is_dominant(y)) {
            (false, false) => return Ok(None),
            (true, true) => {
                // Two parallel edges with the bigon between them; each
                // outer side is walked against its edge by the dominant
                // face of the edge's label.
                let ex = EdgeId(next_edge);
                let ey = EdgeId(next_edge + 1);
                next_edge += 2;
                edges.insert(
                    ex,
                    Edge {
                        label: x,
                        tail: VertexId(b as u32 + 1),
                        head: VertexId(a as u32 + 1),
                    },
                );
                edges.insert(
                    ey,
                    Edge {
                        label: y,
                        tail: VertexId(a as u32 + 1),
                        head: VertexId(b as u32 + 1),
                    },
                );
                expansion.insert((a, te), vec![Dart::EdgeHead(ex), Dart::EdgeTail(ey)]);
                expansion.insert((b, te), vec![Dart::EdgeHead(ey), Dart::EdgeTail(ex)]);
            }
            (xd, _) => {
                // One real edge, directed so the dominant face walks it
                // head first.
                let (u, w, label) = if xd { (a, b, x) } else { (b, a, y) };
                let e = EdgeId(next_edge);
                next_edge += 1;
                edges.insert(
                    e,
                    Edge {
                        label,
                        tail: VertexId(w as u32 + 1),
                        head: VertexId(u as u32 + 1),
                    },
                );
                expansion.insert((u, te), vec![Dart::EdgeHead(e)]);
                expansion.insert((w, te), vec![Dart::EdgeTail(e)]);
            }
        }
    }

    // Ray ids run along the contour; the corner after each arrival holds
    // the next few.
    let mut corner_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, s) in steps.iter().enumerate() {
        corner_of.insert((s.to, s.edge), k);
    }
    let ray_range = |k: usize| {
        let start = rays_before[k];
        start + 1..=start + corner_rays[k]
    };

    let mut rotations: BTreeMap<VertexId, Vec<Dart>> = BTreeMap::new();
    let mut rays: BTreeMap<RayId, VertexId> = BTreeMap::new();
    for v in 0..shape.vertex_count() {
        let vid = VertexId(v as u32 + 1);
        let mut rotation = Vec::new();
        if tree_edges == 0 {
            for r in 1..=n {
                rotation.push(Dart::Ray(RayId(r as u32)));
                rays.insert(RayId(r as u32), vid);
            }
        } else {
            for &slot in &shape.rot[v] {
                rotation.extend(&expansion[&(v, slot)]);
                let corner = corner_of[&(v, slot)];
                for r in ray_range(corner) {
                    rotation.push(Dart::Ray(RayId(r as u32)));
                    rays.insert(RayId(r as u32), vid);
                }
            }
        }
        rotations.insert(vid, rotation);
    }

    let anchor = (RayId(1), offset);
    let g = CellGraph::from_parts(frame.clone(), rotations, edges, rays, anchor)?;
    Ok(Some(g))
}
