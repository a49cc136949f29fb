//! Canonical form: trailing-chain trimming, breadth-first renumbering, and
//! the byte-for-byte equality it induces.
//!
//! Two graphs are considered equal when their canonical texts agree. The
//! canonical form is computed by trimming removable tail vertices, then
//! serializing the graph once per ray (re-anchored at that ray with the
//! sector it already flanks counterclockwise, so the sector assignment
//! never moves) and keeping the lexicographically smallest text.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::faces::{FaceData, FaceError};
use crate::format::to_text;
use crate::graph::{CellGraph, Dart, EdgeId, RayId, VertexId};

#[derive(Debug, Error)]
pub enum CanonicalError {
    #[error("face structure unusable: {0}")]
    Faces(#[from] FaceError),
    #[error("graph is not connected")]
    Disconnected,
}

/// A canonicalized graph together with the renaming that produced it.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// The trimmed, renumbered graph.
    pub graph: CellGraph,
    /// Its serialization; equal texts mean equal graphs.
    pub text: String,
    /// Map from the surviving input vertices to canonical ids.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    /// Map from the input rays to canonical ids (total: rays are never
    /// trimmed away, only relocated).
    pub ray_map: BTreeMap<RayId, RayId>,
}

/// A vertex is a removable tail when it carries exactly one ray flanked by
/// sectors `(a, b)`, one edge per dominant flank (labeled `a` pointing away
/// from the vertex, labeled `b` pointing toward it), all edges to a single
/// neighbor, the rotation reads `[tail(a-edge), ray, head(b-edge)]`
/// counterclockwise with the absent flanks dropped, and the twin darts sit
/// counterclockwise-consecutively at the neighbor. Removing it and putting
/// the ray in the twin bundle's place leaves an equal graph one vertex
/// smaller; this runs to a fixed point.
pub fn trim(g: &CellGraph) -> Result<CellGraph, CanonicalError> {
    let mut g = g.clone();
    loop {
        let faces = FaceData::compute(&g)?;
        let candidate = g.vertex_ids().find_map(|v| trimmable(&g, &faces, v));
        match candidate {
            None => return Ok(g),
            Some(plan) => apply_trim(&mut g, &plan),
        }
    }
}

struct TrimPlan {
    vertex: VertexId,
    ray: RayId,
    neighbor: VertexId,
    /// Edges to delete: `(edge, twin dart at the neighbor)` in the order
    /// the bundle appears counterclockwise at the neighbor.
    bundle: Vec<(EdgeId, Dart)>,
}

fn trimmable(g: &CellGraph, faces: &FaceData, v: VertexId) -> Option<TrimPlan> {
    if g.vertex_count() == 1 {
        return None;
    }
    let rot = g.rotation(v);
    let rays: Vec<RayId> = rot.iter().filter_map(|d| d.ray_id()).collect();
    let [ray] = rays.as_slice() else { return None };
    let ray = *ray;
    let (a, b) = faces.ray_flanks(ray);
    let frame = g.frame();
    let expected_edges = usize::from(frame.is_dominant(a)) + usize::from(frame.is_dominant(b));
    if rot.len() != 1 + expected_edges {
        return None;
    }

    // Walk the rotation cyclically starting at the ray: the counterclockwise
    // successor must be the b-edge head (if b is dominant), then back around
    // to the a-edge tail (if a is dominant).
    let ray_dart = Dart::Ray(ray);
    let mut neighbor = None;
    let mut a_edge = None;
    let mut b_edge = None;
    if frame.is_dominant(b) {
        match g.rot_next(ray_dart) {
            Dart::EdgeHead(e) if g.edge(e).label == b && g.edge(e).tail != v => {
                neighbor = Some(g.edge(e).tail);
                b_edge = Some(e);
            }
            _ => return None,
        }
    }
    if frame.is_dominant(a) {
        match g.rot_prev(ray_dart) {
            Dart::EdgeTail(e) if g.edge(e).label == a && g.edge(e).head != v => {
                if let Some(w) = neighbor {
                    if g.edge(e).head != w {
                        return None;
                    }
                }
                neighbor = Some(g.edge(e).head);
                a_edge = Some(e);
            }
            _ => return None,
        }
    }
    let neighbor = neighbor?;

    // The twin bundle at the neighbor must be counterclockwise-consecutive
    // in the order [a-head, b-tail].
    let mut bundle = Vec::new();
    if let Some(e) = a_edge {
        bundle.push((e, Dart::EdgeHead(e)));
    }
    if let Some(e) = b_edge {
        bundle.push((e, Dart::EdgeTail(e)));
    }
    if bundle.len() == 2 && g.rot_next(bundle[0].1) != bundle[1].1 {
        return None;
    }
    Some(TrimPlan {
        vertex: v,
        ray,
        neighbor,
        bundle,
    })
}

fn apply_trim(g: &mut CellGraph, plan: &TrimPlan) {
    let mut rot: Vec<Dart> = g.rotation(plan.neighbor).to_vec();
    let first = plan.bundle[0].1;
    let pos = rot
        .iter()
        .position(|&d| d == first)
        .expect("bundle dart at neighbor");
    rot[pos] = Dart::Ray(plan.ray);
    if plan.bundle.len() == 2 {
        let second = plan.bundle[1].1;
        rot.retain(|&d| d != second);
    }
    g.set_rotation(plan.vertex, Vec::new());
    g.set_rotation(plan.neighbor, rot);
    for &(e, _) in &plan.bundle {
        g.delete_edge(e);
    }
    g.delete_vertex(plan.vertex);
    debug_assert!(g.check_structure().is_ok());
}

/// Breadth-first renumbering from one anchored ray. Vertices are numbered
/// in discovery order; edge and ray ids in order of first appearance while
/// scanning each rotation, the root's scan starting at the anchor ray and
/// every other vertex's at the dart through which it was discovered.
fn candidate(
    g: &CellGraph,
    anchor_ray: RayId,
    sector: usize,
) -> Result<(String, BTreeMap<VertexId, VertexId>, BTreeMap<RayId, RayId>), CanonicalError> {
    let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut emap: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut rmap: BTreeMap<RayId, RayId> = BTreeMap::new();
    let root = g.ray_owner(anchor_ray);
    vmap.insert(root, VertexId(1));
    let mut queue: VecDeque<(VertexId, Dart)> = VecDeque::from([(root, Dart::Ray(anchor_ray))]);
    while let Some((v, start)) = queue.pop_front() {
        let rot = g.rotation(v);
        let offset = rot
            .iter()
            .position(|&d| d == start)
            .expect("scan start dart at vertex");
        for i in 0..rot.len() {
            let d = rot[(offset + i) % rot.len()];
            match d {
                Dart::EdgeTail(e) | Dart::EdgeHead(e) => {
                    let next = EdgeId(emap.len() as u32 + 1);
                    emap.entry(e).or_insert(next);
                    let twin = d.twin().expect("edge dart");
                    let other = g.owner(twin);
                    if !vmap.contains_key(&other) {
                        vmap.insert(other, VertexId(vmap.len() as u32 + 1));
                        queue.push_back((other, twin));
                    }
                }
                Dart::Ray(r) => {
                    let next = RayId(rmap.len() as u32 + 1);
                    rmap.entry(r).or_insert(next);
                }
            }
        }
    }
    if vmap.len() != g.vertex_count() {
        return Err(CanonicalError::Disconnected);
    }

    let mut renumbered = g.clone();
    renumbered.set_anchor(anchor_ray, sector);
    let mut renumbered = renumbered.renumbered(&vmap, &emap, &rmap);
    // Fix the printed start of each rotation.
    for v in renumbered.vertex_ids().collect::<Vec<_>>() {
        let rot = renumbered.rotation(v).to_vec();
        let min = rot
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| d.canonical_key())
            .map(|(i, _)| i)
            .expect("nonempty rotation");
        let rotated: Vec<Dart> = rot[min..]
            .iter()
            .chain(rot[..min].iter())
            .copied()
            .collect();
        renumbered.set_rotation(v, rotated);
    }
    Ok((to_text(&renumbered), vmap, rmap))
}

/// Trims and renumbers a graph into its canonical form.
pub fn canonicalize(g: &CellGraph) -> Result<Canonical, CanonicalError> {
    let trimmed = trim(g)?;
    let faces = FaceData::compute(&trimmed)?;
    let mut best: Option<(String, BTreeMap<VertexId, VertexId>, BTreeMap<RayId, RayId>)> = None;
    for r in trimmed.ray_ids() {
        let (_, ccw) = faces.ray_flanks(r);
        let cand = candidate(&trimmed, r, ccw)?;
        if best.as_ref().is_none_or(|b| cand.0 < b.0) {
            best = Some(cand);
        }
    }
    let (text, vertex_map, ray_map) = best.expect("graphs have rays");
    let graph = crate::format::from_text(&text).expect("canonical text round-trips");
    Ok(Canonical {
        graph,
        text,
        vertex_map,
        ray_map,
    })
}

/// Canonical text only.
pub fn canonical_text(g: &CellGraph) -> Result<String, CanonicalError> {
    Ok(canonicalize(g)?.text)
}

/// Equality up to trimming and renumbering.
pub fn equals(a: &CellGraph, b: &CellGraph) -> Result<bool, CanonicalError> {
    Ok(canonical_text(a)? == canonical_text(b)?)
}
