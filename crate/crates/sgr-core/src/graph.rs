//! The cell-graph model: vertices carrying counterclockwise rotations of
//! darts, directed labeled edges, and rays out to infinity.
//!
//! A dart is one side of an edge (tail or head) or a ray. Every dart is
//! owned by exactly one vertex and appears exactly once in that vertex's
//! rotation. Edges point from tail to head. Rays never disappear once a
//! graph is built: surgeries move them between vertices but the set of ray
//! ids and the number of rays (always `n`) are fixed for the lifetime of
//! the graph.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::frame::SectorFrame;

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident, $prefix:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_type!(
    /// Identifier of a vertex.
    VertexId,
    "v"
);
id_type!(
    /// Identifier of an edge.
    EdgeId,
    "e"
);
id_type!(
    /// Identifier of a ray.
    RayId,
    "r"
);

/// One incidence of an edge or ray at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dart {
    /// The tail side of an edge (the edge leaves through this dart).
    EdgeTail(EdgeId),
    /// The head side of an edge (the edge arrives through this dart).
    EdgeHead(EdgeId),
    /// A ray to infinity.
    Ray(RayId),
}

impl Dart {
    /// The opposite side of the same edge; rays have no twin.
    #[must_use]
    pub fn twin(self) -> Option<Dart> {
        match self {
            Dart::EdgeTail(e) => Some(Dart::EdgeHead(e)),
            Dart::EdgeHead(e) => Some(Dart::EdgeTail(e)),
            Dart::Ray(_) => None,
        }
    }

    #[must_use]
    pub fn edge_id(self) -> Option<EdgeId> {
        match self {
            Dart::EdgeTail(e) | Dart::EdgeHead(e) => Some(e),
            Dart::Ray(_) => None,
        }
    }

    #[must_use]
    pub fn ray_id(self) -> Option<RayId> {
        match self {
            Dart::Ray(r) => Some(r),
            _ => None,
        }
    }

    /// Sort key used only when fixing the printed start of a canonical
    /// rotation: edge darts before ray darts, edges by id with tail before
    /// head, rays by id.
    #[must_use]
    pub fn canonical_key(self) -> (u8, u32, u8) {
        match self {
            Dart::EdgeTail(e) => (0, e.0, 0),
            Dart::EdgeHead(e) => (0, e.0, 1),
            Dart::Ray(r) => (1, r.0, 0),
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dart::EdgeTail(e) => write!(f, "e{}.t", e),
            Dart::EdgeHead(e) => write!(f, "e{}.h", e),
            Dart::Ray(r) => write!(f, "r{}", r),
        }
    }
}

/// A directed labeled edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: usize,
    pub tail: VertexId,
    pub head: VertexId,
}

/// Structural problems detected while assembling or mutating a graph.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureIssue {
    #[error("rotation of vertex {vertex} mentions unknown dart {dart}")]
    UnknownDart { vertex: VertexId, dart: String },
    #[error("dart {dart} reused; it already appears in the rotation of vertex {first}")]
    DartReused { dart: String, first: VertexId },
    #[error("dangling twin: dart {dart} of edge {edge} appears in no rotation")]
    DanglingTwin { edge: EdgeId, dart: String },
    #[error("ray {ray} appears in no rotation")]
    DanglingRay { ray: RayId },
    #[error("ray count mismatch: frame needs {expected} rays, graph has {found}")]
    RayCountMismatch { expected: usize, found: usize },
    #[error("edge {edge} has label {label}, out of range for n = {n}")]
    LabelOutOfRange {
        edge: EdgeId,
        label: usize,
        n: usize,
    },
    #[error("edge {edge} refers to missing vertex {vertex}")]
    MissingEndpoint { edge: EdgeId, vertex: VertexId },
    #[error("anchor ray {ray} does not exist")]
    AnchorMissing { ray: RayId },
    #[error("anchor sector {sector} out of range for n = {n}")]
    AnchorSectorOutOfRange { sector: usize, n: usize },
    #[error("graph has no vertices")]
    Empty,
}

/// A plane graph with rotations, directed labeled edges, rays, and one
/// anchored ray fixing the sector assignment of the unbounded faces.
#[derive(Debug, Clone)]
pub struct CellGraph {
    frame: SectorFrame,
    rotations: BTreeMap<VertexId, Vec<Dart>>,
    edges: BTreeMap<EdgeId, Edge>,
    rays: BTreeMap<RayId, VertexId>,
    anchor: (RayId, usize),
    next_vertex: u32,
    next_edge: u32,
}

impl CellGraph {
    /// Assembles a graph from explicit parts and verifies the structural
    /// invariants: every dart of every edge and ray appears in exactly one
    /// rotation, endpoints exist, the ray count matches the frame, and the
    /// anchor names an existing ray.
    pub fn from_parts(
        frame: SectorFrame,
        rotations: BTreeMap<VertexId, Vec<Dart>>,
        edges: BTreeMap<EdgeId, Edge>,
        rays: BTreeMap<RayId, VertexId>,
        anchor: (RayId, usize),
    ) -> Result<Self, StructureIssue> {
        let next_vertex = rotations.keys().map(|v| v.0 + 1).max().unwrap_or(0);
        let next_edge = edges.keys().map(|e| e.0 + 1).max().unwrap_or(0);
        let g = CellGraph {
            frame,
            rotations,
            edges,
            rays,
            anchor,
            next_vertex,
            next_edge,
        };
        g.check_structure()?;
        Ok(g)
    }

    /// Full structural check; used at assembly time and as a debug assertion
    /// after surgeries.
    pub fn check_structure(&self) -> Result<(), StructureIssue> {
        if self.rotations.is_empty() {
            return Err(StructureIssue::Empty);
        }
        // Where each dart should live according to edge/ray records.
        let mut expected: BTreeMap<(u8, u32, u8), VertexId> = BTreeMap::new();
        for (&e, edge) in &self.edges {
            if edge.label >= self.frame.n() {
                return Err(StructureIssue::LabelOutOfRange {
                    edge: e,
                    label: edge.label,
                    n: self.frame.n(),
                });
            }
            for (v, d) in [
                (edge.tail, Dart::EdgeTail(e)),
                (edge.head, Dart::EdgeHead(e)),
            ] {
                if !self.rotations.contains_key(&v) {
                    return Err(StructureIssue::MissingEndpoint { edge: e, vertex: v });
                }
                expected.insert(d.canonical_key(), v);
            }
        }
        for (&r, &owner) in &self.rays {
            if !self.rotations.contains_key(&owner) {
                return Err(StructureIssue::DanglingRay { ray: r });
            }
            expected.insert(Dart::Ray(r).canonical_key(), owner);
        }
        let mut seen: BTreeMap<(u8, u32, u8), VertexId> = BTreeMap::new();
        for (&v, rot) in &self.rotations {
            for &d in rot {
                let key = d.canonical_key();
                match expected.get(&key) {
                    Some(&want) if want == v => {}
                    _ => {
                        return Err(StructureIssue::UnknownDart {
                            vertex: v,
                            dart: d.to_string(),
                        })
                    }
                }
                if let Some(&first) = seen.get(&key) {
                    return Err(StructureIssue::DartReused {
                        dart: d.to_string(),
                        first,
                    });
                }
                seen.insert(key, v);
            }
        }
        for (&e, _) in &self.edges {
            for d in [Dart::EdgeTail(e), Dart::EdgeHead(e)] {
                if !seen.contains_key(&d.canonical_key()) {
                    return Err(StructureIssue::DanglingTwin {
                        edge: e,
                        dart: d.to_string(),
                    });
                }
            }
        }
        for (&r, _) in &self.rays {
            if !seen.contains_key(&Dart::Ray(r).canonical_key()) {
                return Err(StructureIssue::DanglingRay { ray: r });
            }
        }
        if self.rays.len() != self.frame.n() {
            return Err(StructureIssue::RayCountMismatch {
                expected: self.frame.n(),
                found: self.rays.len(),
            });
        }
        if !self.rays.contains_key(&self.anchor.0) {
            return Err(StructureIssue::AnchorMissing { ray: self.anchor.0 });
        }
        if self.anchor.1 >= self.frame.n() {
            return Err(StructureIssue::AnchorSectorOutOfRange {
                sector: self.anchor.1,
                n: self.frame.n(),
            });
        }
        Ok(())
    }

    #[must_use]
    pub fn frame(&self) -> &SectorFrame {
        &self.frame
    }

    #[must_use]
    pub fn anchor(&self) -> (RayId, usize) {
        self.anchor
    }

    pub fn set_anchor(&mut self, ray: RayId, sector: usize) {
        debug_assert!(self.rays.contains_key(&ray));
        self.anchor = (ray, sector);
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations.keys().copied()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn ray_ids(&self) -> impl Iterator<Item = RayId> + '_ {
        self.rays.keys().copied()
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotations[&v]
    }

    #[must_use]
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[&e]
    }

    #[must_use]
    pub fn ray_owner(&self, r: RayId) -> VertexId {
        self.rays[&r]
    }

    #[must_use]
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.rotations.contains_key(&v)
    }

    /// The vertex whose rotation holds this dart.
    #[must_use]
    pub fn owner(&self, d: Dart) -> VertexId {
        match d {
            Dart::EdgeTail(e) => self.edges[&e].tail,
            Dart::EdgeHead(e) => self.edges[&e].head,
            Dart::Ray(r) => self.rays[&r],
        }
    }

    /// Label of the edge a dart belongs to; `None` for rays.
    #[must_use]
    pub fn dart_label(&self, d: Dart) -> Option<usize> {
        d.edge_id().map(|e| self.edges[&e].label)
    }

    fn position(&self, v: VertexId, d: Dart) -> usize {
        self.rotations[&v]
            .iter()
            .position(|&x| x == d)
            .unwrap_or_else(|| panic!("dart {d} not at vertex {v}"))
    }

    /// The dart counterclockwise after `d` around its owner.
    #[must_use]
    pub fn rot_next(&self, d: Dart) -> Dart {
        let v = self.owner(d);
        let rot = &self.rotations[&v];
        let i = self.position(v, d);
        rot[(i + 1) % rot.len()]
    }

    /// The dart clockwise before `d` around its owner.
    #[must_use]
    pub fn rot_prev(&self, d: Dart) -> Dart {
        let v = self.owner(d);
        let rot = &self.rotations[&v];
        let i = self.position(v, d);
        rot[(i + rot.len() - 1) % rot.len()]
    }

    // ----- surgery helpers ------------------------------------------------

    /// Creates an isolated vertex with an empty rotation.
    pub fn new_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.rotations.insert(v, Vec::new());
        v
    }

    /// Records a new edge; the caller must place both darts before the next
    /// structural check.
    pub fn new_edge(&mut self, label: usize, tail: VertexId, head: VertexId) -> EdgeId {
        let e = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(e, Edge { label, tail, head });
        e
    }

    pub fn set_label(&mut self, e: EdgeId, label: usize) {
        self.edges.get_mut(&e).expect("edge exists").label = label;
    }

    /// Installs a complete new rotation for `v` and re-homes every dart in
    /// it (edge endpoint or ray owner becomes `v`).
    ///
    /// Surgeries compute the new rotations of all affected vertices from the
    /// pristine graph first and then install them one by one; a dart that
    /// moved away from `v` must end up in some other vertex's new rotation
    /// before the surgery is considered finished.
    pub fn set_rotation(&mut self, v: VertexId, rotation: Vec<Dart>) {
        for &d in &rotation {
            match d {
                Dart::EdgeTail(e) => self.edges.get_mut(&e).expect("edge").tail = v,
                Dart::EdgeHead(e) => self.edges.get_mut(&e).expect("edge").head = v,
                Dart::Ray(r) => {
                    self.rays.insert(r, v);
                }
            }
        }
        self.rotations.insert(v, rotation);
    }

    /// Deletes an edge whose darts have already been removed from all
    /// rotations.
    pub fn delete_edge(&mut self, e: EdgeId) {
        debug_assert!(self
            .rotations
            .values()
            .all(|rot| rot.iter().all(|d| d.edge_id() != Some(e))));
        self.edges.remove(&e);
    }

    /// Deletes a vertex with an empty rotation.
    pub fn delete_vertex(&mut self, v: VertexId) {
        debug_assert!(self.rotations[&v].is_empty());
        self.rotations.remove(&v);
    }

    /// Renumbers every id according to the given maps, producing a fresh
    /// graph. Used by canonicalization. Maps must be total and injective on
    /// the graph's ids.
    #[must_use]
    pub fn renumbered(
        &self,
        vmap: &BTreeMap<VertexId, VertexId>,
        emap: &BTreeMap<EdgeId, EdgeId>,
        rmap: &BTreeMap<RayId, RayId>,
    ) -> CellGraph {
        let map_dart = |d: Dart| match d {
            Dart::EdgeTail(e) => Dart::EdgeTail(emap[&e]),
            Dart::EdgeHead(e) => Dart::EdgeHead(emap[&e]),
            Dart::Ray(r) => Dart::Ray(rmap[&r]),
        };
        let rotations = self
            .rotations
            .iter()
            .map(|(v, rot)| (vmap[v], rot.iter().map(|&d| map_dart(d)).collect()))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|(e, edge)| {
                (
                    emap[e],
                    Edge {
                        label: edge.label,
                        tail: vmap[&edge.tail],
                        head: vmap[&edge.head],
                    },
                )
            })
            .collect();
        let rays = self.rays.iter().map(|(r, v)| (rmap[r], vmap[v])).collect();
        let anchor = (rmap[&self.anchor.0], self.anchor.1);
        CellGraph::from_parts(self.frame.clone(), rotations, edges, rays, anchor)
            .expect("renumbering preserves structure")
    }

    /// Replaces every edge label `j` by `j + by` and shifts the anchor
    /// sector by the same amount. With `by = n/2` this realizes the central
    /// relabeling whose fixed points are the centrally symmetric graphs.
    #[must_use]
    pub fn shifted_labels(&self, by: usize) -> CellGraph {
        let mut g = self.clone();
        for edge in g.edges.values_mut() {
            edge.label = (edge.label + by) % self.frame.n();
        }
        g.anchor.1 = (g.anchor.1 + by) % self.frame.n();
        g
    }

    /// All edges between the two endpoints of `e`, including `e` itself.
    #[must_use]
    pub fn parallel_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let (a, b) = {
            let edge = &self.edges[&e];
            (edge.tail, edge.head)
        };
        self.edges
            .iter()
            .filter(|(_, x)| (x.tail == a && x.head == b) || (x.tail == b && x.head == a))
            .map(|(&id, _)| id)
            .collect()
    }
}
