//! Face traversal for plane cell graphs.
//!
//! A corner is a pair of darts `(a, b)` at one vertex with `b` the
//! counterclockwise successor of `a`; it stands for the wedge of the plane
//! between them. Walking a face clockwise (interior on the right) steps
//! from corner `(a, b)` by traversing `b`: across an edge to the corner
//! `(twin(b), next(twin(b)))`, or out to infinity when `b` is a ray.
//!
//! Every dart is traversed by exactly one face, so the corners partition
//! among the faces. Each unbounded face starts at the ray it flanks
//! counterclockwise and ends at the ray it flanks clockwise; chaining
//! end ray to start ray visits the unbounded faces in counterclockwise
//! order around infinity, which is what assigns them their sectors.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{CellGraph, Dart, EdgeId, RayId, VertexId};

/// A corner of a face: `b` is the counterclockwise successor of `a` in the
/// rotation of `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub vertex: VertexId,
    pub a: Dart,
    pub b: Dart,
}

/// One unbounded face, walked clockwise from its start ray to its end ray.
#[derive(Debug, Clone)]
pub struct UnboundedFace {
    /// The ray whose counterclockwise flank this face is; the walk starts
    /// here.
    pub start_ray: RayId,
    /// The ray whose clockwise flank this face is; the walk ends by
    /// traversing it.
    pub end_ray: RayId,
    /// Sector index assigned by chaining from the anchor.
    pub sector: usize,
    pub corners: Vec<Corner>,
    /// Edge darts traversed by the walk, in walk order. An `EdgeHead` here
    /// means the walk ran against the edge direction (the face lies on the
    /// edge's left), an `EdgeTail` means it ran with it (face on the right).
    pub traversed: Vec<Dart>,
}

impl UnboundedFace {
    /// Vertices in walk order (deduplicated consecutively they are already
    /// distinct for valid graphs).
    #[must_use]
    pub fn walk_vertices(&self) -> Vec<VertexId> {
        self.corners.iter().map(|c| c.vertex).collect()
    }
}

/// One bounded face, walked clockwise.
#[derive(Debug, Clone)]
pub struct BoundedFace {
    pub corners: Vec<Corner>,
    pub traversed: Vec<Dart>,
}

/// Faces of a graph together with the sector assignment of the unbounded
/// ones.
#[derive(Debug, Clone)]
pub struct FaceData {
    /// Unbounded faces in counterclockwise sector order starting from the
    /// anchor's sector.
    pub unbounded: Vec<UnboundedFace>,
    pub bounded: Vec<BoundedFace>,
}

/// Problems that make the face/sector structure unusable. These are
/// reported by validation rather than panicking because parsed input can be
/// arbitrary.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FaceError {
    #[error(
        "unbounded faces do not close into a single cycle of {expected} sectors (got {found})"
    )]
    BrokenSectorCycle { expected: usize, found: usize },
}

impl FaceData {
    /// Walks every face and assigns sectors by chaining counterclockwise
    /// from the anchor ray.
    pub fn compute(g: &CellGraph) -> Result<FaceData, FaceError> {
        let n = g.frame().n();
        // Walk the unbounded face starting at each ray.
        let mut by_start: BTreeMap<RayId, UnboundedFace> = BTreeMap::new();
        let mut consumed: Vec<Dart> = Vec::new();
        for r in g.ray_ids() {
            let mut corners = Vec::new();
            let mut traversed = Vec::new();
            let mut a = Dart::Ray(r);
            let end_ray = loop {
                let v = g.owner(a);
                let b = g.rot_next(a);
                corners.push(Corner { vertex: v, a, b });
                traversed.push(b);
                consumed.push(b);
                match b {
                    Dart::Ray(r_end) => break r_end,
                    _ => a = b.twin().expect("edge dart has twin"),
                }
            };
            by_start.insert(
                r,
                UnboundedFace {
                    start_ray: r,
                    end_ray,
                    sector: 0,
                    corners,
                    traversed,
                },
            );
        }

        // Chain the unbounded faces: after the face ending at ray r comes,
        // counterclockwise, the face starting at r.
        let (anchor_ray, anchor_sector) = g.anchor();
        let mut ordered = Vec::with_capacity(n);
        let mut cur = anchor_ray;
        for i in 0..n {
            let Some(mut face) = by_start.remove(&cur) else {
                return Err(FaceError::BrokenSectorCycle {
                    expected: n,
                    found: i,
                });
            };
            face.sector = (anchor_sector + i) % n;
            cur = face.end_ray;
            ordered.push(face);
        }
        if cur != anchor_ray || !by_start.is_empty() {
            return Err(FaceError::BrokenSectorCycle {
                expected: n,
                found: ordered.len(),
            });
        }

        // Remaining corners belong to bounded faces.
        let mut remaining: BTreeMap<(u8, u32, u8), Dart> = g
            .vertex_ids()
            .flat_map(|v| g.rotation(v).iter().copied())
            .map(|d| (d.canonical_key(), d))
            .collect();
        for d in consumed {
            remaining.remove(&d.canonical_key());
        }
        let mut bounded = Vec::new();
        while let Some((_, &start)) = remaining.iter().next().map(|(k, d)| (*k, d)) {
            // `start` is a dart not yet traversed; walk the bounded face
            // that traverses it.
            let mut corners = Vec::new();
            let mut traversed = Vec::new();
            let mut b = start;
            loop {
                let a = g.rot_prev(b);
                corners.push(Corner {
                    vertex: g.owner(b),
                    a,
                    b,
                });
                traversed.push(b);
                remaining.remove(&b.canonical_key());
                let next_b = g.rot_next(b.twin().expect("bounded walks traverse edges"));
                if next_b == start {
                    break;
                }
                b = next_b;
            }
            bounded.push(BoundedFace { corners, traversed });
        }

        Ok(FaceData {
            unbounded: ordered,
            bounded,
        })
    }

    /// The unbounded face with the given sector.
    #[must_use]
    pub fn face_of_sector(&self, sector: usize) -> &UnboundedFace {
        self.unbounded
            .iter()
            .find(|f| f.sector == sector)
            .expect("sectors cover 0..n")
    }

    /// `(clockwise flank, counterclockwise flank)` sectors of a ray.
    ///
    /// The counterclockwise flank is the sector of the face starting at the
    /// ray; the clockwise flank is one less.
    #[must_use]
    pub fn ray_flanks(&self, r: RayId) -> (usize, usize) {
        let ccw = self
            .unbounded
            .iter()
            .find(|f| f.start_ray == r)
            .expect("every ray starts a face")
            .sector;
        let n = self.unbounded.len();
        ((ccw + n - 1) % n, ccw)
    }

    /// Number of dominant flanks of a ray: the weight its virtual edges
    /// contribute to the owner's degree.
    #[must_use]
    pub fn ray_weight(&self, g: &CellGraph, r: RayId) -> usize {
        let (cw, ccw) = self.ray_flanks(r);
        let f = g.frame();
        usize::from(f.is_dominant(cw)) + usize::from(f.is_dominant(ccw))
    }

    /// The face that traverses the given dart, if it is an unbounded one.
    #[must_use]
    pub fn unbounded_face_traversing(&self, d: Dart) -> Option<&UnboundedFace> {
        self.unbounded.iter().find(|f| f.traversed.contains(&d))
    }

    /// Flank sectors of an edge: the sectors of the unbounded faces
    /// traversing its head dart (left side) and tail dart (right side);
    /// `None` for a side bounded by a bounded face.
    #[must_use]
    pub fn edge_flanks(&self, e: EdgeId) -> (Option<usize>, Option<usize>) {
        let left = self
            .unbounded_face_traversing(Dart::EdgeHead(e))
            .map(|f| f.sector);
        let right = self
            .unbounded_face_traversing(Dart::EdgeTail(e))
            .map(|f| f.sector);
        (left, right)
    }
}
