//! Junction structure along dominant faces.
//!
//! For a dominant sector `j`, the `j`-path lists the vertices of the
//! unbounded face of sector `j` against the walk direction, so that the
//! `j`-labeled edges flow from the first vertex toward the last and each
//! vertex is entered either by the ray flanked clockwise by `j` (the first
//! vertex) or by the head dart of a `j`-edge from its predecessor.
//!
//! The vertices of the path that carry material of the next dominant label
//! `j₊` (a real `j₊`-edge dart or a ray flanked by `j₊`) must form one
//! contiguous run; the junction is the last vertex of that run. The darts
//! between its entry dart and its outgoing `j₊` dart (counterclockwise,
//! inclusive) form the junction arc, the material an even action transfers.

use thiserror::Error;

use crate::faces::FaceData;
use crate::graph::{CellGraph, Dart, VertexId};

/// The vertices of a dominant unbounded face, ordered against the clockwise
/// walk, with the dart by which each vertex is entered.
#[derive(Debug, Clone)]
pub struct JPath {
    pub j: usize,
    pub vertices: Vec<VertexId>,
    /// `arrivals[i]` is the dart at `vertices[i]` the path enters through:
    /// a ray for `i = 0`, the head of a `j`-edge from `vertices[i - 1]`
    /// afterwards.
    pub arrivals: Vec<Dart>,
}

/// Shape of a junction: whether the next label is adjacent, and if not,
/// whether the transferred material hangs off a doubled stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureKind {
    I,
    V,
    Y,
}

/// The junction of a dominant sector: the unique vertex where an even
/// action at that sector performs surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Junction {
    pub j: usize,
    pub vertex: VertexId,
    pub kind: StructureKind,
    /// Dart by which the `j`-path enters the junction vertex.
    pub d_in: Dart,
    /// Outgoing dart of the next dominant label at the junction: a real
    /// tail dart when present, otherwise the ray flanked counterclockwise
    /// by that label.
    pub d_out: Dart,
    /// Counterclockwise interval `[d_in ..= d_out]` of the junction
    /// vertex's rotation.
    pub arc: Vec<Dart>,
    /// For a `Y` junction, the top of the doubled stem.
    pub y_top: Option<VertexId>,
    /// Position of the junction vertex in the `j`-path.
    pub path_index: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JunctionError {
    #[error("sector {j} is subdominant and has no junction structure")]
    SubdominantSector { j: usize },
    #[error("vertices touching the next label along path {j} are not contiguous (positions {positions:?})")]
    Scattered { j: usize, positions: Vec<usize> },
}

/// Builds the `j`-path from precomputed faces.
#[must_use]
pub fn j_path(g: &CellGraph, faces: &FaceData, j: usize) -> JPath {
    debug_assert!(g.frame().is_dominant(j));
    let face = faces.face_of_sector(j);
    let vertices: Vec<VertexId> = face.corners.iter().rev().map(|c| c.vertex).collect();
    let arrivals: Vec<Dart> = face.traversed.iter().rev().copied().collect();
    JPath {
        j,
        vertices,
        arrivals,
    }
}

/// True when the vertex carries material of label `jp`: a dart of a real
/// `jp`-edge or a ray with `jp` among its flanks.
fn touches_label(g: &CellGraph, faces: &FaceData, v: VertexId, jp: usize) -> bool {
    g.rotation(v).iter().any(|d| match d {
        Dart::EdgeTail(e) | Dart::EdgeHead(e) => g.edge(*e).label == jp,
        Dart::Ray(r) => {
            let (cw, ccw) = faces.ray_flanks(*r);
            cw == jp || ccw == jp
        }
    })
}

/// Finds the junction of sector `j`, or `None` when the even action at `j`
/// is the identity because nothing along the path touches the next label.
pub fn j_junction(
    g: &CellGraph,
    faces: &FaceData,
    j: usize,
) -> Result<Option<Junction>, JunctionError> {
    let frame = g.frame();
    if !frame.is_dominant(j) {
        return Err(JunctionError::SubdominantSector { j });
    }
    let jp = frame.next_dominant(j);
    let path = j_path(g, faces, j);

    let positions: Vec<usize> = (0..path.vertices.len())
        .filter(|&i| touches_label(g, faces, path.vertices[i], jp))
        .collect();
    let Some(&last) = positions.last() else {
        return Ok(None);
    };
    let contiguous = positions.windows(2).all(|w| w[1] == w[0] + 1);
    if !contiguous {
        return Err(JunctionError::Scattered { j, positions });
    }

    let vertex = path.vertices[last];
    let d_in = path.arrivals[last];
    let d_out = outgoing_dart(g, faces, vertex, jp);
    let arc = ccw_interval(g, vertex, d_in, d_out);

    let kind = if frame.is_dominant(frame.add(j, 1)) {
        StructureKind::I
    } else if is_parallel_pair(g, d_in, d_out) {
        StructureKind::Y
    } else {
        StructureKind::V
    };

    let y_top = (kind == StructureKind::Y).then(|| {
        let mut i = last;
        while i >= 1 && doubled_step(g, path.vertices[i - 1], path.vertices[i], j, jp) {
            i -= 1;
        }
        path.vertices[i]
    });

    Ok(Some(Junction {
        j,
        vertex,
        kind,
        d_in,
        d_out,
        arc,
        y_top,
        path_index: last,
    }))
}

/// The outgoing `jp` dart at a vertex: the tail of a real `jp`-edge when
/// one exists, otherwise the ray flanked counterclockwise by `jp`.
fn outgoing_dart(g: &CellGraph, faces: &FaceData, v: VertexId, jp: usize) -> Dart {
    let real = g
        .rotation(v)
        .iter()
        .copied()
        .find(|d| matches!(d, Dart::EdgeTail(e) if g.edge(*e).label == jp));
    real.unwrap_or_else(|| {
        g.rotation(v)
            .iter()
            .copied()
            .find(|d| matches!(d, Dart::Ray(r) if faces.ray_flanks(*r).1 == jp))
            .expect("a touching junction vertex carries an outgoing dart")
    })
}

/// Counterclockwise interval `[from ..= to]` of a vertex rotation. `from`
/// and `to` may coincide, giving a single dart.
fn ccw_interval(g: &CellGraph, v: VertexId, from: Dart, to: Dart) -> Vec<Dart> {
    let rot = g.rotation(v);
    let mut arc = vec![from];
    let mut cur = from;
    while cur != to {
        cur = g.rot_next(cur);
        arc.push(cur);
        assert!(arc.len() <= rot.len(), "interval endpoints share a vertex");
    }
    arc
}

/// True when the two darts are the head and tail of a doubled pair of real
/// edges to one shared neighbor.
fn is_parallel_pair(g: &CellGraph, d_in: Dart, d_out: Dart) -> bool {
    match (d_in, d_out) {
        (Dart::EdgeHead(a), Dart::EdgeTail(b)) => g.edge(a).tail == g.edge(b).head,
        _ => false,
    }
}

/// True when `prev` and `cur` are joined by the doubled pair `j: prev→cur`,
/// `jp: cur→prev`.
fn doubled_step(g: &CellGraph, prev: VertexId, cur: VertexId, j: usize, jp: usize) -> bool {
    let has_j = g
        .edge_ids()
        .any(|e| g.edge(e).label == j && g.edge(e).tail == prev && g.edge(e).head == cur);
    let has_jp = g
        .edge_ids()
        .any(|e| g.edge(e).label == jp && g.edge(e).tail == cur && g.edge(e).head == prev);
    has_j && has_jp
}
