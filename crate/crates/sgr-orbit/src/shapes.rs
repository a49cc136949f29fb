//! Half-turn symmetric embedded trees and their contour walks. A shape is
//! the skeleton of a graph before rays are placed and before its edges are
//! directed, labeled, or doubled: vertices, tree edges, and a rotation at
//! each vertex.
//!
//! A half turn of the plane fixes either one vertex or one edge of a tree
//! it preserves, so every shape is built from an ordered forest planted
//! either twice around a center vertex or once at each end of a central
//! edge.

/// A rooted plane tree: an ordered list of child subtrees.
#[derive(Debug, Clone)]
pub(crate) struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

/// All rooted plane trees with exactly `nodes` vertices.
fn plane_trees(nodes: usize) -> Vec<PlaneTree> {
    if nodes == 0 {
        return Vec::new();
    }
    forests(nodes - 1)
        .into_iter()
        .map(|children| PlaneTree { children })
        .collect()
}

/// All ordered sequences of plane trees with `total` vertices altogether.
fn forests(total: usize) -> Vec<Vec<PlaneTree>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for head in plane_trees(first) {
            for tail in forests(total - first) {
                let mut seq = Vec::with_capacity(1 + tail.len());
                seq.push(head.clone());
                seq.extend(tail);
                out.push(seq);
            }
        }
    }
    out
}

/// One step of the contour walk: the traversal of `edge` from `from` to
/// `to`. The corner with the same index sits at `to`, immediately after
/// the arrival in counterclockwise order.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ContourStep {
    pub from: usize,
    pub to: usize,
    pub edge: usize,
}

/// An embedded tree with a half-turn symmetry. `rot[v]` lists the incident
/// tree edges counterclockwise; `contour` walks the unique face of the
/// embedding, traversing every edge once in each direction. The half turn
/// shifts the contour by exactly half its length, so a ray distribution
/// repeating with that period is symmetric.
#[derive(Debug)]
pub(crate) struct Shape {
    pub ends: Vec<(usize, usize)>,
    pub rot: Vec<Vec<usize>>,
    pub contour: Vec<ContourStep>,
}

impl Shape {
    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }
}

#[derive(Default)]
struct Builder {
    ends: Vec<(usize, usize)>,
    rot: Vec<Vec<usize>>,
}

impl Builder {
    fn new_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// Hangs `tree` from `parent` and returns the connecting edge. The new
    /// vertex's rotation starts with the parent edge, then its children in
    /// order, so every plane embedding of the subtree arises.
    fn attach(&mut self, parent: usize, tree: &PlaneTree) -> usize {
        let v = self.new_vertex();
        self.ends.push((parent, v));
        let e = self.ends.len() - 1;
        self.rot[v].push(e);
        for child in &tree.children {
            let ce = self.attach(v, child);
            self.rot[v].push(ce);
        }
        e
    }

    fn finish(self) -> Shape {
        let contour = contour(&self.ends, &self.rot);
        Shape {
            ends: self.ends,
            rot: self.rot,
            contour,
        }
    }
}

/// The face walk of the embedded tree: traverse an edge, then leave the
/// arrival vertex through the next incident edge counterclockwise.
fn contour(ends: &[(usize, usize)], rot: &[Vec<usize>]) -> Vec<ContourStep> {
    if ends.is_empty() {
        return Vec::new();
    }
    let other = |edge: usize, v: usize| {
        let (a, b) = ends[edge];
        if a == v {
            b
        } else {
            a
        }
    };
    let mut steps = Vec::with_capacity(2 * ends.len());
    let (mut from, mut edge) = (0usize, rot[0][0]);
    loop {
        let to = other(edge, from);
        steps.push(ContourStep { from, to, edge });
        let pos = rot[to]
            .iter()
            .position(|&e| e == edge)
            .expect("arrival edge is incident");
        edge = rot[to][(pos + 1) % rot[to].len()];
        from = to;
        if from == 0 && edge == rot[0][0] {
            break;
        }
    }
    assert_eq!(steps.len(), 2 * ends.len(), "a tree has one face");
    steps
}

/// Every half-turn symmetric shape with at most `max_vertices` vertices.
pub(crate) fn symmetric_shapes(max_vertices: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut m = 0;
    while 1 + 2 * m <= max_vertices {
        for half in forests(m) {
            let mut b = Builder::default();
            let root = b.new_vertex();
            let mut slots = Vec::new();
            for tree in &half {
                slots.push(b.attach(root, tree));
            }
            for tree in &half {
                slots.push(b.attach(root, tree));
            }
            b.rot[root] = slots;
            out.push(b.finish());
        }
        m += 1;
    }
    let mut m = 0;
    while 2 * (1 + m) <= max_vertices {
        for half in forests(m) {
            let mut b = Builder::default();
            let u = b.new_vertex();
            let v = b.new_vertex();
            b.ends.push((u, v));
            b.rot[u].push(0);
            b.rot[v].push(0);
            for tree in &half {
                let e = b.attach(u, tree);
                b.rot[u].push(e);
            }
            for tree in &half {
                let e = b.attach(v, tree);
                b.rot[v].push(e);
            }
            out.push(b.finish());
        }
        m += 1;
    }
    out
}
