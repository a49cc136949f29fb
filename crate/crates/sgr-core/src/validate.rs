//! The labeling laws and the structural conditions a standard graph must
//! satisfy. Violations are collected into a report instead of failing fast,
//! so a caller can show everything that is wrong with an input at once.

use std::fmt;

use crate::faces::FaceData;
use crate::graph::{CellGraph, Dart};
use crate::symmetry;
use crate::tree::TreeView;

/// One violated condition, with enough context to locate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// (I) Two bounded faces share an edge.
    BoundedFacesShareEdge { edge: u32 },
    /// (II) A bounded face is not directed clockwise with cyclically
    /// increasing labels.
    BoundedFaceOrder { detail: String },
    /// (III) A label repeats on a bounded face.
    BoundedFaceRepeatedLabel { label: usize },
    /// (IV) Labels do not cyclically increase counterclockwise around a
    /// vertex.
    VertexLabelOrder { vertex: u32, labels: Vec<usize> },
    /// (V) A dominant unbounded face bounds an edge of the wrong label or
    /// direction.
    DominantFaceBoundary { sector: usize, detail: String },
    /// (VI) An edge carries a subdominant label.
    SubdominantLabel { edge: u32, label: usize },
    /// (VII) A vertex has odd degree once ray weights are counted.
    OddDegree { vertex: u32, degree: usize },
    /// The unbounded faces do not form the expected sector cycle, or a
    /// subdominant face has an edge directed counterclockwise along it.
    NotStandardOrder { detail: String },
    /// The collapsed graph is not a single tree.
    NotTree { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BoundedFacesShareEdge { edge } => {
                write!(f, "law I: bounded faces share edge {edge}")
            }
            Violation::BoundedFaceOrder { detail } => {
                write!(f, "law II: bounded face not clockwise-increasing: {detail}")
            }
            Violation::BoundedFaceRepeatedLabel { label } => {
                write!(f, "law III: label {label} repeats on a bounded face")
            }
            Violation::VertexLabelOrder { vertex, labels } => {
                write!(
                    f,
                    "law IV: labels {labels:?} around vertex {vertex} not cyclically increasing"
                )
            }
            Violation::DominantFaceBoundary { sector, detail } => {
                write!(f, "law V: dominant face {sector}: {detail}")
            }
            Violation::SubdominantLabel { edge, label } => {
                write!(f, "law VI: edge {edge} carries subdominant label {label}")
            }
            Violation::OddDegree { vertex, degree } => {
                write!(f, "law VII: vertex {vertex} has odd degree {degree}")
            }
            Violation::NotStandardOrder { detail } => {
                write!(f, "standard order: {detail}")
            }
            Violation::NotTree { detail } => write!(f, "tree shape: {detail}"),
        }
    }
}

/// Result of validating one graph.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Whether the graph equals itself with all labels shifted by half a
    /// turn. Only computed when the laws hold; central symmetry is reported
    /// separately because asymmetric graphs are still well formed.
    pub symmetric: Option<bool>,
}

impl ValidationReport {
    #[must_use]
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// True when a cyclic integer sequence can be rotated into weakly
/// increasing order: it has at most one descent.
fn cyclically_increasing(labels: &[usize]) -> bool {
    if labels.len() < 2 {
        return true;
    }
    let mut descents = 0;
    for i in 0..labels.len() {
        if labels[i] > labels[(i + 1) % labels.len()] {
            descents += 1;
        }
    }
    descents <= 1
}

/// Checks the seven labeling laws, the standard order of the unbounded
/// faces, and that the collapsed graph is one tree.
#[must_use]
pub fn validate(g: &CellGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let frame = g.frame();

    // (VI) comes first: label range and dominance are prerequisites for
    // meaningful face reasoning, but all checks run regardless.
    for e in g.edge_ids() {
        let label = g.edge(e).label;
        if frame.is_subdominant(label) {
            violations.push(Violation::SubdominantLabel { edge: e.0, label });
        }
    }

    // (IV) labels around each vertex.
    for v in g.vertex_ids() {
        let labels: Vec<usize> = g
            .rotation(v)
            .iter()
            .filter_map(|&d| g.dart_label(d))
            .collect();
        if !cyclically_increasing(&labels) {
            violations.push(Violation::VertexLabelOrder {
                vertex: v.0,
                labels,
            });
        }
    }

    let faces = match FaceData::compute(g) {
        Ok(f) => f,
        Err(e) => {
            violations.push(Violation::NotStandardOrder {
                detail: e.to_string(),
            });
            return ValidationReport {
                violations,
                symmetric: None,
            };
        }
    };

    // (V) dominant faces: all traversed edge darts are head darts (the walk
    // runs against the edge, so the boundary is directed counterclockwise)
    // carrying the face's own label. A subdominant face may bound edges, but
    // only from the right: every edge has the face of its own label on the
    // left, so a head dart on a subdominant face would force a subdominant
    // label.
    for face in &faces.unbounded {
        let k = face.sector;
        if frame.is_dominant(k) {
            for &d in &face.traversed {
                match d {
                    Dart::Ray(_) => {}
                    Dart::EdgeHead(e) => {
                        let label = g.edge(e).label;
                        if label != k {
                            violations.push(Violation::DominantFaceBoundary {
                                sector: k,
                                detail: format!("edge {e} labeled {label}"),
                            });
                        }
                    }
                    Dart::EdgeTail(e) => {
                        violations.push(Violation::DominantFaceBoundary {
                            sector: k,
                            detail: format!("edge {e} directed clockwise along the face"),
                        });
                    }
                }
            }
        } else {
            for &d in &face.traversed {
                if let Dart::EdgeHead(e) = d {
                    violations.push(Violation::NotStandardOrder {
                        detail: format!(
                            "subdominant face {k} has edge {e} directed counterclockwise along it"
                        ),
                    });
                }
            }
        }
    }

    // (I, II, III) bounded faces.
    for face in &faces.bounded {
        let mut labels = Vec::new();
        let mut all_forward = true;
        for &d in &face.traversed {
            match d {
                Dart::EdgeTail(e) => labels.push(g.edge(e).label),
                Dart::EdgeHead(e) => {
                    all_forward = false;
                    labels.push(g.edge(e).label);
                }
                Dart::Ray(_) => unreachable!("bounded faces traverse no rays"),
            }
        }
        if !all_forward || !cyclically_increasing(&labels) {
            violations.push(Violation::BoundedFaceOrder {
                detail: format!("labels {labels:?}, clockwise = {all_forward}"),
            });
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                violations.push(Violation::BoundedFaceRepeatedLabel { label: w[0] });
            }
        }
    }
    for e in g.edge_ids() {
        let (left, right) = faces.edge_flanks(e);
        if left.is_none() && right.is_none() {
            violations.push(Violation::BoundedFacesShareEdge { edge: e.0 });
        }
    }

    // (VII) even degree, counting one per dominant flank of each ray.
    for v in g.vertex_ids() {
        let mut degree = 0;
        for &d in g.rotation(v) {
            match d {
                Dart::Ray(r) => degree += faces.ray_weight(g, r),
                _ => degree += 1,
            }
        }
        if degree % 2 != 0 {
            violations.push(Violation::OddDegree {
                vertex: v.0,
                degree,
            });
        }
    }

    // Tree shape and connectivity.
    let tree = TreeView::build(g);
    if !tree.is_tree() {
        let detail = if tree.link_count() + 1 != tree.vertex_count() {
            format!(
                "{} vertices but {} collapsed links",
                tree.vertex_count(),
                tree.link_count()
            )
        } else {
            "not connected".to_string()
        };
        violations.push(Violation::NotTree { detail });
    }
    for v in g.vertex_ids() {
        for link in tree.links(v) {
            if link.edges.len() > 2 && v < link.other {
                violations.push(Violation::NotTree {
                    detail: format!(
                        "{} parallel edges between {v} and {}",
                        link.edges.len(),
                        link.other
                    ),
                });
            }
        }
    }

    let symmetric = if violations.is_empty() {
        Some(symmetry::is_centrally_symmetric(g))
    } else {
        None
    };
    ValidationReport {
        violations,
        symmetric,
    }
}
