//! Even squared rewrites acting on standard graphs.
//!
//! `even_action_sq` applies the generator at a dominant label `j` (or its
//! inverse). The move locates the junction of sector `j` and the junction of
//! the opposite sector `j + nu`, performs the same local surgery at both, and
//! returns the trimmed canonical result. Acting at `j + nu` therefore gives
//! the same map as acting at `j`.

use sgr_core::canonical::{canonicalize, trim, Canonical, CanonicalError};
use sgr_core::faces::FaceData;
use sgr_core::graph::{CellGraph, Dart, EdgeId, RayId, VertexId};
use sgr_core::structures::{j_junction, Junction, JunctionError};
use sgr_core::symmetry::is_centrally_symmetric;
use thiserror::Error;

/// Failure modes of an even squared rewrite.
#[derive(Debug, Error)]
pub enum ActionError {
    /// The input graph breaks a labeling law or is not centrally symmetric.
    #[error("action requires a valid centrally symmetric graph")]
    BadInput,
    /// Rewrites are defined for at least six sectors; with four the two
    /// opposite surgeries can touch the same darts.
    #[error("action not supported for {n} sectors")]
    NarrowFrame { n: usize },
    /// The label is not dominant in this frame.
    #[error("label {j} is subdominant, no junction exists")]
    Subdominant { j: usize },
    /// Junction search failed structurally.
    #[error(transparent)]
    Junction(#[from] JunctionError),
    /// Face walks or canonical form failed on the rewritten graph.
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    /// The rewritten graph violates a labeling law. This indicates a bug in
    /// the rewrite rules, never a property of the input.
    #[error("rewrite produced an invalid graph: {detail}")]
    BrokenResult { detail: String },
}

/// One half of the move: the surgery performed at a single junction.
///
/// Every field is computed from the unmodified input graph. The two halves
/// of a move touch disjoint darts for n >= 6, so they can be applied one
/// after the other without recomputing faces.
#[derive(Debug, Clone)]
struct HalfPlan {
    j: usize,
    vertex: VertexId,
    arc: Vec<Dart>,
    case: SurgeryCase,
}

#[derive(Debug, Clone)]
enum SurgeryCase {
    /// Forward, the dart before the arc is the tail of a real `j`-edge:
    /// relabel it to `j+` and push the arc along it.
    ForwardRelabel { edge: EdgeId },
    /// Forward, the dart before the arc is a ray whose other flank is
    /// subdominant: grow a new `j+`-edge and move ray plus arc to its head.
    ForwardGrow { ray: RayId },
    /// Forward, the dart before the arc is a ray whose other flank `x` is
    /// dominant: grow a doubled edge pair (`x` back-edge and `j+`-edge).
    ForwardGrowPair { ray: RayId, x_label: usize },
    /// Inverse, the dart after the arc is the head of a real `j+`-edge:
    /// relabel it to `j` and pull the arc back along it.
    InverseRelabel { edge: EdgeId },
    /// Inverse, the dart after the arc is a ray whose other flank is
    /// subdominant: grow a new `j`-edge and move ray plus arc to its tail.
    InverseGrow { ray: RayId },
    /// Inverse, the dart after the arc is a ray whose other flank `y` is
    /// dominant: grow a doubled edge pair (`j`-edge and `y` back-edge).
    InverseGrowPair { ray: RayId, y_label: usize },
}

/// Applies the squared generator at dominant label `j` (inverse if asked)
/// and returns the trimmed canonical image.
pub fn even_action_sq(
    graph: &CellGraph,
    j: usize,
    inverse: bool,
) -> Result<CellGraph, ActionError> {
    let frame = graph.frame().clone();
    if frame.n() < 6 {
        return Err(ActionError::NarrowFrame { n: frame.n() });
    }
    let j = j % frame.n();
    if frame.is_subdominant(j) {
        return Err(ActionError::Subdominant { j });
    }
    if graph.check_structure().is_err() || !is_centrally_symmetric(graph) {
        return Err(ActionError::BadInput);
    }
    let faces = FaceData::compute(graph).map_err(|_| ActionError::BadInput)?;

    let j_opp = frame.add(j, frame.nu());
    let jun_a = j_junction(graph, &faces, j)?;
    let jun_b = j_junction(graph, &faces, j_opp)?;
    let (jun_a, jun_b) = match (jun_a, jun_b) {
        (Some(a), Some(b)) => (a, b),
        // Without a junction the squared generator fixes the graph.
        (None, None) => return Ok(canonicalize(graph)?.graph),
        // Central symmetry maps one half's junction to the other's, so a
        // one-sided junction means the graph or the finder is broken.
        _ => {
            return Err(ActionError::BrokenResult {
                detail: format!("junction at {j} without its mirror at {j_opp}"),
            })
        }
    };

    let plan_a = make_plan(graph, &faces, &jun_a, inverse)?;
    let plan_b = make_plan(graph, &faces, &jun_b, inverse)?;

    let mut work = graph.clone();
    apply_plan(&mut work, &plan_a, &frame)?;
    apply_plan(&mut work, &plan_b, &frame)?;

    finish(work)
}

/// Trims, canonicalizes and revalidates a rewritten graph.
fn finish(work: CellGraph) -> Result<CellGraph, ActionError> {
    let work = trim(&work)?;
    let report = sgr_core::validate::validate(&work);
    if !report.ok() || report.symmetric != Some(true) {
        return Err(ActionError::BrokenResult {
            detail: format!("{:?}", report.violations),
        });
    }
    let Canonical { graph, .. } = canonicalize(&work)?;
    Ok(graph)
}

/// Chooses the surgery case from the dart neighboring the arc.
fn make_plan(
    graph: &CellGraph,
    faces: &FaceData,
    junction: &Junction,
    inverse: bool,
) -> Result<HalfPlan, ActionError> {
    let frame = graph.frame();
    let j = junction.j;
    let u = junction.vertex;
    let arc = junction.arc.clone();
    let case = if !inverse {
        // The dart immediately before the arc always leaves along sector j:
        // either the tail of a j-edge or a ray whose ccw flank is j.
        let before = graph.rot_prev(arc[0]);
        match before {
            Dart::EdgeTail(e) => {
                debug_assert_eq!(graph.edge(e).label, j);
                debug_assert_eq!(graph.edge(e).tail, u);
                SurgeryCase::ForwardRelabel { edge: e }
            }
            Dart::Ray(r) => {
                let (cw, ccw) = faces.ray_flanks(r);
                debug_assert_eq!(ccw, j);
                if frame.is_dominant(cw) {
                    SurgeryCase::ForwardGrowPair {
                        ray: r,
                        x_label: cw,
                    }
                } else {
                    SurgeryCase::ForwardGrow { ray: r }
                }
            }
            Dart::EdgeHead(_) => {
                return Err(ActionError::BrokenResult {
                    detail: format!("no outgoing sector-{j} dart before the junction arc"),
                })
            }
        }
    } else {
        // The dart immediately after the arc always arrives along sector j+:
        // either the head of a j+-edge or a ray whose cw flank is j+.
        let after = graph.rot_next(*arc.last().expect("junction arc is nonempty"));
        let j_up = frame.next_dominant(j);
        match after {
            Dart::EdgeHead(e) => {
                debug_assert_eq!(graph.edge(e).label, j_up);
                debug_assert_eq!(graph.edge(e).head, u);
                SurgeryCase::InverseRelabel { edge: e }
            }
            Dart::Ray(r) => {
                let (cw, ccw) = faces.ray_flanks(r);
                debug_assert_eq!(cw, j_up);
                if frame.is_dominant(ccw) {
                    SurgeryCase::InverseGrowPair {
                        ray: r,
                        y_label: ccw,
                    }
                } else {
                    SurgeryCase::InverseGrow { ray: r }
                }
            }
            Dart::EdgeTail(_) => {
                return Err(ActionError::BrokenResult {
                    detail: format!("no incoming dart after the junction arc for sector {j}"),
                })
            }
        }
    };
    Ok(HalfPlan {
        j,
        vertex: u,
        arc,
        case,
    })
}

/// Removes `remove` from `rot`, keeping order.
fn without(rot: &[Dart], remove: &[Dart]) -> Vec<Dart> {
    rot.iter()
        .copied()
        .filter(|d| !remove.contains(d))
        .collect()
}

/// Replaces the single occurrence of `slot` in `rot` by `replacement`.
fn replace_slot(rot: &[Dart], slot: Dart, replacement: &[Dart]) -> Vec<Dart> {
    let mut out = Vec::with_capacity(rot.len() + replacement.len());
    for &d in rot {
        if d == slot {
            out.extend_from_slice(replacement);
        } else {
            out.push(d);
        }
    }
    debug_assert_ne!(
        out.len(),
        rot.len() + replacement.len(),
        "slot dart missing"
    );
    out
}

/// Inserts `insert` immediately before (or after) `anchor` in `rot`.
fn splice_at(rot: &[Dart], anchor: Dart, insert: &[Dart], after: bool) -> Vec<Dart> {
    let mut out = Vec::with_capacity(rot.len() + insert.len());
    for &d in rot {
        if d == anchor && !after {
            out.extend_from_slice(insert);
        }
        out.push(d);
        if d == anchor && after {
            out.extend_from_slice(insert);
        }
    }
    debug_assert_eq!(out.len(), rot.len() + insert.len(), "anchor dart missing");
    out
}

/// Performs one half of the move on the working graph.
fn apply_plan(
    work: &mut CellGraph,
    plan: &HalfPlan,
    frame: &sgr_core::frame::SectorFrame,
) -> Result<(), ActionError> {
    let u = plan.vertex;
    let j = plan.j;
    let j_up = frame.next_dominant(j);
    let arc = &plan.arc;
    match plan.case {
        SurgeryCase::ForwardRelabel { edge } => {
            let t = work.edge(edge).head;
            work.set_label(edge, j_up);
            let u_rot = without(work.rotation(u), arc);
            work.set_rotation(u, u_rot);
            let t_rot = splice_at(work.rotation(t), Dart::EdgeHead(edge), arc, false);
            work.set_rotation(t, t_rot);
        }
        SurgeryCase::ForwardGrow { ray } => {
            let t = work.new_vertex();
            let e = work.new_edge(j_up, u, t);
            let mut u_rot = replace_slot(work.rotation(u), Dart::Ray(ray), &[Dart::EdgeTail(e)]);
            u_rot = without(&u_rot, arc);
            work.set_rotation(u, u_rot);
            let mut t_rot = vec![Dart::EdgeHead(e), Dart::Ray(ray)];
            t_rot.extend_from_slice(arc);
            work.set_rotation(t, t_rot);
        }
        SurgeryCase::ForwardGrowPair { ray, x_label } => {
            let t = work.new_vertex();
            let e_x = work.new_edge(x_label, t, u);
            let e = work.new_edge(j_up, u, t);
            let mut u_rot = replace_slot(
                work.rotation(u),
                Dart::Ray(ray),
                &[Dart::EdgeHead(e_x), Dart::EdgeTail(e)],
            );
            u_rot = without(&u_rot, arc);
            work.set_rotation(u, u_rot);
            let mut t_rot = vec![Dart::EdgeTail(e_x), Dart::Ray(ray)];
            t_rot.extend_from_slice(arc);
            t_rot.push(Dart::EdgeHead(e));
            work.set_rotation(t, t_rot);
        }
        SurgeryCase::InverseRelabel { edge } => {
            let s = work.edge(edge).tail;
            work.set_label(edge, j);
            let u_rot = without(work.rotation(u), arc);
            work.set_rotation(u, u_rot);
            let s_rot = splice_at(work.rotation(s), Dart::EdgeTail(edge), arc, true);
            work.set_rotation(s, s_rot);
        }
        SurgeryCase::InverseGrow { ray } => {
            let s = work.new_vertex();
            let e = work.new_edge(j, s, u);
            let mut u_rot = replace_slot(work.rotation(u), Dart::Ray(ray), &[Dart::EdgeHead(e)]);
            u_rot = without(&u_rot, arc);
            work.set_rotation(u, u_rot);
            let mut s_rot = vec![Dart::EdgeTail(e)];
            s_rot.extend_from_slice(arc);
            s_rot.push(Dart::Ray(ray));
            work.set_rotation(s, s_rot);
        }
        SurgeryCase::InverseGrowPair { ray, y_label } => {
            let s = work.new_vertex();
            let e = work.new_edge(j, s, u);
            let e_y = work.new_edge(y_label, u, s);
            let mut u_rot = replace_slot(
                work.rotation(u),
                Dart::Ray(ray),
                &[Dart::EdgeHead(e), Dart::EdgeTail(e_y)],
            );
            u_rot = without(&u_rot, arc);
            work.set_rotation(u, u_rot);
            let mut s_rot = vec![Dart::EdgeTail(e)];
            s_rot.extend_from_slice(arc);
            s_rot.push(Dart::Ray(ray));
            s_rot.push(Dart::EdgeHead(e_y));
            work.set_rotation(s, s_rot);
        }
    }
    Ok(())
}
