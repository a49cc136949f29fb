//! Reduction to canonical class representatives: one-vertex graphs are
//! fixed points, the worked chain collapses to the one-vertex graph, stems
//! dissolve against straight arms or merge on alternating frames, the
//! central doubled edge settles on the lowest label, and the result is a
//! fixed point named by the class invariant.

use std::collections::BTreeMap;

use sgr_braid::{even_action_sq, MacroKind, Step};
use sgr_core::equals;
use sgr_core::format::from_text;
use sgr_core::frame::SectorFrame;
use sgr_core::graph::CellGraph;
use sgr_core::ivy::{build_ivy, ivy_descriptor, Arm, IvyCenter, IvyDescriptor};
use sgr_core::metrics::bounded_face_count;
use sgr_core::structures::StructureKind;
use sgr_core::symmetry::CenterTag;
use sgr_normalize::{component_invariant, reduce, ComponentInvariant};

/// Center vertex, stems of length two at labels 3 and 7, over (8, {0, 4}).
const STAGE_STEMS: &str = "
sgr 1
n 8
subdominant 0 4
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
edge 1 2 1 label 3
edge 2 3 2 label 3
edge 3 1 2 label 5
edge 4 2 3 label 5
edge 5 4 1 label 7
edge 6 5 4 label 7
edge 7 1 4 label 1
edge 8 4 5 label 1
ray 1 1
ray 2 1
ray 3 3
ray 4 3
ray 5 1
ray 6 1
ray 7 5
ray 8 5
rot 1 r1 r2 e1.h e3.t r5 r6 e5.h e7.t
rot 2 e1.t e2.h e4.t e3.h
rot 3 e2.t r3 r4 e4.h
rot 4 e5.t e6.h e8.t e7.h
rot 5 e6.t r7 r8 e8.h
anchor 1 sector 2
";

/// One squared move later.
const STAGE_TWO_A: &str = "
sgr 1
n 8
subdominant 0 4
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
edge 1 2 1 label 3
edge 2 3 2 label 3
edge 3 1 2 label 6
edge 4 2 3 label 5
edge 5 4 1 label 7
edge 6 5 4 label 7
edge 7 1 4 label 2
edge 8 4 5 label 1
ray 1 4
ray 2 1
ray 3 3
ray 4 3
ray 5 2
ray 6 1
ray 7 5
ray 8 5
rot 1 r2 e1.h e3.t r6 e5.h e7.t
rot 2 e1.t e2.h e4.t r5 e3.h
rot 3 e2.t r3 r4 e4.h
rot 4 e5.t e6.h e8.t r1 e7.h
rot 5 e6.t r7 r8 e8.h
anchor 2 sector 3
";

/// Two moves in.
const STAGE_TWO_B: &str = "
sgr 1
n 8
subdominant 0 4
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
edge 1 2 1 label 3
edge 2 3 2 label 3
edge 3 1 2 label 6
edge 4 2 3 label 6
edge 5 4 1 label 7
edge 6 5 4 label 7
edge 7 1 4 label 2
edge 8 4 5 label 2
ray 1 5
ray 2 1
ray 3 3
ray 4 3
ray 5 3
ray 6 1
ray 7 5
ray 8 5
rot 1 r2 e1.h e3.t r6 e5.h e7.t
rot 2 e1.t e2.h e4.t e3.h
rot 3 e2.t r3 r4 r5 e4.h
rot 4 e5.t e6.h e8.t e7.h
rot 5 e6.t r7 r8 r1 e8.h
anchor 2 sector 3
";

/// Three moves in.
const STAGE_THREE: &str = "
sgr 1
n 8
subdominant 0 4
vertex 1
vertex 2
vertex 3
edge 1 2 1 label 3
edge 3 1 2 label 6
edge 5 3 1 label 7
edge 7 1 3 label 2
ray 1 3
ray 2 1
ray 3 2
ray 4 2
ray 5 2
ray 6 1
ray 7 3
ray 8 3
rot 1 r2 e1.h e3.t r6 e5.h e7.t
rot 2 e1.t r3 r4 r5 e3.h
rot 3 e5.t r7 r8 r1 e7.h
anchor 2 sector 3
";

/// The one-vertex graph over (8, {0, 4}).
const STAGE_MIN: &str = "
sgr 1
n 8
subdominant 0 4
vertex 1
ray 1 1
ray 2 1
ray 3 1
ray 4 1
ray 5 1
ray 6 1
ray 7 1
ray 8 1
rot 1 r1 r2 r3 r4 r5 r6 r7 r8
anchor 1 sector 2
";

/// The one-vertex graph over the alternating frame (8, {0, 2, 4, 6}).
const ALT_MIN: &str = "
sgr 1
n 8
subdominant 0 2 4 6
vertex 1
ray 1 1
ray 2 1
ray 3 1
ray 4 1
ray 5 1
ray 6 1
ray 7 1
ray 8 1
rot 1 r1 r2 r3 r4 r5 r6 r7 r8
anchor 1 sector 2
";

fn parse(text: &str) -> CellGraph {
    from_text(text).expect("reference graph parses")
}

fn assert_same(a: &CellGraph, b: &CellGraph, what: &str) {
    assert!(equals(a, b).expect("canonical forms exist"), "{what}");
}

fn ivy(frame: &SectorFrame, center: IvyCenter, stems: &[(usize, usize)]) -> CellGraph {
    let nu = frame.nu();
    let mut arms: BTreeMap<usize, Arm> = BTreeMap::new();
    for j in frame.dominant_labels() {
        let arm = if frame.is_dominant(frame.add(j, 1)) {
            Arm::flat(StructureKind::I)
        } else {
            Arm::flat(StructureKind::V)
        };
        arms.insert(j, arm);
    }
    for &(j, len) in stems {
        arms.insert(j, Arm::stem(len));
        arms.insert(frame.add(j, nu), Arm::stem(len));
    }
    build_ivy(&IvyDescriptor {
        frame: frame.clone(),
        center,
        arms,
    })
    .expect("descriptor builds")
}

fn kinds(log: &sgr_braid::ActionLog) -> Vec<Step> {
    log.steps().iter().map(|ls| ls.step).collect()
}

#[test]
fn one_vertex_graphs_are_fixed_points() {
    for text in [STAGE_MIN, ALT_MIN] {
        let g = parse(text);
        let (out, log) = reduce(&g).expect("reduction succeeds");
        assert!(log.is_empty(), "a reduced graph takes no moves");
        assert_same(&out, &g, "reduction fixes the one-vertex graph");
    }
}

#[test]
fn the_worked_chain_reduces_to_the_one_vertex_graph() {
    let min = parse(STAGE_MIN);
    for text in [STAGE_STEMS, STAGE_TWO_A, STAGE_TWO_B, STAGE_THREE] {
        let g = parse(text);
        let (out, _) = reduce(&g).expect("reduction succeeds");
        assert_same(
            &out,
            &min,
            "the chain stage reduces to the one-vertex graph",
        );
        assert_eq!(
            component_invariant(&g),
            Some(ComponentInvariant::Center(CenterTag::Vertex))
        );
    }
}

#[test]
fn stems_dissolve_against_the_straight_arm() {
    // The two-stem stage dissolves in one composite move per stem pair.
    let (out, log) = reduce(&parse(STAGE_STEMS)).expect("reduction succeeds");
    assert_same(
        &out,
        &parse(STAGE_MIN),
        "stems dissolve to the one-vertex graph",
    );
    assert_eq!(
        kinds(&log),
        vec![Step::Macro {
            kind: MacroKind::DissolveStem,
            root: 0,
            slot: 3
        }]
    );

    // Same behavior over (6, {0, 3}).
    let frame = SectorFrame::new(6, &[0, 3]).unwrap();
    let g = ivy(&frame, IvyCenter::Vertex, &[(2, 1)]);
    let flat = ivy(&frame, IvyCenter::Vertex, &[]);
    let (out, log) = reduce(&g).expect("reduction succeeds");
    assert_same(&out, &flat, "the single stem dissolves");
    assert_eq!(
        kinds(&log),
        vec![Step::Macro {
            kind: MacroKind::DissolveStem,
            root: 0,
            slot: 2
        }]
    );
}

#[test]
fn the_central_label_settles_on_the_minimum() {
    let frame = SectorFrame::new(8, &[0, 4]).unwrap();
    let home = ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[]);

    let (out, log) = reduce(&home).expect("reduction succeeds");
    assert!(log.is_empty(), "label 1 is already minimal");
    assert_same(&out, &home, "fixed point");

    let (out, log) =
        reduce(&ivy(&frame, IvyCenter::DoubleEdge { label: 3 }, &[])).expect("reduction succeeds");
    assert_same(&out, &home, "labels 3,7 rotate to 1,5");
    assert_eq!(
        kinds(&log),
        vec![Step::Even {
            j: 3,
            inverse: false
        }]
    );

    let (out, log) =
        reduce(&ivy(&frame, IvyCenter::DoubleEdge { label: 2 }, &[])).expect("reduction succeeds");
    assert_same(&out, &home, "labels 2,6 rotate twice");
    assert_eq!(
        kinds(&log),
        vec![
            Step::Even {
                j: 2,
                inverse: false
            },
            Step::Even {
                j: 3,
                inverse: false
            },
        ]
    );
}

#[test]
fn stems_across_the_root_boundary_rotate_until_they_can_dissolve() {
    let frame = SectorFrame::new(8, &[0, 4]).unwrap();
    // Stem at the central label itself: its straight-arm neighbor sits at
    // the other root, so the center must rotate backward first.
    let g = ivy(&frame, IvyCenter::DoubleEdge { label: 3 }, &[(3, 1)]);
    let home = ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[]);
    let (out, log) = reduce(&g).expect("reduction succeeds");
    assert_same(&out, &home, "rotation frees the stem to dissolve");
    assert_eq!(
        kinds(&log),
        vec![
            Step::Even {
                j: 2,
                inverse: true
            },
            Step::Macro {
                kind: MacroKind::DissolveStem,
                root: 0,
                slot: 3
            },
            Step::Even {
                j: 2,
                inverse: false
            },
            Step::Even {
                j: 3,
                inverse: false
            },
        ]
    );
}

#[test]
fn alternating_frames_merge_stems_into_one() {
    let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();

    // Two stem pairs merge at the lower slot.
    let g = ivy(&frame, IvyCenter::Vertex, &[(1, 1), (3, 2)]);
    let merged = ivy(&frame, IvyCenter::Vertex, &[(1, 3)]);
    assert_eq!(bounded_face_count(&g), 6);
    let (out, log) = reduce(&g).expect("reduction succeeds");
    assert_same(&out, &merged, "stems merge into slot 1");
    assert_eq!(bounded_face_count(&out), 6, "bounded faces are conserved");
    assert_eq!(
        kinds(&log),
        vec![Step::Macro {
            kind: MacroKind::MergeStems,
            root: 0,
            slot: 1
        }]
    );

    // A single stem at the higher slot shuffles down.
    let g = ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[(3, 2)]);
    let home = ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[(1, 2)]);
    let (out, log) = reduce(&g).expect("reduction succeeds");
    assert_same(&out, &home, "the stem shuffles to the central slot");
    assert_eq!(
        kinds(&log),
        vec![Step::Macro {
            kind: MacroKind::SwapArms,
            root: 0,
            slot: 1
        }]
    );
    assert_eq!(bounded_face_count(&out), 5);

    // A doubled edge with a higher label rotates down, carrying its stem.
    let g = ivy(&frame, IvyCenter::DoubleEdge { label: 3 }, &[(1, 1)]);
    let home = ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[(1, 1)]);
    let (out, log) = reduce(&g).expect("reduction succeeds");
    assert_same(&out, &home, "the center rotates to label 1");
    assert_eq!(
        kinds(&log),
        vec![Step::Even {
            j: 3,
            inverse: false
        }]
    );
    assert_eq!(bounded_face_count(&out), 3);
}

#[test]
fn reduction_is_idempotent_and_class_invariant() {
    let g = parse(STAGE_TWO_A);
    let (reduced, _) = reduce(&g).expect("reduction succeeds");
    let (again, log) = reduce(&reduced).expect("reduction of the result");
    assert!(log.is_empty(), "the representative is a fixed point");
    assert_same(&again, &reduced, "idempotent");

    for j in [1usize, 2, 3] {
        let moved = even_action_sq(&g, j, false).expect("move applies");
        let (from_moved, _) = reduce(&moved).expect("reduction succeeds");
        assert_same(
            &from_moved,
            &reduced,
            "reduction is constant along the action orbit",
        );
    }
}

#[test]
fn invariants_name_the_desk_classes() {
    let frame = SectorFrame::new(8, &[0, 4]).unwrap();
    let alt = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();

    assert_eq!(
        component_invariant(&parse(STAGE_MIN)),
        Some(ComponentInvariant::Center(CenterTag::Vertex))
    );
    assert_eq!(
        component_invariant(&ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[])),
        Some(ComponentInvariant::Center(CenterTag::DoubleEdge))
    );
    assert_eq!(
        component_invariant(&parse(ALT_MIN)),
        Some(ComponentInvariant::ZeroCount(0))
    );
    assert_eq!(
        component_invariant(&ivy(&alt, IvyCenter::DoubleEdge { label: 1 }, &[])),
        Some(ComponentInvariant::ZeroCount(1))
    );
    assert_eq!(
        component_invariant(&ivy(&alt, IvyCenter::Vertex, &[(1, 3)])),
        Some(ComponentInvariant::ZeroCount(6))
    );

    // The reduced shape of an alternating class is determined by the count.
    let g = ivy(&alt, IvyCenter::DoubleEdge { label: 3 }, &[(3, 1), (1, 1)]);
    let k = bounded_face_count(&g);
    assert_eq!(k, 5);
    let (out, _) = reduce(&g).expect("reduction succeeds");
    let desc = ivy_descriptor(&out).expect("reduced graph is ivy");
    assert_eq!(desc.center, IvyCenter::DoubleEdge { label: 1 });
    assert_eq!(
        desc.arms[&1],
        Arm::stem(2),
        "stem length carries (k - 1) / 2"
    );
}
