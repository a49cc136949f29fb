//! Properties of normalization over randomly scrambled gathered graphs:
//! gathering always lands in ivy form with a faithful log, reduction is
//! constant along action orbits and idempotent, the class invariant is
//! preserved, and alternating classes reduce to the shape their bounded
//! face count dictates.

use std::collections::BTreeMap;

use proptest::prelude::*;
use sgr_braid::{even_action_sq, ActionError};
use sgr_core::canonical::canonicalize;
use sgr_core::equals;
use sgr_core::format::to_text;
use sgr_core::frame::SectorFrame;
use sgr_core::graph::CellGraph;
use sgr_core::ivy::{build_ivy, is_ivy, ivy_descriptor, Arm, IvyCenter, IvyDescriptor};
use sgr_core::metrics::{bounded_face_count, root_metric};
use sgr_core::structures::StructureKind;
use sgr_normalize::{component_invariant, reduce, to_ivy};

fn frame_pool() -> Vec<SectorFrame> {
    vec![
        SectorFrame::new(6, &[0, 3]).unwrap(),
        SectorFrame::new(8, &[0, 4]).unwrap(),
        SectorFrame::new(8, &[0, 2, 4, 6]).unwrap(),
        SectorFrame::new(10, &[0, 5]).unwrap(),
        SectorFrame::new(12, &[0, 4, 6, 10]).unwrap(),
    ]
}

fn make_descriptor(frame: &SectorFrame, center_pick: usize, arm_picks: &[usize]) -> IvyDescriptor {
    let nu = frame.nu();
    let dominant = frame.dominant_labels();
    let mut arms: BTreeMap<usize, Arm> = BTreeMap::new();
    let mut next = 0;
    for &j in &dominant {
        if arms.contains_key(&j) {
            continue;
        }
        let arm = if frame.is_dominant(frame.add(j, 1)) {
            Arm::flat(StructureKind::I)
        } else {
            let pick = arm_picks[next % arm_picks.len()] % 4;
            next += 1;
            match pick {
                0 => Arm::flat(StructureKind::V),
                len => Arm::stem(len),
            }
        };
        arms.insert(j, arm);
        arms.insert(frame.add(j, nu), arm);
    }
    let center = if center_pick % 2 == 0 {
        IvyCenter::Vertex
    } else {
        let label = dominant[(center_pick / 2) % dominant.len()];
        IvyCenter::DoubleEdge { label }
    };
    IvyDescriptor {
        frame: frame.clone(),
        center,
        arms,
    }
}

/// Builds a gathered graph, then walks it away from ivy form with a short
/// word of squared moves. Moves that a graph refuses are skipped.
fn scramble(
    frame: &SectorFrame,
    center_pick: usize,
    arm_picks: &[usize],
    word: &[(usize, bool)],
) -> (CellGraph, CellGraph) {
    let desc = make_descriptor(frame, center_pick, arm_picks);
    let start = build_ivy(&desc).expect("shaped descriptor builds");
    let dominant = frame.dominant_labels();
    let mut cur = start.clone();
    for &(j_pick, inverse) in word {
        let j = dominant[j_pick % dominant.len()];
        match even_action_sq(&cur, j, inverse) {
            Ok(next) => cur = next,
            Err(ActionError::Junction(_)) => {}
            Err(other) => panic!("move on a valid graph broke: {other}"),
        }
    }
    (start, cur)
}

proptest! {
    #[test]
    fn gathering_lands_in_ivy_form_with_a_faithful_log(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        word in prop::collection::vec((0usize..8, any::<bool>()), 0..4),
    ) {
        let pool = frame_pool();
        let frame = &pool[frame_pick % pool.len()];
        let (_, g) = scramble(frame, center_pick, &arm_picks, &word);
        let before = root_metric(&g).expect("symmetric graph has a metric");

        let (out, log) = to_ivy(&g).expect("gathering succeeds");
        prop_assert!(is_ivy(&out));
        prop_assert!(root_metric(&out).unwrap() <= before);
        prop_assert!(log.len() as u64 * 2 <= before);

        let canon = canonicalize(&g).expect("valid graph canonicalizes").graph;
        let replayed = log.replay(&canon).expect("log replays");
        prop_assert_eq!(to_text(&replayed), to_text(&out));
    }

    #[test]
    fn reduction_is_constant_along_the_orbit(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        word in prop::collection::vec((0usize..8, any::<bool>()), 0..4),
    ) {
        let pool = frame_pool();
        let frame = &pool[frame_pick % pool.len()];
        let (start, g) = scramble(frame, center_pick, &arm_picks, &word);
        let (from_start, _) = reduce(&start).expect("reduction succeeds");
        let (from_scramble, _) = reduce(&g).expect("reduction succeeds");
        prop_assert!(equals(&from_start, &from_scramble).unwrap());
    }

    #[test]
    fn reduction_is_idempotent(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        word in prop::collection::vec((0usize..8, any::<bool>()), 0..4),
    ) {
        let pool = frame_pool();
        let frame = &pool[frame_pick % pool.len()];
        let (_, g) = scramble(frame, center_pick, &arm_picks, &word);
        let (reduced, _) = reduce(&g).expect("reduction succeeds");
        let (again, log) = reduce(&reduced).expect("reduction of the result");
        prop_assert!(log.is_empty());
        prop_assert!(equals(&again, &reduced).unwrap());
    }

    #[test]
    fn the_invariant_survives_scrambling_and_reduction(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        word in prop::collection::vec((0usize..8, any::<bool>()), 0..4),
    ) {
        let pool = frame_pool();
        let frame = &pool[frame_pick % pool.len()];
        let (start, g) = scramble(frame, center_pick, &arm_picks, &word);
        let tag = component_invariant(&start);
        prop_assert!(tag.is_some());
        prop_assert_eq!(component_invariant(&g), tag);
        let (reduced, _) = reduce(&g).expect("reduction succeeds");
        prop_assert_eq!(component_invariant(&reduced), tag);
    }

    #[test]
    fn alternating_classes_reduce_to_the_counted_shape(
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        word in prop::collection::vec((0usize..8, any::<bool>()), 0..4),
    ) {
        let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();
        let (_, g) = scramble(&frame, center_pick, &arm_picks, &word);
        let k = bounded_face_count(&g);
        let (reduced, _) = reduce(&g).expect("reduction succeeds");
        prop_assert_eq!(bounded_face_count(&reduced), k);

        let desc = ivy_descriptor(&reduced).expect("reduced graph is ivy");
        let base = frame.min_dominant();
        let (want_center, stem) = if k % 2 == 0 {
            (IvyCenter::Vertex, k / 2)
        } else {
            (IvyCenter::DoubleEdge { label: base }, (k - 1) / 2)
        };
        prop_assert_eq!(desc.center, want_center);
        if stem == 0 {
            prop_assert_eq!(desc.arms[&base], Arm::flat(StructureKind::V));
        } else {
            prop_assert_eq!(desc.arms[&base], Arm::stem(stem));
        }
        for j in frame.dominant_labels() {
            if j != base && j != frame.add(base, frame.nu()) {
                prop_assert_eq!(desc.arms[&j], Arm::flat(StructureKind::V));
            }
        }
    }
}
