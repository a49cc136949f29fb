//! Properties of the squared generators over randomly built gathered
//! graphs: inverses invert, half-turn partner labels agree, the center
//! shape survives, and alternating frames keep their bounded face count.

use std::collections::BTreeMap;

use proptest::prelude::*;
use sgr_braid::action::even_action_sq;
use sgr_core::equals;
use sgr_core::frame::SectorFrame;
use sgr_core::graph::CellGraph;
use sgr_core::ivy::{build_ivy, Arm, IvyCenter, IvyDescriptor};
use sgr_core::metrics::bounded_face_count;
use sgr_core::structures::StructureKind;
use sgr_core::symmetry::center_type;

fn frame_pool() -> Vec<SectorFrame> {
    vec![
        SectorFrame::new(6, &[0, 3]).unwrap(),
        SectorFrame::new(8, &[0, 4]).unwrap(),
        SectorFrame::new(8, &[0, 2, 4, 6]).unwrap(),
        SectorFrame::new(10, &[0, 5]).unwrap(),
        SectorFrame::new(12, &[0, 4, 6, 10]).unwrap(),
    ]
}

/// Deterministically shapes pick streams into a well-formed descriptor:
/// straight arms where the frame demands them, a split or a stem elsewhere,
/// mirrored across the half turn.
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

fn build_case(
    frame_pick: usize,
    center_pick: usize,
    arm_picks: &[usize],
    j_pick: usize,
) -> (CellGraph, usize) {
    let pool = frame_pool();
    let frame = &pool[frame_pick % pool.len()];
    let desc = make_descriptor(frame, center_pick, arm_picks);
    let g = build_ivy(&desc).expect("shaped descriptor builds");
    let dominant = frame.dominant_labels();
    let j = dominant[j_pick % dominant.len()];
    (g, j)
}

proptest! {
    #[test]
    fn inverse_undoes_the_forward_move(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        j_pick in 0usize..8,
    ) {
        let (g, j) = build_case(frame_pick, center_pick, &arm_picks, j_pick);
        let forward = even_action_sq(&g, j, false).expect("forward applies");
        let back = even_action_sq(&forward, j, true).expect("inverse applies");
        prop_assert!(equals(&back, &g).unwrap());
    }

    #[test]
    fn forward_undoes_the_inverse_move(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        j_pick in 0usize..8,
    ) {
        let (g, j) = build_case(frame_pick, center_pick, &arm_picks, j_pick);
        let back = even_action_sq(&g, j, true).expect("inverse applies");
        let forward = even_action_sq(&back, j, false).expect("forward applies");
        prop_assert!(equals(&forward, &g).unwrap());
    }

    #[test]
    fn half_turn_partner_labels_act_identically(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        j_pick in 0usize..8,
        inverse in any::<bool>(),
    ) {
        let (g, j) = build_case(frame_pick, center_pick, &arm_picks, j_pick);
        let nu = g.frame().nu();
        let a = even_action_sq(&g, j, inverse).expect("move applies");
        let b = even_action_sq(&g, j + nu, inverse).expect("partner applies");
        prop_assert!(equals(&a, &b).unwrap());
    }

    #[test]
    fn center_shape_survives_every_move(
        frame_pick in 0usize..5,
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        j_pick in 0usize..8,
        inverse in any::<bool>(),
    ) {
        let (g, j) = build_case(frame_pick, center_pick, &arm_picks, j_pick);
        let before = center_type(&g).expect("symmetric input").tag();
        let out = even_action_sq(&g, j, inverse).expect("move applies");
        let after = center_type(&out).expect("symmetric output").tag();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn alternating_frames_keep_their_bounded_faces(
        center_pick in 0usize..16,
        arm_picks in prop::collection::vec(0usize..4, 4),
        j_pick in 0usize..8,
        inverse in any::<bool>(),
    ) {
        let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();
        let desc = make_descriptor(&frame, center_pick, &arm_picks);
        let g = build_ivy(&desc).expect("shaped descriptor builds");
        let j = frame.dominant_labels()[j_pick % 4];
        let out = even_action_sq(&g, j, inverse).expect("move applies");
        prop_assert_eq!(bounded_face_count(&out), bounded_face_count(&g));
    }
}
