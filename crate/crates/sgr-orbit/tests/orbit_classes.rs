//! The orbit partition at desk scale: the braid moves split each corpus
//! into classes matching the hand-derived picture. Frames with an adjacent
//! dominant pair keep exactly two classes (center vertex against central
//! doubled edge) at every budget tried; the alternating frame splits by
//! bounded face count, one class per count the budget admits. Every class
//! contains its canonical reduced shape, and reduction never leaves a
//! class.

use std::collections::BTreeMap;

use sgr_core::frame::SectorFrame;
use sgr_core::graph::CellGraph;
use sgr_core::ivy::{build_ivy, Arm, IvyCenter, IvyDescriptor};
use sgr_core::structures::StructureKind;
use sgr_core::CenterTag;
use sgr_normalize::{component_invariant, reduce, ComponentInvariant};
use sgr_orbit::{enumerate, orbit_partition, Corpus, OrbitReport};

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

fn class_of(corpus: &Corpus, report: &OrbitReport, g: &CellGraph) -> usize {
    let index = corpus
        .position(g)
        .expect("canonical form exists")
        .expect("graph is in the corpus");
    report
        .classes
        .iter()
        .position(|c| c.members.contains(&index))
        .expect("every member belongs to a class")
}

fn class_sizes(report: &OrbitReport) -> Vec<(ComponentInvariant, usize)> {
    report
        .classes
        .iter()
        .map(|c| (c.invariant, c.members.len()))
        .collect()
}

#[test]
fn two_vertex_corpora_split_into_the_hand_derived_classes() {
    let frame = SectorFrame::new(6, &[0, 3]).unwrap();
    let corpus = enumerate(&frame, 2).unwrap();
    let report = orbit_partition(&corpus).expect("every move stays in the corpus");
    assert_eq!(
        class_sizes(&report),
        vec![
            (ComponentInvariant::Center(CenterTag::Vertex), 1),
            (ComponentInvariant::Center(CenterTag::DoubleEdge), 2),
        ]
    );
    let vertex_class = class_of(&corpus, &report, &ivy(&frame, IvyCenter::Vertex, &[]));
    assert_eq!(vertex_class, 0);
    for label in [1, 2] {
        let g = ivy(&frame, IvyCenter::DoubleEdge { label }, &[]);
        assert_eq!(class_of(&corpus, &report, &g), 1);
    }

    let frame = SectorFrame::new(8, &[0, 4]).unwrap();
    let corpus = enumerate(&frame, 2).unwrap();
    let report = orbit_partition(&corpus).expect("every move stays in the corpus");
    assert_eq!(
        class_sizes(&report),
        vec![
            (ComponentInvariant::Center(CenterTag::Vertex), 1),
            (ComponentInvariant::Center(CenterTag::DoubleEdge), 3),
        ]
    );
    for label in [1, 2, 3] {
        let g = ivy(&frame, IvyCenter::DoubleEdge { label }, &[]);
        assert_eq!(class_of(&corpus, &report, &g), 1);
    }
}

#[test]
fn alternating_two_vertex_classes_are_named_by_zero_count() {
    let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();
    let corpus = enumerate(&frame, 2).unwrap();
    let report = orbit_partition(&corpus).expect("every move stays in the corpus");
    assert_eq!(
        class_sizes(&report),
        vec![
            (ComponentInvariant::ZeroCount(0), 1),
            (ComponentInvariant::ZeroCount(1), 2),
        ]
    );
    let flat = ivy(&frame, IvyCenter::Vertex, &[]);
    assert_eq!(class_of(&corpus, &report, &flat), 0);
    for label in [1, 3] {
        let g = ivy(&frame, IvyCenter::DoubleEdge { label }, &[]);
        assert_eq!(class_of(&corpus, &report, &g), 1);
    }
}

#[test]
fn adjacent_dominant_frames_keep_two_classes_as_the_budget_grows() {
    let frame = SectorFrame::new(6, &[0, 3]).unwrap();
    for (max, sizes) in [(3, (6, 2)), (5, (15, 8))] {
        let corpus = enumerate(&frame, max).unwrap();
        let report = orbit_partition(&corpus).expect("every move stays in the corpus");
        assert_eq!(
            class_sizes(&report),
            vec![
                (ComponentInvariant::Center(CenterTag::Vertex), sizes.0),
                (ComponentInvariant::Center(CenterTag::DoubleEdge), sizes.1),
            ]
        );
        assert_eq!(sizes.0 + sizes.1, corpus.len());
        assert!(report.interior_moves > 0);
        assert!(report.boundary_moves > 0);
    }

    let frame = SectorFrame::new(8, &[0, 4]).unwrap();
    let corpus = enumerate(&frame, 5).unwrap();
    let report = orbit_partition(&corpus).expect("every move stays in the corpus");
    assert_eq!(
        class_sizes(&report),
        vec![
            (ComponentInvariant::Center(CenterTag::Vertex), 48),
            (ComponentInvariant::Center(CenterTag::DoubleEdge), 21),
        ]
    );
    assert_eq!(corpus.len(), 69);
}

#[test]
fn alternating_classes_ladder_by_zero_count() {
    let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();
    let corpus = enumerate(&frame, 5).unwrap();
    let report = orbit_partition(&corpus).expect("every move stays in the corpus");
    assert_eq!(
        class_sizes(&report),
        vec![
            (ComponentInvariant::ZeroCount(0), 9),
            (ComponentInvariant::ZeroCount(1), 6),
            (ComponentInvariant::ZeroCount(2), 12),
            (ComponentInvariant::ZeroCount(3), 6),
            (ComponentInvariant::ZeroCount(4), 9),
        ]
    );
    assert_eq!(corpus.len(), 42);
}

#[test]
fn classes_contain_their_canonical_reduced_shapes() {
    let frame = SectorFrame::new(6, &[0, 3]).unwrap();
    let corpus = enumerate(&frame, 5).unwrap();
    let report = orbit_partition(&corpus).unwrap();
    assert_eq!(
        class_of(&corpus, &report, &ivy(&frame, IvyCenter::Vertex, &[])),
        0
    );
    assert_eq!(
        class_of(
            &corpus,
            &report,
            &ivy(&frame, IvyCenter::DoubleEdge { label: 1 }, &[])
        ),
        1
    );

    let frame = SectorFrame::new(8, &[0, 2, 4, 6]).unwrap();
    let corpus = enumerate(&frame, 5).unwrap();
    let report = orbit_partition(&corpus).unwrap();
    let base = frame.min_dominant();
    for k in 0..=4usize {
        let (center, stem) = if k % 2 == 0 {
            (IvyCenter::Vertex, k / 2)
        } else {
            (IvyCenter::DoubleEdge { label: base }, (k - 1) / 2)
        };
        let stems: Vec<(usize, usize)> = if stem == 0 {
            vec![]
        } else {
            vec![(base, stem)]
        };
        let rep = ivy(&frame, center, &stems);
        let class = class_of(&corpus, &report, &rep);
        assert_eq!(
            report.classes[class].invariant,
            ComponentInvariant::ZeroCount(k)
        );
    }
}

#[test]
fn members_reduce_within_their_own_class() {
    for (n, subdominant, max) in [(6, vec![0, 3], 5), (8, vec![0, 2, 4, 6], 4)] {
        let frame = SectorFrame::new(n, &subdominant).unwrap();
        let corpus = enumerate(&frame, max).unwrap();
        let report = orbit_partition(&corpus).unwrap();
        let mut class_by_index: BTreeMap<usize, usize> = BTreeMap::new();
        for (c, class) in report.classes.iter().enumerate() {
            for &m in &class.members {
                class_by_index.insert(m, c);
            }
        }
        assert_eq!(class_by_index.len(), corpus.len());
        for (index, member) in corpus.graphs().iter().enumerate() {
            let class = class_by_index[&index];
            assert_eq!(
                component_invariant(member),
                Some(report.classes[class].invariant)
            );
            let (reduced, _) = reduce(member).expect("reduction succeeds");
            let target = corpus
                .position(&reduced)
                .expect("canonical form exists")
                .expect("reduced graph stays inside the budget");
            assert_eq!(class_by_index[&target], class);
        }
    }
}
