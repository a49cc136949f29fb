//! Ivy form: the fully gathered shape of a centrally symmetric graph.
//!
//! In ivy form every branch vertex sits at a root (the central vertex or
//! an endpoint of the central doubled edge), so the whole graph is the
//! root material plus, for each dominant label whose successor sector is
//! subdominant, an optional doubled stem climbing away from the root. Such
//! a graph is captured completely by a small descriptor: the frame, the
//! center shape, and one arm entry per dominant label.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canonical::{equals, trim};
use crate::faces::FaceData;
use crate::frame::SectorFrame;
use crate::graph::{CellGraph, Dart, Edge, EdgeId, RayId, StructureIssue, VertexId};
use crate::structures::StructureKind;
use crate::symmetry::{center_type, CenterType};
use crate::validate::validate;

/// One arm of an ivy graph: the structure planted at a dominant label.
/// `I` and `V` arms are flat (`len` 0); a `Y` arm has a doubled stem of
/// `len` edges ending in a two-ray top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arm {
    pub kind: StructureKind,
    pub len: usize,
}

impl Arm {
    #[must_use]
    pub fn flat(kind: StructureKind) -> Arm {
        Arm { kind, len: 0 }
    }

    #[must_use]
    pub fn stem(len: usize) -> Arm {
        Arm {
            kind: StructureKind::Y,
            len,
        }
    }
}

/// Center shape of an ivy graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IvyCenter {
    Vertex,
    /// Central doubled edge carrying `label` and its half-turn partner.
    DoubleEdge {
        label: usize,
    },
}

/// Complete description of an ivy graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IvyDescriptor {
    pub frame: SectorFrame,
    pub center: IvyCenter,
    /// One arm per dominant label.
    pub arms: BTreeMap<usize, Arm>,
}

#[derive(Debug, Error)]
pub enum IvyError {
    #[error("arm set does not match the frame's dominant labels")]
    ArmCoverage,
    #[error("arm at label {j} does not equal its half-turn partner")]
    AsymmetricArms { j: usize },
    #[error("arm kind at label {j} conflicts with the frame")]
    KindMismatch { j: usize },
    #[error("arm length at label {j} is invalid for its kind")]
    BadLength { j: usize },
    #[error("central label {label} is not dominant")]
    CentralLabel { label: usize },
    #[error("assembled graph is structurally broken: {0}")]
    Structure(#[from] StructureIssue),
    #[error("assembled graph violates the labeling laws: {0}")]
    Laws(String),
}

impl IvyDescriptor {
    /// Checks coverage, central-symmetry pairing of arms, and kind/length
    /// consistency with the frame.
    pub fn check(&self) -> Result<(), IvyError> {
        let frame = &self.frame;
        let dominant = frame.dominant_labels();
        if self.arms.len() != dominant.len() || !dominant.iter().all(|j| self.arms.contains_key(j))
        {
            return Err(IvyError::ArmCoverage);
        }
        for (&j, arm) in &self.arms {
            let partner = frame.add(j, frame.nu());
            if self.arms.get(&partner) != Some(arm) {
                return Err(IvyError::AsymmetricArms { j });
            }
            let adjacent_next = frame.is_dominant(frame.add(j, 1));
            let kind_ok = match arm.kind {
                StructureKind::I => adjacent_next,
                StructureKind::V | StructureKind::Y => !adjacent_next,
            };
            if !kind_ok {
                return Err(IvyError::KindMismatch { j });
            }
            let len_ok = match arm.kind {
                StructureKind::I | StructureKind::V => arm.len == 0,
                StructureKind::Y => arm.len >= 1,
            };
            if !len_ok {
                return Err(IvyError::BadLength { j });
            }
        }
        if let IvyCenter::DoubleEdge { label } = self.center {
            if !frame.is_dominant(label) {
                return Err(IvyError::CentralLabel { label });
            }
        }
        Ok(())
    }

    /// Total vertices of the built graph.
    #[must_use]
    pub fn vertex_count(&self) -> usize {
        let roots = match self.center {
            IvyCenter::Vertex => 1,
            IvyCenter::DoubleEdge { .. } => 2,
        };
        roots + self.arms.values().map(|a| a.len).sum::<usize>()
    }
}

/// Incremental id allocation for graph assembly.
struct Assembler {
    rotations: BTreeMap<VertexId, Vec<Dart>>,
    edges: BTreeMap<EdgeId, Edge>,
    rays: BTreeMap<RayId, VertexId>,
    anchor: Option<(RayId, usize)>,
    n: usize,
    next_v: u32,
    next_e: u32,
    next_r: u32,
}

impl Assembler {
    fn new(n: usize) -> Assembler {
        Assembler {
            rotations: BTreeMap::new(),
            edges: BTreeMap::new(),
            rays: BTreeMap::new(),
            anchor: None,
            n,
            next_v: 1,
            next_e: 1,
            next_r: 1,
        }
    }

    fn vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_v);
        self.next_v += 1;
        self.rotations.insert(v, Vec::new());
        v
    }

    fn edge(&mut self, label: usize, tail: VertexId, head: VertexId) -> EdgeId {
        let e = EdgeId(self.next_e);
        self.next_e += 1;
        self.edges.insert(e, Edge { label, tail, head });
        e
    }

    /// Creates a ray at `owner` whose clockwise flank will be sector `cw`.
    /// The first ray created fixes the anchor.
    fn ray(&mut self, owner: VertexId, cw: usize) -> RayId {
        let r = RayId(self.next_r);
        self.next_r += 1;
        self.rays.insert(r, owner);
        if self.anchor.is_none() {
            self.anchor = Some((r, (cw + 1) % self.n));
        }
        r
    }

    fn set_rot(&mut self, v: VertexId, rot: Vec<Dart>) {
        self.rotations.insert(v, rot);
    }
}

/// Builds the arc a single arm contributes to its root's rotation,
/// creating any stem vertices, edges, and rays along the way.
fn build_arm(
    asm: &mut Assembler,
    frame: &SectorFrame,
    root: VertexId,
    j: usize,
    arm: Arm,
) -> Vec<Dart> {
    match arm.kind {
        StructureKind::I => {
            let r = asm.ray(root, j);
            vec![Dart::Ray(r)]
        }
        StructureKind::V => {
            let r1 = asm.ray(root, j);
            let r2 = asm.ray(root, frame.add(j, 1));
            vec![Dart::Ray(r1), Dart::Ray(r2)]
        }
        StructureKind::Y => {
            let jp = frame.next_dominant(j);
            let len = arm.len;
            let mut chain = vec![root];
            for _ in 0..len {
                chain.push(asm.vertex());
            }
            // Stem edges: label j flows toward the root, jp away from it.
            let mut down = Vec::new();
            let mut up = Vec::new();
            for i in 0..len {
                down.push(asm.edge(j, chain[i + 1], chain[i]));
                up.push(asm.edge(jp, chain[i], chain[i + 1]));
            }
            for i in 1..len {
                asm.set_rot(
                    chain[i],
                    vec![
                        Dart::EdgeTail(down[i - 1]),
                        Dart::EdgeHead(down[i]),
                        Dart::EdgeTail(up[i]),
                        Dart::EdgeHead(up[i - 1]),
                    ],
                );
            }
            let r1 = asm.ray(chain[len], j);
            let r2 = asm.ray(chain[len], frame.add(j, 1));
            asm.set_rot(
                chain[len],
                vec![
                    Dart::EdgeTail(down[len - 1]),
                    Dart::Ray(r1),
                    Dart::Ray(r2),
                    Dart::EdgeHead(up[len - 1]),
                ],
            );
            vec![Dart::EdgeHead(down[0]), Dart::EdgeTail(up[0])]
        }
    }
}

/// Assembles the graph an ivy descriptor describes. The result is valid,
/// centrally symmetric, and stable under trimming.
pub fn build_ivy(desc: &IvyDescriptor) -> Result<CellGraph, IvyError> {
    desc.check()?;
    let frame = &desc.frame;
    let n = frame.n();
    let nu = frame.nu();
    let mut asm = Assembler::new(n);

    match desc.center {
        IvyCenter::Vertex => {
            let root = asm.vertex();
            let mut rot = Vec::new();
            for j in frame.dominant_labels() {
                rot.extend(build_arm(&mut asm, frame, root, j, desc.arms[&j]));
            }
            asm.set_rot(root, rot);
        }
        IvyCenter::DoubleEdge { label } => {
            let a = label;
            let av = frame.add(a, nu);
            let r1 = asm.vertex();
            let r2 = asm.vertex();
            let e_a = asm.edge(a, r1, r2);
            let e_av = asm.edge(av, r2, r1);
            let mut rot1 = vec![Dart::EdgeHead(e_av), Dart::EdgeTail(e_a)];
            for off in 0..nu {
                let j = frame.add(a, off);
                if frame.is_dominant(j) {
                    rot1.extend(build_arm(&mut asm, frame, r1, j, desc.arms[&j]));
                }
            }
            asm.set_rot(r1, rot1);
            let mut rot2 = vec![Dart::EdgeHead(e_a), Dart::EdgeTail(e_av)];
            for off in 0..nu {
                let j = frame.add(av, off);
                if frame.is_dominant(j) {
                    rot2.extend(build_arm(&mut asm, frame, r2, j, desc.arms[&j]));
                }
            }
            asm.set_rot(r2, rot2);
        }
    }

    let anchor = asm.anchor.expect("every frame has dominant labels");
    let g = CellGraph::from_parts(frame.clone(), asm.rotations, asm.edges, asm.rays, anchor)?;
    let report = validate(&g);
    if !report.ok() {
        return Err(IvyError::Laws(format!("{:?}", report.violations)));
    }
    if report.symmetric != Some(true) {
        return Err(IvyError::Laws(
            "assembled graph is not centrally symmetric".into(),
        ));
    }
    Ok(g)
}

/// Reads the arm structure off a trimmed graph, without certifying it.
fn propose(t: &CellGraph) -> Option<IvyDescriptor> {
    let center = center_type(t)?;
    let faces = FaceData::compute(t).ok()?;
    let frame = t.frame().clone();
    let roots = center.roots();

    let mut arms = BTreeMap::new();
    for j in frame.dominant_labels() {
        // The ray flanked clockwise by sector j ends that sector's face.
        let r = faces.face_of_sector(j).end_ray;
        let w = t.ray_owner(r);
        let adjacent_next = frame.is_dominant(frame.add(j, 1));
        let arm = if roots.contains(&w) {
            Arm::flat(if adjacent_next {
                StructureKind::I
            } else {
                StructureKind::V
            })
        } else {
            if adjacent_next {
                return None;
            }
            // Walk the stem down to a root along the j-labeled tails.
            let mut len = 1usize;
            let mut cur = w;
            loop {
                let e = t.rotation(cur).iter().find_map(|d| match d {
                    Dart::EdgeTail(e) if t.edge(*e).label == j => Some(*e),
                    _ => None,
                })?;
                cur = t.edge(e).head;
                if roots.contains(&cur) {
                    break;
                }
                len += 1;
                if len > t.vertex_count() {
                    return None;
                }
            }
            Arm::stem(len)
        };
        arms.insert(j, arm);
    }

    let center = match center {
        CenterType::Vertex(_) => IvyCenter::Vertex,
        CenterType::DoubleEdge { edges, .. } => IvyCenter::DoubleEdge {
            label: t.edge(edges.0).label.min(t.edge(edges.1).label),
        },
    };
    Some(IvyDescriptor {
        frame,
        center,
        arms,
    })
}

/// Extracts the ivy descriptor of a graph, certifying it by rebuilding and
/// comparing canonical forms. `None` when the graph is not in ivy form.
#[must_use]
pub fn ivy_descriptor(g: &CellGraph) -> Option<IvyDescriptor> {
    let t = trim(g).ok()?;
    let desc = propose(&t)?;
    let rebuilt = build_ivy(&desc).ok()?;
    equals(&t, &rebuilt).ok()?.then_some(desc)
}

/// True when the graph is in ivy form.
#[must_use]
pub fn is_ivy(g: &CellGraph) -> bool {
    ivy_descriptor(g).is_some()
}
