//! Composite rewrites on ivy graphs, expressed on arm descriptors.
//!
//! Each macro stands for a fixed word of even squared moves whose net effect
//! only permutes or merges arm data. They are applied by rewriting the
//! descriptor and rebuilding, which keeps them cheap and exactly checkable.
//! All three rewrite the mirrored slots `j + nu` in the same stroke so
//! central symmetry is preserved.

use sgr_core::graph::CellGraph;
use sgr_core::ivy::{build_ivy, ivy_descriptor, Arm, IvyCenter, IvyDescriptor, IvyError};
use sgr_core::structures::StructureKind;
use thiserror::Error;

/// The three composite rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacroKind {
    /// Interchange the arms of two neighboring dominant slots.
    SwapArms,
    /// Drop the stem of a branch whose previous dominant slot is a split
    /// (only meaningful when bounded face count is not conserved).
    DissolveStem,
    /// Merge the stems of two neighboring branches into the first.
    MergeStems,
}

impl MacroKind {
    /// Token used in action log files.
    #[must_use]
    pub fn token(self) -> &'static str {
        match self {
            MacroKind::SwapArms => "swapYV",
            MacroKind::DissolveStem => "convYI",
            MacroKind::MergeStems => "mergeYY",
        }
    }

    /// Parses a log token.
    #[must_use]
    pub fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "swapYV" => Some(MacroKind::SwapArms),
            "convYI" => Some(MacroKind::DissolveStem),
            "mergeYY" => Some(MacroKind::MergeStems),
            _ => None,
        }
    }
}

/// Failure modes of a composite rewrite.
#[derive(Debug, Error)]
pub enum MacroError {
    #[error("graph is not in ivy form")]
    NotIvy,
    #[error("label {j} is not dominant")]
    Subdominant { j: usize },
    #[error("slot {j} does not satisfy the precondition of this rewrite")]
    Precondition { j: usize },
    #[error("slots {j} and {j2} sit at opposite ends of the central edge")]
    SplitRoots { j: usize, j2: usize },
    #[error("rewrite would change the bounded face count of an alternating frame")]
    FaceCount,
    #[error(transparent)]
    Build(#[from] IvyError),
}

fn arm(desc: &IvyDescriptor, j: usize) -> Result<Arm, MacroError> {
    desc.arms
        .get(&j)
        .copied()
        .ok_or(MacroError::Subdominant { j })
}

fn set_pair(desc: &mut IvyDescriptor, j: usize, value: Arm) {
    let nu = desc.frame.nu();
    let j_opp = desc.frame.add(j, nu);
    desc.arms.insert(j, value);
    desc.arms.insert(j_opp, value);
}

/// Both slots must hang off one root. A central vertex hosts every slot;
/// the ends of a central doubled edge split the slots into the half-turn
/// starting at the central label and the opposite half-turn.
fn require_same_root(desc: &IvyDescriptor, j: usize, j2: usize) -> Result<(), MacroError> {
    if let IvyCenter::DoubleEdge { label } = desc.center {
        let n = desc.frame.n();
        let nu = desc.frame.nu();
        let s1 = (j + n - label) % n;
        let s2 = (j2 + n - label) % n;
        if (s1 < nu) != (s2 < nu) {
            return Err(MacroError::SplitRoots { j, j2 });
        }
    }
    Ok(())
}

/// Interchanges the arms at dominant slot `j` and the next dominant slot.
///
/// Kinds and stem lengths travel, slot labels stay. Both slots must be able
/// to host the other's arm, so neither may be a slot whose successor label
/// is dominant. Involution: applying it twice restores the descriptor.
pub fn swap_arms_desc(desc: &IvyDescriptor, j: usize) -> Result<IvyDescriptor, MacroError> {
    let frame = &desc.frame;
    let j2 = frame.next_dominant(j);
    require_same_root(desc, j, j2)?;
    let a = arm(desc, j)?;
    let b = arm(desc, j2)?;
    // A slot followed by a dominant label only hosts straight arms; those
    // never swap.
    if a.kind == StructureKind::I || b.kind == StructureKind::I {
        return Err(MacroError::Precondition { j });
    }
    let mut out = desc.clone();
    set_pair(&mut out, j, b);
    set_pair(&mut out, j2, a);
    out.check()?;
    Ok(out)
}

/// Turns the branch at slot `j` into a split, discarding its stem. The
/// previous dominant slot must host a straight arm. Rejected on alternating
/// frames, where total stem length is conserved by every move.
pub fn dissolve_stem_desc(desc: &IvyDescriptor, j: usize) -> Result<IvyDescriptor, MacroError> {
    let frame = &desc.frame;
    if frame.is_alternating() {
        return Err(MacroError::FaceCount);
    }
    let j_prev = frame.prev_dominant(j);
    require_same_root(desc, j_prev, j)?;
    let here = arm(desc, j)?;
    let prev = arm(desc, j_prev)?;
    if here.kind != StructureKind::Y || prev.kind != StructureKind::I {
        return Err(MacroError::Precondition { j });
    }
    let mut out = desc.clone();
    set_pair(&mut out, j, Arm::flat(StructureKind::V));
    out.check()?;
    Ok(out)
}

/// Merges the branch at the next dominant slot into the branch at `j`.
/// Both slots must host branches; the second becomes a split.
pub fn merge_stems_desc(desc: &IvyDescriptor, j: usize) -> Result<IvyDescriptor, MacroError> {
    let frame = &desc.frame;
    let j2 = frame.next_dominant(j);
    require_same_root(desc, j, j2)?;
    let a = arm(desc, j)?;
    let b = arm(desc, j2)?;
    if a.kind != StructureKind::Y || b.kind != StructureKind::Y {
        return Err(MacroError::Precondition { j });
    }
    let mut out = desc.clone();
    set_pair(&mut out, j, Arm::stem(a.len + b.len));
    set_pair(&mut out, j2, Arm::flat(StructureKind::V));
    out.check()?;
    Ok(out)
}

/// Applies a composite rewrite to an ivy graph and returns the canonical
/// rebuilt result.
pub fn apply_macro(graph: &CellGraph, kind: MacroKind, j: usize) -> Result<CellGraph, MacroError> {
    let desc = ivy_descriptor(graph).ok_or(MacroError::NotIvy)?;
    let out = match kind {
        MacroKind::SwapArms => swap_arms_desc(&desc, j)?,
        MacroKind::DissolveStem => dissolve_stem_desc(&desc, j)?,
        MacroKind::MergeStems => merge_stems_desc(&desc, j)?,
    };
    Ok(build_ivy(&out)?)
}
