//! Reduction from ivy form to a canonical class representative.
//!
//! After gathering, every move is a composite rewrite on the ivy
//! descriptor or a central rotation, scheduled so that the result is a
//! function of the monodromy class alone:
//!
//! * frames with an adjacent dominant pair: dissolve every stem against a
//!   straight arm, shuffling stems toward the nearest straight arm first
//!   and rotating the central doubled edge when a root boundary blocks
//!   the shuffle, then rotate the central label to the minimum;
//! * alternating frames: merge all stems into one (closest pairs first),
//!   rotate the central label to the minimum, then shuffle the merged
//!   stem to the lowest slot.

use sgr_braid::{apply_step, ActionLog, MacroKind, ReplayError, Step};
use sgr_core::{ivy_descriptor, CellGraph, IvyCenter, IvyDescriptor, StructureKind};

use crate::gather::gather_into;
use crate::NormalizeError;

/// Reduces `g` to the canonical representative of its monodromy class,
/// returning the canonical graph and the log of every move taken.
pub fn reduce(g: &CellGraph) -> Result<(CellGraph, ActionLog), NormalizeError> {
    let mut log = ActionLog::new();
    let mut cur = gather_into(g, &mut log)?;
    if cur.frame().is_alternating() {
        cur = merge_phase(cur, &mut log)?;
        cur = settle_center(cur, &mut log)?;
        cur = position_stem(cur, &mut log)?;
    } else {
        cur = dissolve_phase(cur, &mut log)?;
        cur = settle_center(cur, &mut log)?;
    }
    Ok((cur, log))
}

fn from_replay(e: ReplayError) -> NormalizeError {
    match e {
        ReplayError::Action(e) => NormalizeError::Action(e),
        ReplayError::Macro(e) => NormalizeError::Macro(e),
        ReplayError::Canonical(e) => NormalizeError::Canonical(e),
        ReplayError::HashMismatch { .. } => NormalizeError::Stalled {
            detail: "digest mismatch while applying a fresh step".into(),
        },
    }
}

/// Applies one step and records it.
fn play(cur: &CellGraph, log: &mut ActionLog, step: Step) -> Result<CellGraph, NormalizeError> {
    let next = apply_step(cur, step).map_err(from_replay)?;
    log.record(step, &next)?;
    Ok(next)
}

fn macro_step(kind: MacroKind, slot: usize) -> Step {
    Step::Macro {
        kind,
        root: 0,
        slot,
    }
}

fn descriptor(g: &CellGraph) -> Result<IvyDescriptor, NormalizeError> {
    ivy_descriptor(g).ok_or_else(|| NormalizeError::Stalled {
        detail: "graph left ivy form during reduction".into(),
    })
}

/// The label whose slot sits first at the primary root: the central label
/// of a doubled edge, or the lowest dominant label at a central vertex.
fn base_label(desc: &IvyDescriptor) -> usize {
    match desc.center {
        IvyCenter::Vertex => desc.frame.min_dominant(),
        IvyCenter::DoubleEdge { label } => label,
    }
}

fn offset(desc: &IvyDescriptor, j: usize) -> usize {
    desc.frame.sub(j, base_label(desc))
}

/// True when slot `j` sits at the primary root. For a central vertex every
/// slot does; the half-turn makes the offset test a pure convention there.
fn in_span(desc: &IvyDescriptor, j: usize) -> bool {
    match desc.center {
        IvyCenter::Vertex => true,
        IvyCenter::DoubleEdge { .. } => offset(desc, j) < desc.frame.nu(),
    }
}

/// One slot per half-turn class, ordered outward from the base label.
fn rep_slots(desc: &IvyDescriptor) -> Vec<usize> {
    let mut reps: Vec<usize> = desc
        .frame
        .dominant_labels()
        .into_iter()
        .filter(|&j| offset(desc, j) < desc.frame.nu())
        .collect();
    reps.sort_by_key(|&j| offset(desc, j));
    reps
}

/// Swaps needed to carry the stem at `y` down to the nearest straight arm
/// below it at the same root; `None` when a root boundary or another stem
/// intervenes.
fn dissolve_distance(desc: &IvyDescriptor, y: usize) -> Option<usize> {
    let frame = &desc.frame;
    let mut p = frame.prev_dominant(y);
    let mut d = 0usize;
    loop {
        if !in_span(desc, p) || d > frame.n() {
            return None;
        }
        match desc.arms[&p].kind {
            StructureKind::I => return Some(d),
            StructureKind::V => {
                d += 1;
                p = frame.prev_dominant(p);
            }
            StructureKind::Y => return None,
        }
    }
}

/// Eliminates every stem of a non-alternating frame.
fn dissolve_phase(mut cur: CellGraph, log: &mut ActionLog) -> Result<CellGraph, NormalizeError> {
    let cap = 64 * cur.frame().n();
    for _ in 0..cap {
        let desc = descriptor(&cur)?;
        let ys: Vec<usize> = rep_slots(&desc)
            .into_iter()
            .filter(|j| desc.arms[j].kind == StructureKind::Y)
            .collect();
        if ys.is_empty() {
            return Ok(cur);
        }
        let mut best: Option<(usize, usize)> = None;
        for &y in &ys {
            if let Some(d) = dissolve_distance(&desc, y) {
                if best.map_or(true, |(bd, _)| d < bd) {
                    best = Some((d, y));
                }
            }
        }
        match best {
            Some((0, y)) => {
                cur = play(&cur, log, macro_step(MacroKind::DissolveStem, y))?;
            }
            Some((_, y)) => {
                let p = desc.frame.prev_dominant(y);
                cur = play(&cur, log, macro_step(MacroKind::SwapArms, p))?;
            }
            None => match desc.center {
                IvyCenter::DoubleEdge { label } => {
                    let j = desc.frame.prev_dominant(label);
                    cur = play(&cur, log, Step::Even { j, inverse: true })?;
                }
                IvyCenter::Vertex => {
                    return Err(NormalizeError::Stalled {
                        detail: "no stem can reach a straight arm".into(),
                    });
                }
            },
        }
    }
    Err(NormalizeError::Stalled {
        detail: "stem dissolution exceeded its step budget".into(),
    })
}

/// Dominant steps from `from` up to `to`.
fn dominant_gap(desc: &IvyDescriptor, from: usize, to: usize) -> usize {
    let frame = &desc.frame;
    let mut cur = from;
    let mut gap = 0usize;
    while cur != to && gap <= frame.n() {
        cur = frame.next_dominant(cur);
        gap += 1;
    }
    gap
}

/// Merges the stems of an alternating frame into a single one per root.
fn merge_phase(mut cur: CellGraph, log: &mut ActionLog) -> Result<CellGraph, NormalizeError> {
    let cap = 64 * cur.frame().n();
    for _ in 0..cap {
        let desc = descriptor(&cur)?;
        let ys: Vec<usize> = rep_slots(&desc)
            .into_iter()
            .filter(|j| desc.arms[j].kind == StructureKind::Y)
            .collect();
        if ys.len() <= 1 {
            return Ok(cur);
        }
        let mut best: Option<(usize, usize)> = None;
        for pair in ys.windows(2) {
            let gap = dominant_gap(&desc, pair[0], pair[1]);
            if best.map_or(true, |(bg, _)| gap < bg) {
                best = Some((gap, pair[1]));
            }
        }
        let (gap, upper) = best.expect("at least two stems");
        if gap == 1 {
            let lower = desc.frame.prev_dominant(upper);
            cur = play(&cur, log, macro_step(MacroKind::MergeStems, lower))?;
        } else {
            let p = desc.frame.prev_dominant(upper);
            cur = play(&cur, log, macro_step(MacroKind::SwapArms, p))?;
        }
    }
    Err(NormalizeError::Stalled {
        detail: "stem merging exceeded its step budget".into(),
    })
}

/// Rotates the central doubled edge until it carries the lowest dominant
/// label. Rotation re-plants the base slot's arm at the other root and
/// changes nothing else, so it commutes with the descriptor's arms.
fn settle_center(mut cur: CellGraph, log: &mut ActionLog) -> Result<CellGraph, NormalizeError> {
    let target = cur.frame().min_dominant();
    let cap = cur.frame().dominant_labels().len();
    for _ in 0..=cap {
        let desc = descriptor(&cur)?;
        let label = match desc.center {
            IvyCenter::Vertex => return Ok(cur),
            IvyCenter::DoubleEdge { label } => label,
        };
        if label == target {
            return Ok(cur);
        }
        cur = play(
            &cur,
            log,
            Step::Even {
                j: label,
                inverse: false,
            },
        )?;
    }
    Err(NormalizeError::Stalled {
        detail: "central rotation did not reach the lowest dominant label".into(),
    })
}

/// Shuffles the single merged stem of an alternating frame down to the
/// base slot.
fn position_stem(mut cur: CellGraph, log: &mut ActionLog) -> Result<CellGraph, NormalizeError> {
    let cap = cur.frame().n();
    for _ in 0..=cap {
        let desc = descriptor(&cur)?;
        let ys: Vec<usize> = rep_slots(&desc)
            .into_iter()
            .filter(|j| desc.arms[j].kind == StructureKind::Y)
            .collect();
        let Some(&y) = ys.first() else {
            return Ok(cur);
        };
        if ys.len() > 1 {
            return Err(NormalizeError::Stalled {
                detail: "more than one stem survived merging".into(),
            });
        }
        if y == base_label(&desc) {
            return Ok(cur);
        }
        let p = desc.frame.prev_dominant(y);
        cur = play(&cur, log, macro_step(MacroKind::SwapArms, p))?;
    }
    Err(NormalizeError::Stalled {
        detail: "stem positioning exceeded its step budget".into(),
    })
}
