//! Append-only record of rewrites applied to a graph.
//!
//! Every entry names one move and carries a 64-bit digest of the canonical
//! text of the graph right after that move. Replaying a log against the
//! starting graph therefore both reproduces the final graph and certifies
//! that each intermediate state matches what the writer saw.

use std::fmt::Write as _;

use sgr_core::canonical::{canonical_text, canonicalize, CanonicalError};
use sgr_core::graph::CellGraph;
use thiserror::Error;

use crate::action::{even_action_sq, ActionError};
use crate::macros::{apply_macro, MacroError, MacroKind};

/// One rewrite, as much as replay needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Squared generator at dominant label `j`, possibly inverted.
    Even { j: usize, inverse: bool },
    /// Composite rewrite at dominant slot `slot`. `root` names the hosting
    /// root for readers (0 for a central vertex or the central-label end of
    /// a doubled edge, 1 for the opposite end); replay does not use it.
    Macro {
        kind: MacroKind,
        root: usize,
        slot: usize,
    },
}

/// A step plus the digest of the graph it produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoggedStep {
    pub step: Step,
    pub hash: u64,
}

/// The full record.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ActionLog {
    steps: Vec<LoggedStep>,
}

/// A line that does not parse back into a step.
#[derive(Debug, Error)]
#[error("line {line}: malformed log entry {text:?}")]
pub struct LogParseError {
    pub line: usize,
    pub text: String,
}

/// Replay failure: a move failed, or a digest disagreed.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Macro(#[from] MacroError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error("step {index}: digest {got:016x} does not match recorded {want:016x}")]
    HashMismatch { index: usize, want: u64, got: u64 },
}

/// FNV-1a over the canonical text. Stable across runs and platforms, cheap,
/// and good enough to certify replays against accidental divergence.
fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Digest of a graph: FNV-1a of its canonical text.
pub fn graph_hash(g: &CellGraph) -> Result<u64, CanonicalError> {
    Ok(fnv1a64(canonical_text(g)?.as_bytes()))
}

/// Applies one step to a graph, producing the canonical image.
pub fn apply_step(g: &CellGraph, step: Step) -> Result<CellGraph, ReplayError> {
    match step {
        Step::Even { j, inverse } => Ok(even_action_sq(g, j, inverse)?),
        Step::Macro { kind, slot, .. } => Ok(canonicalize(&apply_macro(g, kind, slot)?)?.graph),
    }
}

impl ActionLog {
    #[must_use]
    pub fn new() -> ActionLog {
        ActionLog::default()
    }

    #[must_use]
    pub fn steps(&self) -> &[LoggedStep] {
        &self.steps
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Appends a step together with the digest of the graph it produced.
    pub fn record(&mut self, step: Step, after: &CellGraph) -> Result<(), CanonicalError> {
        let hash = graph_hash(after)?;
        self.steps.push(LoggedStep { step, hash });
        Ok(())
    }

    /// Serializes the log, one line per step.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ls in &self.steps {
            match ls.step {
                Step::Even { j, inverse } => {
                    let sign = if inverse { "-2" } else { "+2" };
                    writeln!(out, "E {j} {sign} {:016x}", ls.hash).unwrap();
                }
                Step::Macro { kind, root, slot } => {
                    writeln!(out, "MACRO {} {root} {slot} {:016x}", kind.token(), ls.hash).unwrap();
                }
            }
        }
        out
    }

    /// Parses a serialized log. Blank lines are ignored.
    pub fn from_text(text: &str) -> Result<ActionLog, LogParseError> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || LogParseError {
                line: i + 1,
                text: raw.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (step, hash_field) = match fields.as_slice() {
                ["E", j, sign, hash] => {
                    let j = j.parse().map_err(|_| bad())?;
                    let inverse = match *sign {
                        "+2" => false,
                        "-2" => true,
                        _ => return Err(bad()),
                    };
                    (Step::Even { j, inverse }, *hash)
                }
                ["MACRO", token, root, slot, hash] => {
                    let kind = MacroKind::from_token(token).ok_or_else(bad)?;
                    let root = root.parse().map_err(|_| bad())?;
                    let slot = slot.parse().map_err(|_| bad())?;
                    (Step::Macro { kind, root, slot }, *hash)
                }
                _ => return Err(bad()),
            };
            if hash_field.len() != 16 {
                return Err(bad());
            }
            let hash = u64::from_str_radix(hash_field, 16).map_err(|_| bad())?;
            steps.push(LoggedStep { step, hash });
        }
        Ok(ActionLog { steps })
    }

    /// Replays every step against `start`, checking each digest, and
    /// returns the final graph.
    pub fn replay(&self, start: &CellGraph) -> Result<CellGraph, ReplayError> {
        let mut g = start.clone();
        for (index, ls) in self.steps.iter().enumerate() {
            g = apply_step(&g, ls.step)?;
            let got = graph_hash(&g)?;
            if got != ls.hash {
                return Err(ReplayError::HashMismatch {
                    index,
                    want: ls.hash,
                    got,
                });
            }
        }
        Ok(g)
    }
}
