//! Rewrites acting on standard graphs: the even squared generators, the
//! composite ivy-form moves built from them, and a replayable record of
//! applied moves.

pub mod action;
pub mod log;
pub mod macros;

pub use action::{even_action_sq, ActionError};
pub use log::{apply_step, graph_hash, ActionLog, LoggedStep, ReplayError, Step};
pub use macros::{apply_macro, MacroError, MacroKind};
