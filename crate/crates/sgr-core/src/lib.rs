//! Core model for centrally symmetric standard graphs.
//!
//! A standard graph is a plane tree with labeled directed edges and a fixed
//! set of rays to infinity, drawn so that the unbounded faces cut the plane
//! into sectors. The sectors carry labels `0..n` counterclockwise, a frame
//! marks some of them subdominant, and seven labeling laws pin down which
//! drawings are admissible. This crate provides the graph representation,
//! face and sector traversal, the validator, a text format, trimming and
//! canonical forms, central symmetry detection, junction structure along
//! dominant faces, and the ivy-form descriptor.

pub mod canonical;
pub mod faces;
pub mod format;
pub mod frame;
pub mod graph;
pub mod ivy;
pub mod metrics;
pub mod structures;
pub mod symmetry;
pub mod tree;
pub mod validate;

pub use canonical::{canonical_text, canonicalize, equals, trim, Canonical, CanonicalError};
pub use faces::{BoundedFace, Corner, FaceData, FaceError, UnboundedFace};
pub use format::{from_text, to_text, ParseError};
pub use frame::{FrameError, SectorFrame};
pub use graph::{CellGraph, Dart, Edge, EdgeId, RayId, StructureIssue, VertexId};
pub use ivy::{build_ivy, is_ivy, ivy_descriptor, Arm, IvyCenter, IvyDescriptor, IvyError};
pub use metrics::{bounded_face_count, root_metric};
pub use structures::{j_junction, j_path, JPath, Junction, JunctionError, StructureKind};
pub use symmetry::{
    center_type, central_involution, is_centrally_symmetric, CenterTag, CenterType,
};
pub use tree::{TreeLink, TreeView};
pub use validate::{validate, ValidationReport, Violation};
