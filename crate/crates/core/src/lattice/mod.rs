//! Heavy-hexagon layouts and the matching code defined on them.
//!
//! Vertex qubits carry the code; each edge qubit is the auxiliary for the
//! link operator on its two vertices. Plaquettes are the complete hexagonal
//! faces, and their measurement is split into shifts so that no two
//! plaquettes measured together disturb a common `z` link.

mod code;
mod layout;
mod links;
mod plaquette;

pub use code::{boundary_operators, incident_z_links, schedule_shifts, CodeSpec};
pub use layout::{
    build_heavy_hex_layout, LayoutDescriptor, LayoutSpec, QubitSite, Role, BUILTIN_LAYOUTS,
};
pub use links::{classify_links, Link, LinkClassification, LinkType};
pub use plaquette::{
    build_plaquettes, complete_truncated_z_links, Group, Plaquette, PlaquetteSet, PLAQUETTE_PAULIS,
};

#[derive(Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("unknown layout `{0}` (expected falcon-27, hummingbird-65, hex-RxC or a layout file)")]
    UnknownLayout(String),
    #[error("generator needs rows >= 1 and cols >= 1, got {rows}x{cols}")]
    InvalidGenerator { rows: i64, cols: i64 },
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("edge qubit {0} has no vertex neighbour")]
    IsolatedEdgeQubit(usize),
    #[error("vertical edges {first} and {second} imply opposite orientations")]
    InconsistentOrientation { first: usize, second: usize },
    #[error("code invariant violated: {0}")]
    InvariantViolated(String),
    #[error("cannot read layout file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed layout JSON: {0}")]
    Json(#[from] serde_json::Error),
}
