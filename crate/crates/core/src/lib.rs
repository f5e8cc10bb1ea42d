//! Daisy cubes and partial cubes: recognition by the Djoković–Winkler
//! relation, proper labelling, ≤-expansions and rooted daisy graphs.

mod antichain;

pub mod bitstring;
pub mod error;
pub mod expansion;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod labelling;
pub mod oracle;
pub mod rooted;
pub mod theta;

pub use bitstring::BitString;
pub use error::{Error, Result};
pub use generators::LabelledGraph;
pub use graph::{DistanceMatrix, Graph};
