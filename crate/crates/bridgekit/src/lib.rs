//! Batch pipeline over Gauss code tables: ingest, virtualization,
//! deduplication, parallel invariant computation, bridge-number labels and
//! dataset export.

pub mod checkpoint;
mod error;
pub mod ingest;
pub mod pipeline;
pub mod record;
pub mod synth;
pub mod tables;

pub use error::{PipelineError, Result};
pub use pipeline::{run, DedupMode, RunConfig, Summary};
pub use record::{KnotRecord, Selection};
pub use tables::{load_structure, NamedStructure};
