//! Graph models, topology metrics and the normalized-Laplacian system entropy.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, experiment
//! runners and the command-line tool live in the `netentropy` crate.
//!
//! ```
//! use netentropy_core::{generators, spectral};
//!
//! let g = generators::gen_ring_lattice(20, 4).unwrap();
//! let summary = spectral::system_entropy(&g, 0.5, 1e-9 * 20.0).unwrap();
//! assert!(summary.entropy > 0.0);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use generators::{Family, GeneratorSpec};
pub use graph::{ComponentLabeling, Graph, VertexId};
pub use metrics::{DegreeDistribution, MetricReport};
pub use spectral::{SpectralSummary, SymMatrix};
