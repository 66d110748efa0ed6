//! Spectral laboratory for line graphs and total graphs.
//!
//! The crate builds the line graph `L(G)` and total graph `T(G)` of a simple
//! graph and checks a catalogue of spread bounds against the spectra of its
//! adjacency and Laplacian-type matrices. The [`harness`] module sweeps every
//! labeled graph up to eight vertices and aggregates the results into a
//! deterministic [`VerificationLedger`].
//!
//! ```
//! use spreadlab_core::{graph::Graph, spectra::spectral_summary};
//!
//! let k4 = Graph::from_graph6("C~").unwrap();
//! let summary = spectral_summary(&k4).unwrap();
//! assert!((summary.spread - 4.0).abs() < 1e-9);
//! assert!((summary.line_spread.unwrap() - 6.0).abs() < 1e-9);
//! ```

pub mod bounds;
pub mod error;
pub mod format;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod quotient;
pub mod spectra;
pub mod transforms;

pub use bounds::{Analysis, BoundId, BoundReport, Relation};
pub use error::{Error, Result};
pub use graph::{ConnectivityProfile, DegreeProfile, Graph};
pub use harness::{SweepConfig, VerificationLedger};
pub use linalg::{IntMatrix, SymMatrix};
pub use quotient::{Partition, QuotientMatrix};
pub use spectra::{SpectralSummary, Spectrum};
pub use transforms::{EdgeIndex, IncidenceMatrix};

/// Absolute tolerance for grouping eigenvalues and checking spectral identities.
pub const EIGEN_TOL: f64 = 1e-7;

/// Slack below which a bound counts as tight, and below `-SLACK_TOL` as violated.
pub const SLACK_TOL: f64 = 1e-6;

/// Relative residual target of the eigensolver.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Minimum margin for the strict inequalities of edge-addition monotonicity.
pub const STRICT_MARGIN: f64 = 1e-9;
