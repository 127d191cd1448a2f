//! Spectral bounds on the independence number of a graph.
//!
//! * [`graph`]: graphs, finite-field and random generators, girth, `C4`
//!   detection, exact independence number, clique covers.
//! * [`spectral`]: Hermitian weighted adjacency matrices, eigenvalues, inertia
//!   with an explicit zero band, spectral moments, walk-counted traces.
//! * [`scaling`]: total-support test with explicit violators, and symmetric
//!   Sinkhorn scaling.
//! * [`bounds`]: ratio and inertia bounds, moment inequalities, the recursive
//!   lower-bound certificate for `n≥0(A)`, explicit weightings, weight search.
//! * [`experiment`]: the polarity-graph gap experiment.
//! * [`io`]: edge-list, weighting and spectrum text formats.

pub mod bounds;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod scaling;
pub mod seed;
pub mod spectral;

pub use bounds::{
    certify_inertia, ratio_bound, weight_search, BoundReport, CertificateNode, CertificateResult,
    RatioBound,
};
pub use error::{Error, Result};
pub use graph::{CliqueCover, Graph};
pub use scaling::{ScalingOutcome, SupportMatrix, Violator};
pub use spectral::{HermitianWeighting, InertiaTriple, MomentVector, Spectrum, WeightLaw};
