use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{q} is not prime")]
    NotPrime { q: u64 },

    #[error("Paley graphs need q ≡ 1 (mod 4), got q = {q}")]
    PaleyModulus { q: u64 },

    #[error("exact solver limit exceeded: n = {n} > limit {limit}")]
    ExactSolverLimit { n: usize, limit: usize },

    #[error("graph contains a 4-cycle {cycle:?}")]
    ContainsC4 { cycle: [usize; 4] },

    #[error("cherry formula invalid: host graph contains the 4-cycle {cycle:?}")]
    CherryFormulaInvalid { cycle: [usize; 4] },

    #[error("matrix is not Hermitian: |A[{i}][{j}] - conj(A[{j}][{i}])| = {deviation:e}")]
    NotHermitian { i: usize, j: usize, deviation: f64 },

    #[error("weighting entry ({i}, {j}) is not supported by the host graph")]
    OffSupport { i: usize, j: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix is numerically singular (condition estimate {condition:e})")]
    Singular { condition: f64 },

    #[error("eigensolver residual {residual:e} exceeds {bound:e}")]
    EigenResidual { residual: f64, bound: f64 },

    #[error("ratio bound requires equal row sums (spread {spread:e})")]
    UnequalRowSums { spread: f64 },

    #[error("ratio bound requires a positive largest eigenvalue, got {lambda_max}")]
    NonPositiveLambdaMax { lambda_max: f64 },

    #[error("sinkhorn did not converge after {iterations} iterations (worst row-sum deviation {deviation:e})")]
    SinkhornDiverged { iterations: usize, deviation: f64 },

    #[error("matrix lacks total support; violating pair has |S| = {s}, |T| = {t}")]
    NoTotalSupport { s: usize, t: usize },

    #[error("moment-inconsistent input: {0}")]
    MomentInconsistent(String),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("component {component:?} is neither complete nor complete bipartite")]
    UnsupportedComponent { component: Vec<usize> },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}
