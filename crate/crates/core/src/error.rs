use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("metric undefined: {0}")]
    UndefinedMetric(&'static str),
    #[error("estimator outside its domain: {0}")]
    EstimatorDomain(&'static str),
    #[error("power-law fit needs at least {needed} distinct degrees >= k_min, found {found}")]
    FitDomain { needed: usize, found: usize },
    #[error("vertex {0} is isolated; normalized Laplacian undefined")]
    IsolatedVertex(usize),
    #[error("eigensolver did not converge within {0} iterations")]
    EigensolverFailure(usize),
    #[error("matrix is indefinite: eigenvalue {0} below tolerance")]
    Indefinite(f64),
    #[error("matrix order mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("permutation is not a bijection on 0..{0}")]
    InvalidPermutation(usize),
    #[error("eigenvalue bound violated: {0}")]
    BoundViolation(String),
}
