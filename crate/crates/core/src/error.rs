use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by group, digraph and construction operations.
///
/// Exceeding a configured search bound is always reported through
/// [`Error::BoundExceeded`] or [`Error::NodeLimit`], never by returning a
/// partial answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    Parse(String),
    #[error("point {point} appears more than once in cycle notation")]
    RepeatedPoint { point: usize },
    #[error("point {point} is outside the domain of degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: String,
        actual: String,
    },
    #[error("search node limit of {limit} exhausted")]
    NodeLimit { limit: u64 },
    #[error("not contained: {0}")]
    NotContained(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("arcs {0}->{1} and {1}->{0} both present")]
    SymmetricPair(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid coset digraph data: {0}")]
    InvalidSpec(String),
    #[error("generator {generator} maps arc {from}->{to} to a non-arc")]
    NotAutomorphism {
        generator: usize,
        from: usize,
        to: usize,
    },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument must be positive")]
    Zero,
    #[error("input format: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn bound(what: &'static str, limit: impl ToString, actual: impl ToString) -> Self {
        Error::BoundExceeded {
            what,
            limit: limit.to_string(),
            actual: actual.to_string(),
        }
    }
}
