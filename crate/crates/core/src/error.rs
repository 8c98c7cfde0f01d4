use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} is not in the ground set")]
    InvalidElement(u32),

    #[error("element {element} is not in the interval [{first},{last}]")]
    NotInInterval { element: u32, first: u32, last: u32 },

    #[error("the empty set has no induced cyclic order")]
    EmptySubset,

    #[error("ground set must be nonempty")]
    EmptyGroundSet,

    #[error("operation requires at least one interval")]
    NoIntervals,

    #[error("presentation is not an antichain")]
    NotAntichain,

    #[error("presentation violates condition (C): interval [{inner_first},{inner_last}] is contained in [{outer_first},{outer_last}] but holds neither endpoint")]
    ConditionCViolated {
        inner_first: u32,
        inner_last: u32,
        outer_first: u32,
        outer_last: u32,
    },

    #[error("intervals containing element {0} are not consecutive in the induced interval cycle")]
    NonConsecutiveBlock(u32),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("{0:?} is not a basis")]
    NotABasis(Vec<u32>),

    #[error("start index {index} is out of range 1..={k}")]
    StartIndexOutOfRange { index: usize, k: u32 },

    #[error("sets X and Y must partition a suffix of the ground set")]
    NotASuffixPartition,

    #[error("ground set of size {n} exceeds the brute-force guard ({guard})")]
    ResourceGuard { n: u32, guard: u32 },

    #[error("malformed computation graph: {0}")]
    MalformedGraph(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
