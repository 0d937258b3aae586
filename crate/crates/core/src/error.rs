use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Each variant maps to a stable machine-readable name via [`Error::kind`],
/// which the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {index} is the zero vector")]
    ZeroVector { index: usize },

    #[error("generator {index} duplicates generator {first}")]
    DuplicateVector { index: usize, first: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error(
        "generators do not generate Z^{dim} as a group (gcd of maximal minors is {minor_gcd})"
    )]
    NotGenerating { dim: usize, minor_gcd: String },

    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("operation requires a non-empty point set")]
    EmptySet,

    #[error("point sets are not disjoint")]
    NotDisjoint,

    #[error("no exact optimum recorded for size {size}")]
    SizeNotInTable { size: usize },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("generators span a subspace of dimension {rank} < {dim}")]
    DegenerateDimension { rank: usize, dim: usize },

    #[error("convex hull is degenerate")]
    DegenerateHull,

    #[error("Ehrhart leading coefficient {leading} does not match zonotope volume {volume}")]
    LeadingCoefficientMismatch { leading: String, volume: String },

    #[error("search exceeded its node budget of {budget}")]
    BudgetExceeded { budget: u64 },

    #[error("exhaustive enumeration infeasible: {reason}")]
    InfeasibleEnumeration { reason: String },

    #[error("edge boundary {edge_boundary} exceeds telescoped growth {telescoped} at t = {t}")]
    UpperBoundChainViolated {
        t: u64,
        edge_boundary: u64,
        telescoped: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable variant name used in machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroVector { .. } => "ZeroVector",
            Error::DuplicateVector { .. } => "DuplicateVector",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotGenerating { .. } => "NotGenerating",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::EmptySet => "EmptySet",
            Error::NotDisjoint => "NotDisjoint",
            Error::SizeNotInTable { .. } => "SizeNotInTable",
            Error::Overflow => "Overflow",
            Error::DegenerateDimension { .. } => "DegenerateDimension",
            Error::DegenerateHull => "DegenerateHull",
            Error::LeadingCoefficientMismatch { .. } => "LeadingCoefficientMismatch",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InfeasibleEnumeration { .. } => "InfeasibleEnumeration",
            Error::UpperBoundChainViolated { .. } => "UpperBoundChainViolated",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
