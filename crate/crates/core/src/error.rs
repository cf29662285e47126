use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("complex is not pure: {0}")]
    NonPure(String),
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("complex is not orientable: {0}")]
    NonOrientable(String),
    #[error("filtration has a codimension-one stratum: {0}")]
    CodimOneStratum(String),
    #[error("frontier condition violated between strata {lower} and {upper}")]
    FrontierViolation { lower: usize, upper: usize },
    #[error("regular part is not dense: {0}")]
    NotDense(String),
    #[error("stratum {0} contains no vertex")]
    NoVertexInStratum(usize),
    #[error("link of stratum {stratum} has dimension {found}, expected {expected}")]
    LinkDimensionMismatch { stratum: usize, expected: usize, found: String },
    #[error("links of stratum {0} differ between sample vertices")]
    LinkInconsistent(usize),
    #[error("stratum {0} is regular; links exist only for singular strata")]
    InvalidStratum(usize),
    #[error("skeleton {0} is not a full subcomplex; subdivide first")]
    SkeletonNotFull(usize),
    #[error("unsupported stratification: {0}")]
    UnsupportedDepth(String),
    #[error("dimension {0} is not divisible by four")]
    WrongDimensionParity(usize),
    #[error("input is not a closed manifold: {0}")]
    NotManifoldInput(String),
    #[error("invalid resolution tree: {0}")]
    InvalidTree(String),
    #[error("invalid perversity: {0}")]
    InvalidPerversity(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "MalformedInput",
            Error::NonPure(_) => "NonPure",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::NonOrientable(_) => "NonOrientable",
            Error::CodimOneStratum(_) => "CodimOneStratum",
            Error::FrontierViolation { .. } => "FrontierViolation",
            Error::NotDense(_) => "NotDense",
            Error::NoVertexInStratum(_) => "NoVertexInStratum",
            Error::LinkDimensionMismatch { .. } => "LinkDimensionMismatch",
            Error::LinkInconsistent(_) => "LinkInconsistent",
            Error::InvalidStratum(_) => "InvalidStratum",
            Error::SkeletonNotFull(_) => "SkeletonNotFull",
            Error::UnsupportedDepth(_) => "UnsupportedDepth",
            Error::WrongDimensionParity(_) => "WrongDimensionParity",
            Error::NotManifoldInput(_) => "NotManifoldInput",
            Error::InvalidTree(_) => "InvalidTree",
            Error::InvalidPerversity(_) => "InvalidPerversity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
