use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a bijection on 0..{degree}: {reason}")]
    NotBijective { degree: usize, reason: String },
    #[error("cannot parse permutation {input:?}: {reason}")]
    PermutationSyntax { input: String, reason: String },

    #[error("group order must be at least 1")]
    OrderZero,
    #[error("multiplication table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("map is not a group automorphism")]
    NotAnAutomorphism,
    #[error("weight group is not abelian")]
    NotAbelian,
    #[error("weight matrix has a non-identity entry on the diagonal at vertex {0}")]
    DiagonalNonzero(usize),

    #[error("table is not square")]
    NotSquare,
    #[error("Q1 violation: s_{0}({0}) != {0}")]
    Q1Violation(usize),
    #[error("Q2 violation: row s_{0} is not a permutation")]
    Q2Violation(usize),
    #[error("Q3 violation: s_{0}(s_{1}({2})) != s_{{s_{0}({1})}}(s_{0}({2}))")]
    Q3Violation(usize, usize, usize),
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("automorphism search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),

    #[error("closure needs a degree of at least 1")]
    EmptyDegree,
    #[error("generator of degree {found} in a closure of degree {expected}")]
    MixedDegrees { expected: usize, found: usize },
    #[error("cap must be at least 1")]
    InvalidCap,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown type tag {0:?}")]
    UnknownType(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("at {path}: {source}")]
    AtPath { path: String, source: Box<Error> },
}

impl Error {
    /// The innermost error, with any spec path context stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtPath { source, .. } => source.root(),
            e => e,
        }
    }

    pub(crate) fn at(self, path: &str) -> Error {
        match self {
            // already tagged with the full path from the root
            Error::AtPath { .. } => self,
            e => Error::AtPath {
                path: path.to_string(),
                source: Box::new(e),
            },
        }
    }
}
