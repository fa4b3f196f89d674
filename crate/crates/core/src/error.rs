use thiserror::Error;

/// Errors produced by the lifting machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid transposition ({0} {1}) for degree {2}")]
    InvalidTransposition(usize, usize, usize),

    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),

    #[error("degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),

    #[error("at least 2 branch values are required, got {0}")]
    TooFewBranchValues(usize),

    #[error("labels do not generate a transitive subgroup of S_{0} (disconnected cover)")]
    NotTransitive(usize),

    #[error("strand-count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no canonical tuple of length {n} for degree {d} matches the total monodromy")]
    NoCanonicalLabel { n: usize, d: usize },

    #[error("labels {found} do not match expected {expected}")]
    LabelMismatch { expected: String, found: String },

    #[error("invalid arc word: {0}")]
    InvalidWord(String),

    #[error("rewrite failed: {0}")]
    Rewrite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeMismatch(..) => "degree_mismatch",
            Error::InvalidTransposition(..) => "invalid_transposition",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::DegreeTooSmall(_) => "degree_too_small",
            Error::TooFewBranchValues(_) => "too_few_branch_values",
            Error::NotTransitive(_) => "not_transitive",
            Error::StrandMismatch(..) => "strand_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::Parse(_) => "parse",
            Error::NoCanonicalLabel { .. } => "no_canonical_label",
            Error::LabelMismatch { .. } => "label_mismatch",
            Error::InvalidWord(_) => "invalid_word",
            Error::Rewrite(_) => "rewrite",
        }
    }
}
