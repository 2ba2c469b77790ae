use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("partition {partition} has {parts} nonzero parts, at most {max} allowed")]
    TooManyParts {
        partition: Partition,
        parts: usize,
        max: usize,
    },

    #[error("invalid matrix context m={m}, n={n}: need m >= n >= 1")]
    InvalidContext { m: usize, n: usize },

    #[error("{name}={value} is outside the admissible range {lo}..={hi}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("weight has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("ideals live in different contexts ({0} vs {1})")]
    ContextMismatch(String, String),

    #[error("cannot attach {a} and {b} to a {r}x{s} rectangle: need a to have at most {r} parts and b_1 <= {s}")]
    AttachPrecondition {
        r: usize,
        s: usize,
        a: Partition,
        b: Partition,
    },

    #[error("degree window {lo}..{hi} is empty")]
    EmptyWindow { lo: i64, hi: i64 },

    #[error("the first ideal does not contain the second")]
    NotContained,

    #[error("{what} is not defined for the {which} ideal")]
    DegenerateIdeal {
        what: &'static str,
        which: &'static str,
    },

    #[error("pair (z={z}, l={l}) violates z_1 = ... = z_(l+1); ideal generators: {gens}")]
    Hypothesis {
        z: Partition,
        l: usize,
        gens: String,
    },

    #[error("Weyl product for {0:?} is not an integer")]
    NonIntegral(Vec<i64>),

    #[error("unbounded query: {0}")]
    Unbounded(String),
}

impl Error {
    /// Stable machine-readable tag, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotDecreasing(_) => "not_decreasing",
            Error::TooManyParts { .. } => "too_many_parts",
            Error::InvalidContext { .. } => "invalid_context",
            Error::OutOfRange { .. } => "out_of_range",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::ContextMismatch(..) => "context_mismatch",
            Error::AttachPrecondition { .. } => "attach_precondition",
            Error::EmptyWindow { .. } => "empty_window",
            Error::NotContained => "not_contained",
            Error::DegenerateIdeal { .. } => "degenerate_ideal",
            Error::Hypothesis { .. } => "hypothesis_violation",
            Error::NonIntegral(_) => "non_integral",
            Error::Unbounded(_) => "unbounded_query",
        }
    }
}

pub(crate) fn check_range(name: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            name,
            value: value as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    Ok(())
}
