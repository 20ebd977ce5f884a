use thiserror::Error;

/// Errors raised by the library. Verification *failures* are not errors;
/// they are reported as data (see [`crate::shelling::ShellingReport`] and
/// [`crate::checks::Report`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{value} is not a swap of {perm}")]
    InvalidSwap { perm: String, value: usize },

    #[error("labeling is not order-preserving: {0}")]
    InvalidLabeling(String),

    #[error("invalid constraint set: {0}")]
    InvalidConstraints(String),

    #[error("no alternating permutation contains the constraint set")]
    InfeasibleConstraints,

    #[error("invalid shelling order: {0}")]
    InvalidOrder(String),

    #[error("order is not a shelling (first failure at position {position})")]
    NotAShelling { position: usize },

    #[error("swap set of {perm} is not contained in {sizes}")]
    OutsideDomain { perm: String, sizes: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("n = {n} exceeds the guard for {what} (limit {limit})")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
