use thiserror::Error;

/// Errors produced by group constructors and engine operations.
#[derive(Debug, Error)]
pub enum GroupError {
    /// A construction would exceed the configured order cap.
    #[error("order {requested} exceeds the configured cap of {cap}")]
    Capacity { requested: usize, cap: usize },

    /// A constructor was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Caller-supplied data violated a documented contract
    /// (e.g. a non-homomorphic action, a non-associative table).
    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal invariant failed; indicates a bug in the engine.
    #[error("engine failure: {0}")]
    Engine(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
