use thiserror::Error;

/// Errors raised by constructors and measure evaluations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HfsError {
    #[error("hesitant element requires at least one membership grade")]
    EmptyElement,

    #[error("membership grade {0} is outside [0, 1]")]
    GradeOutOfRange(f64),

    #[error("hesitant set requires at least one universe element")]
    EmptySet,

    #[error("duplicate universe element `{0}`")]
    DuplicateElement(String),

    #[error("sets are defined on different universes")]
    UniverseMismatch,

    #[error("invalid measure specification: {0}")]
    InvalidSpec(String),

    #[error("weight {0} is outside [0, 1]")]
    WeightOutOfRange(f64),

    #[error("weights sum to {0}, expected 1")]
    WeightSum(f64),

    #[error("sampled functions are defined on different node grids")]
    GridMismatch,

    #[error("weight function integrates to {0}, expected 1")]
    WeightNotNormalized(f64),

    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),

    #[error("degenerate scores for alternative `{0}`: both ideal similarities are zero")]
    DegenerateScores(String),
}
