//! Distance and similarity measures between hesitant fuzzy sets, and an
//! ideal-alternative method for multi-attribute ranking built on them.
//!
//! A hesitant fuzzy set attaches to each universe element a small set of
//! candidate membership grades instead of a single one. Comparing two such
//! sets starts by extending each pair of grade lists to a common length
//! (repeating the pessimistic minimum or the optimistic maximum), after
//! which a family of Minkowski-style distances, their similarity duals, and
//! set-theoretic min/max ratios apply. Continuous counterparts integrate the
//! same per-element quantities over a sampled interval.
//!
//! Everything here is a pure function over immutable values and is safe to
//! call concurrently.

mod continuous;
mod distance;
mod element;
mod error;
mod madm;
mod set;
mod similarity;
mod weights;

pub use continuous::{
    continuous_distance, continuous_similarity, ContinuousDistanceVariant,
    ContinuousSimilarityVariant, SampledHesitantFunction, SampledWeightFunction,
    WEIGHT_INTEGRAL_TOLERANCE,
};
pub use distance::{distance, exponential_distance, max_distance, DistanceFamily};
pub use element::{Comparison, ExtensionPolicy, HesitantElement};
pub use error::HfsError;
pub use madm::{ideal_sets, relative_similarity, DecisionProblem, RankingResult};
pub use set::HesitantSet;
pub use similarity::{
    pooled_set_theoretic_similarity, set_theoretic_similarity, similarity,
    similarity_from_distance, SimilaritySpec, SimilarityTransform,
};
pub use weights::{WeightVector, WEIGHT_SUM_TOLERANCE};
