//! Discrete similarity measures between hesitant fuzzy sets: the
//! transform-of-distance construction, the geometric families, and the
//! set-theoretic min/max-ratio families.

use crate::distance::{
    common_lengths, distance, max_distance, outer_rooted_weighted, pair_deviations,
    DistanceFamily,
};
use crate::element::{ExtensionPolicy, HesitantElement};
use crate::error::HfsError;
use crate::set::HesitantSet;
use crate::weights::WeightVector;

/// A strictly decreasing map used to turn a distance into a similarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SimilarityTransform {
    /// `f(x) = 1 - x`
    #[default]
    Linear,
    /// `f(x) = e^(-x)`
    Exponential,
    /// `f(x) = 1 / (1 + x)`
    Reciprocal,
}

impl SimilarityTransform {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Linear => "linear",
            Self::Exponential => "exponential",
            Self::Reciprocal => "reciprocal",
        }
    }

    fn apply(&self, x: f64) -> f64 {
        match self {
            Self::Linear => 1.0 - x,
            Self::Exponential => (-x).exp(),
            Self::Reciprocal => 1.0 / (1.0 + x),
        }
    }
}

/// Selects one of the similarity measures. Families carrying `weights: None`
/// weigh every universe element equally.
#[derive(Debug, Clone, PartialEq)]
pub enum SimilaritySpec {
    /// `(f(d) - f(d_max)) / (f(0) - f(d_max))` over any base distance.
    FromDistance {
        base: DistanceFamily,
        transform: SimilarityTransform,
    },
    /// One minus the outer-rooted weighted power-mean deviation
    /// (the dual of the generalized distance).
    GeometricOuter { p: f64, weights: Option<WeightVector> },
    /// One minus the weighted sum of per-element power-mean roots
    /// (the dual of the type-2 generalized distance).
    GeometricInner { p: f64, weights: Option<WeightVector> },
    /// One minus the weighted sum of per-element power-sum roots, normalized
    /// by the mean of `n^(1/p)` over the universe. Skewed weights can push
    /// the raw value outside `[0, 1]`; see [`similarity`].
    GeometricSum { p: f64, weights: Option<WeightVector> },
    /// `GeometricSum` without the inner `1/p` root: the per-element term is
    /// the raw power sum `sum |a-b|^p`. This is the variant behind the
    /// bundled reference tables (see the CLI's `reproduce-paper` command);
    /// for `p > 1` it can leave `[0, 1]` even with uniform weights.
    GeometricSumUnrooted { p: f64, weights: Option<WeightVector> },
    /// Weighted mean over the universe of per-element ratios
    /// `sum min(a, b) / sum max(a, b)`.
    SetTheoretic { weights: Option<WeightVector> },
    /// Ratio of the weighted min-grade total to the weighted max-grade total,
    /// pooled over the whole universe before dividing. Also behind the
    /// bundled reference tables.
    SetTheoreticPooled { weights: Option<WeightVector> },
}

impl SimilaritySpec {
    /// The kebab-case name used in diagnostics and by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Self::FromDistance { .. } => "from-distance",
            Self::GeometricOuter { .. } => "geometric-outer",
            Self::GeometricInner { .. } => "geometric-inner",
            Self::GeometricSum { .. } => "geometric-sum",
            Self::GeometricSumUnrooted { .. } => "geometric-sum-unrooted",
            Self::SetTheoretic { .. } => "set-theoretic",
            Self::SetTheoreticPooled { .. } => "set-theoretic-pooled",
        }
    }

    /// The exponent used by the spec, where one applies.
    pub fn p(&self) -> Option<f64> {
        match self {
            Self::FromDistance { base, .. } => Some(base.p()),
            Self::GeometricOuter { p, .. }
            | Self::GeometricInner { p, .. }
            | Self::GeometricSum { p, .. }
            | Self::GeometricSumUnrooted { p, .. } => Some(*p),
            Self::SetTheoretic { .. } | Self::SetTheoreticPooled { .. } => None,
        }
    }

    /// Replaces the spec's weights. For `FromDistance` the weights land in
    /// the base family when it is a weighted one and are ignored otherwise.
    pub fn with_weights(&self, w: WeightVector) -> Self {
        match self.clone() {
            Self::FromDistance { base, transform } => {
                let base = match base {
                    DistanceFamily::Type2Weighted { p, .. } => {
                        DistanceFamily::Type2Weighted { p, weights: w }
                    }
                    DistanceFamily::LpWeighted { p, .. } => {
                        DistanceFamily::LpWeighted { p, weights: w }
                    }
                    other => other,
                };
                Self::FromDistance { base, transform }
            }
            Self::GeometricOuter { p, .. } => Self::GeometricOuter { p, weights: Some(w) },
            Self::GeometricInner { p, .. } => Self::GeometricInner { p, weights: Some(w) },
            Self::GeometricSum { p, .. } => Self::GeometricSum { p, weights: Some(w) },
            Self::GeometricSumUnrooted { p, .. } => {
                Self::GeometricSumUnrooted { p, weights: Some(w) }
            }
            Self::SetTheoretic { .. } => Self::SetTheoretic { weights: Some(w) },
            Self::SetTheoreticPooled { .. } => Self::SetTheoreticPooled { weights: Some(w) },
        }
    }

    fn validate(&self, universe_size: usize) -> Result<(), HfsError> {
        if let Some(p) = self.p() {
            if !p.is_finite() || p <= 0.0 {
                return Err(HfsError::InvalidSpec(format!(
                    "{} requires p > 0, got {p}",
                    self.name()
                )));
            }
        }
        if let Some(w) = self.spec_weights() {
            if w.len() != universe_size {
                return Err(HfsError::InvalidSpec(format!(
                    "{} carries {} weights for a universe of {} elements",
                    self.name(),
                    w.len(),
                    universe_size
                )));
            }
        }
        Ok(())
    }

    fn spec_weights(&self) -> Option<&WeightVector> {
        match self {
            Self::FromDistance { base, .. } => base.weights(),
            Self::GeometricOuter { weights, .. }
            | Self::GeometricInner { weights, .. }
            | Self::GeometricSum { weights, .. }
            | Self::GeometricSumUnrooted { weights, .. }
            | Self::SetTheoretic { weights }
            | Self::SetTheoreticPooled { weights } => weights.as_ref(),
        }
    }
}

/// `(f(d(A,B)) - f(d_max)) / (f(0) - f(d_max))` for a strictly decreasing
/// transform `f`; 1 exactly when the sets are extension-equal, 0 exactly
/// when the base distance attains its supremum.
pub fn similarity_from_distance(
    a: &HesitantSet,
    b: &HesitantSet,
    base: &DistanceFamily,
    transform: SimilarityTransform,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    let d = distance(a, b, base, policy)?;
    let d_max = max_distance(base, &common_lengths(a, b)?)?;
    Ok((transform.apply(d) - transform.apply(d_max))
        / (transform.apply(0.0) - transform.apply(d_max)))
}

/// Weighted mean of per-element `sum min / sum max` ratios after extension.
/// An all-zero pair of elements counts as a ratio of 1 (they are equal).
pub fn set_theoretic_similarity(
    a: &HesitantSet,
    b: &HesitantSet,
    weights: Option<&WeightVector>,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    let factors = effective_weights(weights, a.len())?;
    let pairs = a.zipped(b)?;
    let mut total = 0.0;
    for ((x, y), w) in pairs.into_iter().zip(factors.iter()) {
        total += w * min_max_ratio(x, y, policy);
    }
    Ok(total)
}

/// Pooled variant: one ratio of the weighted min-grade total to the weighted
/// max-grade total over the whole universe.
pub fn pooled_set_theoretic_similarity(
    a: &HesitantSet,
    b: &HesitantSet,
    weights: Option<&WeightVector>,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    let factors = effective_weights(weights, a.len())?;
    let pairs = a.zipped(b)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for ((x, y), w) in pairs.into_iter().zip(factors.iter()) {
        let (lo, hi) = min_max_sums(x, y, policy);
        num += w * lo;
        den += w * hi;
    }
    if den == 0.0 {
        // both sets are all-zero, hence extension-equal
        return Ok(1.0);
    }
    Ok(num / den)
}

/// Evaluates the selected similarity between two sets on the same universe.
///
/// `geometric-sum` and `geometric-sum-unrooted` may produce raw values
/// outside `[0, 1]` (skewed weights concentrate mass on long elements); such
/// results are returned unclamped and reported through `log::warn!`.
pub fn similarity(
    a: &HesitantSet,
    b: &HesitantSet,
    spec: &SimilaritySpec,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    spec.validate(a.len())?;
    match spec {
        SimilaritySpec::FromDistance { base, transform } => {
            similarity_from_distance(a, b, base, *transform, policy)
        }
        SimilaritySpec::GeometricOuter { p, weights } => match weights {
            None => Ok(1.0 - distance(a, b, &DistanceFamily::Generalized { p: *p }, policy)?),
            Some(w) => {
                let pairs = pair_deviations(a, b, policy)?;
                Ok(1.0 - outer_rooted_weighted(&pairs, w.as_slice(), *p))
            }
        },
        SimilaritySpec::GeometricInner { p, weights } => match weights {
            None => Ok(1.0 - distance(a, b, &DistanceFamily::Type2Generalized { p: *p }, policy)?),
            Some(w) => Ok(1.0
                - distance(
                    a,
                    b,
                    &DistanceFamily::Type2Weighted {
                        p: *p,
                        weights: w.clone(),
                    },
                    policy,
                )?),
        },
        SimilaritySpec::GeometricSum { p, weights } => {
            let value = geometric_sum(a, b, *p, weights.as_ref(), policy, true)?;
            Ok(warn_outside_unit(spec.name(), value))
        }
        SimilaritySpec::GeometricSumUnrooted { p, weights } => {
            let value = geometric_sum(a, b, *p, weights.as_ref(), policy, false)?;
            Ok(warn_outside_unit(spec.name(), value))
        }
        SimilaritySpec::SetTheoretic { weights } => {
            set_theoretic_similarity(a, b, weights.as_ref(), policy)
        }
        SimilaritySpec::SetTheoreticPooled { weights } => {
            pooled_set_theoretic_similarity(a, b, weights.as_ref(), policy)
        }
    }
}

/// `1 - (m / sum n_i^(1/p)) * sum_i w_i t_i` where `t_i` is the per-element
/// power-sum root (`rooted`) or the raw power sum.
fn geometric_sum(
    a: &HesitantSet,
    b: &HesitantSet,
    p: f64,
    weights: Option<&WeightVector>,
    policy: ExtensionPolicy,
    rooted: bool,
) -> Result<f64, HfsError> {
    let factors = effective_weights(weights, a.len())?;
    let pairs = pair_deviations(a, b, policy)?;
    let m = pairs.len() as f64;
    let norm: f64 = pairs
        .iter()
        .map(|pd| (pd.len() as f64).powf(1.0 / p))
        .sum();
    let total: f64 = pairs
        .iter()
        .zip(factors.iter())
        .map(|(pd, w)| {
            let term = if rooted {
                pd.power_sum_root(p)
            } else {
                pd.power_sum(p)
            };
            w * term
        })
        .sum();
    Ok(1.0 - (m / norm) * total)
}

fn effective_weights(
    weights: Option<&WeightVector>,
    m: usize,
) -> Result<Vec<f64>, HfsError> {
    match weights {
        Some(w) => {
            if w.len() != m {
                return Err(HfsError::InvalidSpec(format!(
                    "{} weights for a universe of {m} elements",
                    w.len()
                )));
            }
            Ok(w.as_slice().to_vec())
        }
        None => Ok(vec![1.0 / m as f64; m]),
    }
}

fn warn_outside_unit(name: &str, value: f64) -> f64 {
    if !(-1e-12..=1.0 + 1e-12).contains(&value) {
        log::warn!("{name} similarity {value} falls outside [0, 1]");
    }
    value
}

pub(crate) fn min_max_sums(
    a: &HesitantElement,
    b: &HesitantElement,
    policy: ExtensionPolicy,
) -> (f64, f64) {
    let n = a.len().max(b.len());
    let va = a.extended_view(n, policy);
    let vb = b.extended_view(n, policy);
    let mut lo = 0.0;
    let mut hi = 0.0;
    for (x, y) in va.iter().zip(vb.iter()) {
        lo += x.min(y);
        hi += x.max(y);
    }
    (lo, hi)
}

fn min_max_ratio(a: &HesitantElement, b: &HesitantElement, policy: ExtensionPolicy) -> f64 {
    let (lo, hi) = min_max_sums(a, b, policy);
    if hi == 0.0 {
        1.0
    } else {
        lo / hi
    }
}
