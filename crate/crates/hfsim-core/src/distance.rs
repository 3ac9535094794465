//! Discrete distance measures between hesitant fuzzy sets.
//!
//! All measures pair grades position by position after extending each pair
//! of elements to a common length. They differ along three axes: whether the
//! per-element power deviations are averaged (`1/n`) or merely summed before
//! the `1/p` root, whether the outer aggregation averages, sums, or weights
//! the per-element terms, and whether the root sits inside or outside that
//! outer aggregation.

use crate::element::{ExtensionPolicy, HesitantElement};
use crate::error::HfsError;
use crate::set::HesitantSet;
use crate::weights::WeightVector;

/// Selects one of the discrete distance measures.
#[derive(Debug, Clone, PartialEq)]
pub enum DistanceFamily {
    /// Universe average of per-element mean absolute deviations.
    Hamming,
    /// Outer square root of the universe-averaged mean squared deviation.
    Euclidean,
    /// Outer `1/p` root of the universe-averaged mean `p`-power deviation.
    Generalized { p: f64 },
    /// Universe average of per-element power-mean deviations
    /// `((1/n) sum |a-b|^p)^(1/p)`.
    Type2Generalized { p: f64 },
    /// `Type2Generalized` at `p = 2`.
    Type2Euclidean,
    /// Sum (not average) of per-element power-mean deviations; bounded by
    /// the universe size rather than 1.
    Type2Sum { p: f64 },
    /// Universe average of per-element power-sum roots
    /// `(sum |a-b|^p)^(1/p)`.
    InnerPowerMean { p: f64 },
    /// Sum of per-element power-sum roots.
    InnerPowerSum { p: f64 },
    /// The L_p form: `InnerPowerMean` restricted to `p >= 1`.
    Lp { p: f64 },
    /// Universe average of per-element maximum deviations; the `p -> inf`
    /// limit of `Lp`.
    HammingHausdorff,
    /// Weighted counterpart of `Type2Generalized`.
    Type2Weighted { p: f64, weights: WeightVector },
    /// Weighted counterpart of `Lp`.
    LpWeighted { p: f64, weights: WeightVector },
}

impl DistanceFamily {
    /// The kebab-case name used in diagnostics and by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Hamming => "hamming",
            Self::Euclidean => "euclidean",
            Self::Generalized { .. } => "generalized",
            Self::Type2Generalized { .. } => "type2-generalized",
            Self::Type2Euclidean => "type2-euclidean",
            Self::Type2Sum { .. } => "type2-sum",
            Self::InnerPowerMean { .. } => "inner-power-mean",
            Self::InnerPowerSum { .. } => "inner-power-sum",
            Self::Lp { .. } => "lp",
            Self::HammingHausdorff => "hamming-hausdorff",
            Self::Type2Weighted { .. } => "type2-weighted",
            Self::LpWeighted { .. } => "lp-weighted",
        }
    }

    /// The effective exponent of the family.
    pub fn p(&self) -> f64 {
        match self {
            Self::Hamming | Self::HammingHausdorff => 1.0,
            Self::Euclidean | Self::Type2Euclidean => 2.0,
            Self::Generalized { p }
            | Self::Type2Generalized { p }
            | Self::Type2Sum { p }
            | Self::InnerPowerMean { p }
            | Self::InnerPowerSum { p }
            | Self::Lp { p }
            | Self::Type2Weighted { p, .. }
            | Self::LpWeighted { p, .. } => *p,
        }
    }

    /// The weights carried by weighted families.
    pub fn weights(&self) -> Option<&WeightVector> {
        match self {
            Self::Type2Weighted { weights, .. } | Self::LpWeighted { weights, .. } => {
                Some(weights)
            }
            _ => None,
        }
    }

    fn require_at_least_one(&self) -> bool {
        matches!(self, Self::Lp { .. } | Self::LpWeighted { .. })
    }

    pub(crate) fn validate(&self, universe_size: usize) -> Result<(), HfsError> {
        let p = self.p();
        if !p.is_finite() || p <= 0.0 {
            return Err(HfsError::InvalidSpec(format!(
                "{} requires p > 0, got {p}",
                self.name()
            )));
        }
        if self.require_at_least_one() && p < 1.0 {
            return Err(HfsError::InvalidSpec(format!(
                "{} requires p >= 1, got {p}",
                self.name()
            )));
        }
        if let Some(w) = self.weights() {
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
}

/// Absolute deviations of one extended element pair.
pub(crate) struct PairDeviations {
    devs: Vec<f64>,
}

impl PairDeviations {
    pub(crate) fn new(a: &HesitantElement, b: &HesitantElement, policy: ExtensionPolicy) -> Self {
        let n = a.len().max(b.len());
        let va = a.extended_view(n, policy);
        let vb = b.extended_view(n, policy);
        let devs = va.iter().zip(vb.iter()).map(|(x, y)| (x - y).abs()).collect();
        Self { devs }
    }

    pub(crate) fn len(&self) -> usize {
        self.devs.len()
    }

    pub(crate) fn max(&self) -> f64 {
        self.devs.iter().copied().fold(0.0, f64::max)
    }

    fn scaled_power_sum(&self, p: f64, scale: f64) -> f64 {
        self.devs.iter().map(|d| (d / scale).powf(p)).sum()
    }

    /// `((1/n) sum d^p)^(1/p)`, factored by the maximum deviation so large
    /// `p` neither underflows nor overflows.
    pub(crate) fn power_mean_root(&self, p: f64) -> f64 {
        if p == 1.0 {
            return self.devs.iter().sum::<f64>() / self.devs.len() as f64;
        }
        let g = self.max();
        if g == 0.0 {
            return 0.0;
        }
        g * (self.scaled_power_sum(p, g) / self.devs.len() as f64).powf(1.0 / p)
    }

    /// `(sum d^p)^(1/p)`, factored by the maximum deviation.
    pub(crate) fn power_sum_root(&self, p: f64) -> f64 {
        if p == 1.0 {
            return self.devs.iter().sum();
        }
        let g = self.max();
        if g == 0.0 {
            return 0.0;
        }
        g * self.scaled_power_sum(p, g).powf(1.0 / p)
    }

    /// `(1/n) sum (d/scale)^p` for outer-rooted aggregations.
    fn scaled_power_mean(&self, p: f64, scale: f64) -> f64 {
        self.scaled_power_sum(p, scale) / self.devs.len() as f64
    }

    /// Raw `sum d^p` with no root. Deviations sit in `[0, 1]`, so this can
    /// only shrink toward zero as `p` grows.
    pub(crate) fn power_sum(&self, p: f64) -> f64 {
        if p == 1.0 {
            return self.devs.iter().sum();
        }
        self.devs.iter().map(|d| d.powf(p)).sum()
    }
}

pub(crate) fn pair_deviations(
    a: &HesitantSet,
    b: &HesitantSet,
    policy: ExtensionPolicy,
) -> Result<Vec<PairDeviations>, HfsError> {
    Ok(a.zipped(b)?
        .into_iter()
        .map(|(x, y)| PairDeviations::new(x, y, policy))
        .collect())
}

/// `((1/m) sum_i (1/n_i) sum_j d_ij^p)^(1/p)`, factored by the global
/// maximum deviation. The final sum is divided by `m` once so that maximal
/// deviations hit the supremum 1 exactly.
pub(crate) fn outer_rooted(pairs: &[PairDeviations], p: f64) -> f64 {
    if p == 1.0 {
        return pairs.iter().map(|pd| pd.power_mean_root(1.0)).sum::<f64>() / pairs.len() as f64;
    }
    let g = pairs.iter().map(PairDeviations::max).fold(0.0, f64::max);
    if g == 0.0 {
        return 0.0;
    }
    let acc: f64 =
        pairs.iter().map(|pd| pd.scaled_power_mean(p, g)).sum::<f64>() / pairs.len() as f64;
    g * acc.powf(1.0 / p)
}

/// Weighted form of [`outer_rooted`]: `(sum_i w_i (1/n_i) sum_j d_ij^p)^(1/p)`.
pub(crate) fn outer_rooted_weighted(pairs: &[PairDeviations], weights: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        return pairs
            .iter()
            .zip(weights)
            .map(|(pd, w)| w * pd.power_mean_root(1.0))
            .sum();
    }
    let g = pairs.iter().map(PairDeviations::max).fold(0.0, f64::max);
    if g == 0.0 {
        return 0.0;
    }
    let acc: f64 = pairs
        .iter()
        .zip(weights)
        .map(|(pd, w)| w * pd.scaled_power_mean(p, g))
        .sum();
    g * acc.powf(1.0 / p)
}

/// Evaluates the selected distance between two sets on the same universe.
pub fn distance(
    a: &HesitantSet,
    b: &HesitantSet,
    family: &DistanceFamily,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    family.validate(a.len())?;
    let pairs = pair_deviations(a, b, policy)?;
    let m = pairs.len() as f64;
    let p = family.p();
    let mean = |terms: &mut dyn Iterator<Item = f64>| terms.sum::<f64>() / m;
    let value = match family {
        DistanceFamily::Hamming | DistanceFamily::Euclidean | DistanceFamily::Generalized { .. } => {
            outer_rooted(&pairs, p)
        }
        DistanceFamily::Type2Generalized { .. } | DistanceFamily::Type2Euclidean => {
            mean(&mut pairs.iter().map(|pd| pd.power_mean_root(p)))
        }
        DistanceFamily::Type2Sum { .. } => pairs.iter().map(|pd| pd.power_mean_root(p)).sum(),
        DistanceFamily::InnerPowerMean { .. } | DistanceFamily::Lp { .. } => {
            mean(&mut pairs.iter().map(|pd| pd.power_sum_root(p)))
        }
        DistanceFamily::InnerPowerSum { .. } => {
            pairs.iter().map(|pd| pd.power_sum_root(p)).sum()
        }
        DistanceFamily::HammingHausdorff => mean(&mut pairs.iter().map(PairDeviations::max)),
        DistanceFamily::Type2Weighted { weights, .. } => pairs
            .iter()
            .zip(weights.iter())
            .map(|(pd, w)| w * pd.power_mean_root(p))
            .sum(),
        DistanceFamily::LpWeighted { weights, .. } => pairs
            .iter()
            .zip(weights.iter())
            .map(|(pd, w)| w * pd.power_sum_root(p))
            .sum(),
    };
    Ok(value)
}

/// Theoretical supremum of a family over sets whose paired elements have the
/// given common lengths. Attained exactly (bit for bit) by an all-ones set
/// against an all-zeros set, so it can serve as the `d_max` of normalizing
/// constructions.
///
/// Normalized families cap at 1. The summed and L_p families grow with the
/// element lengths (`m` for the type-2 sum, sums of `n^(1/p)` otherwise);
/// the weighted families cap at the corresponding weighted sums.
pub fn max_distance(family: &DistanceFamily, lengths: &[usize]) -> Result<f64, HfsError> {
    family.validate(lengths.len())?;
    if lengths.is_empty() {
        return Err(HfsError::InvalidSpec("no element lengths given".into()));
    }
    if lengths.iter().any(|&n| n == 0) {
        return Err(HfsError::InvalidSpec("element lengths must be >= 1".into()));
    }
    let m = lengths.len() as f64;
    let p = family.p();
    let root_sum = || lengths.iter().map(|&n| (n as f64).powf(1.0 / p)).sum::<f64>();
    Ok(match family {
        DistanceFamily::Hamming
        | DistanceFamily::Euclidean
        | DistanceFamily::Generalized { .. }
        | DistanceFamily::Type2Generalized { .. }
        | DistanceFamily::Type2Euclidean
        | DistanceFamily::HammingHausdorff => 1.0,
        DistanceFamily::Type2Sum { .. } => m,
        DistanceFamily::InnerPowerMean { .. } | DistanceFamily::Lp { .. } => root_sum() / m,
        DistanceFamily::InnerPowerSum { .. } => root_sum(),
        // the sharp bound of a weighted family is the weight total, which
        // construction pins to 1 within 1e-9
        DistanceFamily::Type2Weighted { weights, .. } => weights.iter().sum(),
        DistanceFamily::LpWeighted { weights, .. } => weights
            .iter()
            .zip(lengths)
            .map(|(w, &n)| w * (n as f64).powf(1.0 / p))
            .sum(),
    })
}

/// Common per-element lengths of a pair of sets, in universe order.
pub(crate) fn common_lengths(a: &HesitantSet, b: &HesitantSet) -> Result<Vec<usize>, HfsError> {
    Ok(a.zipped(b)?
        .into_iter()
        .map(|(x, y)| x.len().max(y.len()))
        .collect())
}

/// `(1 - exp(-d)) / (1 - exp(-d_max))`: maps any base distance into `[0, 1]`
/// monotonically, hitting 0 exactly when the sets are equal and 1 exactly at
/// the base family's supremum.
pub fn exponential_distance(
    a: &HesitantSet,
    b: &HesitantSet,
    base: &DistanceFamily,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    let d = distance(a, b, base, policy)?;
    let d_max = max_distance(base, &common_lengths(a, b)?)?;
    Ok((1.0 - (-d).exp()) / (1.0 - (-d_max).exp()))
}
