//! Continuous (integral) distance and similarity measures, evaluated by
//! trapezoidal quadrature over a shared finite node grid.
//!
//! A hesitant membership function over an interval `[a, b]` is represented
//! by its samples: one hesitant element per grid node. Weighted variants
//! integrate `w(x) * g(x)` against a sampled weight density; normalized
//! variants average `g` over the interval. Prefactors involving the
//! per-node grade count `n_x` are evaluated node by node.

use crate::distance::PairDeviations;
use crate::element::{ExtensionPolicy, HesitantElement};
use crate::error::HfsError;

/// Slack allowed on the unit-integral constraint of a weight density.
pub const WEIGHT_INTEGRAL_TOLERANCE: f64 = 1e-6;

/// A hesitant membership function sampled on a strictly increasing node
/// grid; `nodes[0]` and `nodes[last]` are the interval endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledHesitantFunction {
    nodes: Vec<f64>,
    values: Vec<HesitantElement>,
}

impl SampledHesitantFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<HesitantElement>) -> Result<Self, HfsError> {
        validate_grid(&nodes)?;
        if values.len() != nodes.len() {
            return Err(HfsError::InvalidSpec(format!(
                "{} hesitant elements for {} grid nodes",
                values.len(),
                nodes.len()
            )));
        }
        Ok(Self { nodes, values })
    }

    /// Constant-in-x function: the same element at every node.
    pub fn constant(nodes: Vec<f64>, value: HesitantElement) -> Result<Self, HfsError> {
        let values = vec![value; nodes.len()];
        Self::new(nodes, values)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[HesitantElement] {
        &self.values
    }

    /// The interval `(a, b)` spanned by the grid.
    pub fn interval(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().expect("grid is non-empty"))
    }

    fn width(&self) -> f64 {
        let (a, b) = self.interval();
        b - a
    }
}

/// A weight density sampled on the same grid as the functions it weighs;
/// values lie in `[0, 1]` and trapezoidal integration over the interval
/// gives 1 within [`WEIGHT_INTEGRAL_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledWeightFunction {
    nodes: Vec<f64>,
    density: Vec<f64>,
}

impl SampledWeightFunction {
    pub fn new(nodes: Vec<f64>, density: Vec<f64>) -> Result<Self, HfsError> {
        validate_grid(&nodes)?;
        if density.len() != nodes.len() {
            return Err(HfsError::InvalidSpec(format!(
                "{} density values for {} grid nodes",
                density.len(),
                nodes.len()
            )));
        }
        for &w in &density {
            if !w.is_finite() || !(0.0..=1.0).contains(&w) {
                return Err(HfsError::WeightOutOfRange(w));
            }
        }
        let integral = trapezoid(&nodes, |i| density[i]);
        if (integral - 1.0).abs() > WEIGHT_INTEGRAL_TOLERANCE {
            return Err(HfsError::WeightNotNormalized(integral));
        }
        Ok(Self { nodes, density })
    }

    /// The constant density `1 / (b - a)`.
    pub fn uniform(nodes: Vec<f64>) -> Result<Self, HfsError> {
        validate_grid(&nodes)?;
        let width = nodes.last().unwrap() - nodes[0];
        Self::new(nodes.clone(), vec![1.0 / width; nodes.len()])
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }
}

/// Continuous distance variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuousDistanceVariant {
    /// Integral of `w(x)` times the per-node power-mean root.
    Type2Weighted,
    /// Interval average of the per-node power-mean root.
    Type2Normalized,
    /// Integral of `w(x)` times the per-node power-sum root; `p >= 1`.
    LpWeighted,
    /// Interval average of the per-node power-sum root; `p >= 1`.
    LpAverage,
}

/// Continuous similarity variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuousSimilarityVariant {
    /// One minus the weighted integral of the power-mean root.
    GeometricWeighted,
    /// One minus the weighted integral of the power-sum root, normalized by
    /// the interval mean of `n_x^(1/p)`.
    GeometricSumWeighted,
    /// One minus the interval average of the power-mean root.
    GeometricNormalized,
    /// One minus the interval average of the power-sum root, normalized by
    /// the interval mean of `n_x^(1/p)`.
    GeometricSumNormalized,
    /// Weighted integral of the per-node min/max grade-sum ratio.
    SetTheoreticWeighted,
    /// Interval average of the per-node min/max grade-sum ratio.
    SetTheoreticNormalized,
}

/// Evaluates a continuous distance between two sampled functions on the same
/// grid. `w` is required only in the sense that weighted variants fall back
/// to the uniform density `1/(b-a)` when it is absent.
pub fn continuous_distance(
    a: &SampledHesitantFunction,
    b: &SampledHesitantFunction,
    w: Option<&SampledWeightFunction>,
    p: f64,
    variant: ContinuousDistanceVariant,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    check_grids(a, b, w)?;
    validate_p(p, matches!(
        variant,
        ContinuousDistanceVariant::LpWeighted | ContinuousDistanceVariant::LpAverage
    ))?;
    let devs = node_deviations(a, b, policy);
    let integrand: Vec<f64> = match variant {
        ContinuousDistanceVariant::Type2Weighted | ContinuousDistanceVariant::Type2Normalized => {
            devs.iter().map(|d| d.power_mean_root(p)).collect()
        }
        ContinuousDistanceVariant::LpWeighted | ContinuousDistanceVariant::LpAverage => {
            devs.iter().map(|d| d.power_sum_root(p)).collect()
        }
    };
    let weighted = matches!(
        variant,
        ContinuousDistanceVariant::Type2Weighted | ContinuousDistanceVariant::LpWeighted
    );
    Ok(integrate(a, w, &integrand, weighted))
}

/// Evaluates a continuous similarity between two sampled functions on the
/// same grid.
pub fn continuous_similarity(
    a: &SampledHesitantFunction,
    b: &SampledHesitantFunction,
    w: Option<&SampledWeightFunction>,
    p: f64,
    variant: ContinuousSimilarityVariant,
    policy: ExtensionPolicy,
) -> Result<f64, HfsError> {
    use ContinuousSimilarityVariant::*;
    check_grids(a, b, w)?;
    if !matches!(variant, SetTheoreticWeighted | SetTheoreticNormalized) {
        validate_p(p, false)?;
    }
    let devs = node_deviations(a, b, policy);
    match variant {
        GeometricWeighted | GeometricNormalized => {
            let integrand: Vec<f64> = devs.iter().map(|d| d.power_mean_root(p)).collect();
            Ok(1.0 - integrate(a, w, &integrand, variant == GeometricWeighted))
        }
        GeometricSumWeighted | GeometricSumNormalized => {
            let integrand: Vec<f64> = devs.iter().map(|d| d.power_sum_root(p)).collect();
            // interval mean of n_x^(1/p), by the same quadrature rule
            let counts: Vec<f64> = devs
                .iter()
                .map(|d| (d.len() as f64).powf(1.0 / p))
                .collect();
            let norm = trapezoid(a.nodes(), |i| counts[i]) / a.width();
            let value = integrate(a, w, &integrand, variant == GeometricSumWeighted);
            Ok(1.0 - value / norm)
        }
        SetTheoreticWeighted | SetTheoreticNormalized => {
            let ratios: Vec<f64> = a
                .values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| min_max_ratio(x, y, policy))
                .collect();
            Ok(integrate(a, w, &ratios, variant == SetTheoreticWeighted))
        }
    }
}

fn node_deviations(
    a: &SampledHesitantFunction,
    b: &SampledHesitantFunction,
    policy: ExtensionPolicy,
) -> Vec<PairDeviations> {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| PairDeviations::new(x, y, policy))
        .collect()
}

fn min_max_ratio(a: &HesitantElement, b: &HesitantElement, policy: ExtensionPolicy) -> f64 {
    let (lo, hi) = crate::similarity::min_max_sums(a, b, policy);
    if hi == 0.0 {
        // an all-zero node pair is extension-equal
        1.0
    } else {
        lo / hi
    }
}

/// Trapezoidal quadrature of `w(x) * f(x)` (weighted) or `(1/(b-a)) * f(x)`.
fn integrate(
    a: &SampledHesitantFunction,
    w: Option<&SampledWeightFunction>,
    f: &[f64],
    weighted: bool,
) -> f64 {
    match (weighted, w) {
        (true, Some(w)) => trapezoid(a.nodes(), |i| w.density()[i] * f[i]),
        // absent density means equal weighting, which is the normalized form
        _ => trapezoid(a.nodes(), |i| f[i]) / a.width(),
    }
}

fn trapezoid(nodes: &[f64], f: impl Fn(usize) -> f64) -> f64 {
    let mut sum = 0.0;
    for i in 0..nodes.len() - 1 {
        sum += (nodes[i + 1] - nodes[i]) * (f(i) + f(i + 1)) / 2.0;
    }
    sum
}

fn validate_grid(nodes: &[f64]) -> Result<(), HfsError> {
    if nodes.len() < 2 {
        return Err(HfsError::InvalidSpec(
            "a sample grid needs at least two nodes".into(),
        ));
    }
    if nodes.iter().any(|x| !x.is_finite()) {
        return Err(HfsError::InvalidSpec("grid nodes must be finite".into()));
    }
    if nodes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HfsError::InvalidSpec(
            "grid nodes must be strictly increasing".into(),
        ));
    }
    Ok(())
}

fn validate_p(p: f64, needs_at_least_one: bool) -> Result<(), HfsError> {
    if !p.is_finite() || p <= 0.0 {
        return Err(HfsError::InvalidSpec(format!("p must be > 0, got {p}")));
    }
    if needs_at_least_one && p < 1.0 {
        return Err(HfsError::InvalidSpec(format!("p must be >= 1, got {p}")));
    }
    Ok(())
}

fn check_grids(
    a: &SampledHesitantFunction,
    b: &SampledHesitantFunction,
    w: Option<&SampledWeightFunction>,
) -> Result<(), HfsError> {
    if a.nodes() != b.nodes() {
        return Err(HfsError::GridMismatch);
    }
    if let Some(w) = w {
        if w.nodes() != a.nodes() {
            return Err(HfsError::GridMismatch);
        }
    }
    Ok(())
}
