//! Ideal-alternative multi-attribute ranking: build the positive and
//! negative ideal sets from all alternatives, score each alternative by its
//! relative similarity to the two ideals, and sort.

use crate::element::{ExtensionPolicy, HesitantElement};
use crate::error::HfsError;
use crate::set::HesitantSet;
use crate::similarity::{similarity, SimilaritySpec};
use crate::weights::WeightVector;

/// A multi-attribute decision problem: alternatives evaluated against a
/// common attribute universe, plus attribute weights.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    attributes: Vec<String>,
    weights: WeightVector,
    alternatives: Vec<(String, HesitantSet)>,
}

impl DecisionProblem {
    /// Builds a problem from one row of hesitant elements per alternative,
    /// in attribute order.
    pub fn new(
        attributes: Vec<String>,
        weights: WeightVector,
        rows: Vec<(String, Vec<HesitantElement>)>,
    ) -> Result<Self, HfsError> {
        if attributes.is_empty() {
            return Err(HfsError::InvalidProblem("no attributes".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for attr in &attributes {
            if !seen.insert(attr.as_str()) {
                return Err(HfsError::InvalidProblem(format!(
                    "duplicate attribute `{attr}`"
                )));
            }
        }
        if weights.len() != attributes.len() {
            return Err(HfsError::InvalidProblem(format!(
                "{} weights for {} attributes",
                weights.len(),
                attributes.len()
            )));
        }
        if rows.len() < 2 {
            return Err(HfsError::InvalidProblem(
                "a decision problem needs at least two alternatives".into(),
            ));
        }
        let mut names = std::collections::HashSet::new();
        let mut alternatives = Vec::with_capacity(rows.len());
        for (name, row) in rows {
            if !names.insert(name.clone()) {
                return Err(HfsError::InvalidProblem(format!(
                    "duplicate alternative `{name}`"
                )));
            }
            if row.len() != attributes.len() {
                return Err(HfsError::InvalidProblem(format!(
                    "alternative `{name}` has {} entries for {} attributes",
                    row.len(),
                    attributes.len()
                )));
            }
            let set = HesitantSet::from_pairs(attributes.iter().cloned().zip(row))?;
            alternatives.push((name, set));
        }
        Ok(Self {
            attributes,
            weights,
            alternatives,
        })
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// `(name, evaluation)` pairs in input order.
    pub fn alternatives(&self) -> &[(String, HesitantSet)] {
        &self.alternatives
    }

    /// The positive and negative ideal sets of this problem.
    pub fn ideal_alternatives(
        &self,
        policy: ExtensionPolicy,
    ) -> Result<(HesitantSet, HesitantSet), HfsError> {
        let sets: Vec<&HesitantSet> = self.alternatives.iter().map(|(_, s)| s).collect();
        ideal_sets(&sets, policy)
    }
}

/// Builds the positive ideal (position-wise maximum) and negative ideal
/// (position-wise minimum) over the given sets.
///
/// At each universe element all sets are first extended to their common
/// length under `policy`, so the position index is well defined.
pub fn ideal_sets(
    sets: &[&HesitantSet],
    policy: ExtensionPolicy,
) -> Result<(HesitantSet, HesitantSet), HfsError> {
    let first = *sets.first().ok_or_else(|| {
        HfsError::InvalidProblem("ideal construction needs at least one set".into())
    })?;
    for other in &sets[1..] {
        if !first.same_universe(other) {
            return Err(HfsError::UniverseMismatch);
        }
    }
    let mut plus = Vec::with_capacity(first.len());
    let mut minus = Vec::with_capacity(first.len());
    for (id, _) in first.iter() {
        let elements: Vec<&HesitantElement> =
            sets.iter().map(|s| s.get(id).expect("same universe")).collect();
        let n = elements.iter().map(|e| e.len()).max().expect("non-empty");
        let views: Vec<_> = elements.iter().map(|e| e.extended_view(n, policy)).collect();
        let mut best = vec![f64::NEG_INFINITY; n];
        let mut worst = vec![f64::INFINITY; n];
        for view in &views {
            for (k, g) in view.iter().enumerate() {
                best[k] = best[k].max(g);
                worst[k] = worst[k].min(g);
            }
        }
        // position-wise max/min of descending sequences is descending
        plus.push((id.to_string(), HesitantElement::from_sorted(best)));
        minus.push((id.to_string(), HesitantElement::from_sorted(worst)));
    }
    Ok((HesitantSet::from_pairs(plus)?, HesitantSet::from_pairs(minus)?))
}

/// Scores and ordering produced by [`relative_similarity`].
#[derive(Debug, Clone)]
pub struct RankingResult {
    alternatives: Vec<String>,
    scores: Vec<f64>,
    order: Vec<usize>,
    measure: SimilaritySpec,
}

impl RankingResult {
    /// Alternative names in input order.
    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    /// Relative-similarity scores in input order.
    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// Indices into the input order, best first; ties keep input order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The similarity spec the scores were computed with (problem weights
    /// injected).
    pub fn measure(&self) -> &SimilaritySpec {
        &self.measure
    }

    /// `(name, score)` pairs, best first.
    pub fn ranked(&self) -> impl Iterator<Item = (&str, f64)> {
        self.order
            .iter()
            .map(|&i| (self.alternatives[i].as_str(), self.scores[i]))
    }

    /// The ordering as a `"H5 ≻ H3 ≻ …"` string.
    pub fn ranking_string(&self) -> String {
        self.order
            .iter()
            .map(|&i| self.alternatives[i].as_str())
            .collect::<Vec<_>>()
            .join(" ≻ ")
    }
}

/// Ranks every alternative by `s(H+, H_i) / (s(H+, H_i) + s(H-, H_i))`.
///
/// The problem's attribute weights are injected into `spec`, overriding any
/// weights it already carries.
pub fn relative_similarity(
    problem: &DecisionProblem,
    spec: &SimilaritySpec,
    policy: ExtensionPolicy,
) -> Result<RankingResult, HfsError> {
    let measure = spec.with_weights(problem.weights().clone());
    let (plus, minus) = problem.ideal_alternatives(policy)?;
    let mut scores = Vec::with_capacity(problem.alternatives().len());
    for (name, set) in problem.alternatives() {
        let sp = similarity(&plus, set, &measure, policy)?;
        let sm = similarity(&minus, set, &measure, policy)?;
        if sp + sm == 0.0 {
            return Err(HfsError::DegenerateScores(name.clone()));
        }
        scores.push(sp / (sp + sm));
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    // stable sort: equal scores keep input order
    order.sort_by(|&i, &j| scores[j].total_cmp(&scores[i]));
    Ok(RankingResult {
        alternatives: problem
            .alternatives()
            .iter()
            .map(|(n, _)| n.clone())
            .collect(),
        scores,
        order,
        measure,
    })
}
