//! Hesitant fuzzy elements, the length-extension regulation, and the
//! position-wise comparison laws built on it.

use crate::error::HfsError;

/// Slack allowed on grade bounds before rejecting input; absorbed by clamping.
const GRADE_TOLERANCE: f64 = 1e-12;

/// How the shorter of two hesitant elements is padded to a common length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionPolicy {
    /// Repeat the smallest grade of the shorter element (the usual regulation).
    #[default]
    Pessimistic,
    /// Repeat the largest grade of the shorter element.
    Optimistic,
}

/// Outcome of comparing two hesitant elements position by position after
/// extension to their common length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// Every grade of the left element is at most the corresponding grade of
    /// the right one, and at least one is strictly smaller.
    Inferior,
    /// All corresponding grades coincide.
    Equal,
    /// Mirror image of `Inferior`.
    Superior,
    /// Neither element dominates the other.
    Incomparable,
}

/// A hesitant fuzzy element: one or more membership grades in `[0, 1]`,
/// stored in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitantElement {
    grades: Vec<f64>,
}

impl HesitantElement {
    /// Builds an element from raw grades, collapsing exact duplicates.
    pub fn new(raw: &[f64]) -> Result<Self, HfsError> {
        Self::from_raw(raw, true)
    }

    /// Builds an element from raw grades.
    ///
    /// Grades may stray from `[0, 1]` by at most `1e-12` (parser round-off)
    /// and are clamped back in. With `dedupe`, exact duplicates collapse to a
    /// single grade; otherwise multiplicities are preserved.
    pub fn from_raw(raw: &[f64], dedupe: bool) -> Result<Self, HfsError> {
        if raw.is_empty() {
            return Err(HfsError::EmptyElement);
        }
        let mut grades = Vec::with_capacity(raw.len());
        for &g in raw {
            if !g.is_finite() || g < -GRADE_TOLERANCE || g > 1.0 + GRADE_TOLERANCE {
                return Err(HfsError::GradeOutOfRange(g));
            }
            grades.push(g.clamp(0.0, 1.0));
        }
        grades.sort_by(|a, b| b.partial_cmp(a).expect("grades are finite"));
        if dedupe {
            grades.dedup();
        }
        Ok(Self { grades })
    }

    /// Wraps grades that are already validated and sorted descending.
    pub(crate) fn from_sorted(grades: Vec<f64>) -> Self {
        debug_assert!(!grades.is_empty());
        debug_assert!(grades.windows(2).all(|w| w[0] >= w[1]));
        Self { grades }
    }

    /// Grades in descending order.
    pub fn grades(&self) -> &[f64] {
        &self.grades
    }

    /// Number of grades.
    pub fn len(&self) -> usize {
        self.grades.len()
    }

    /// Always false: elements hold at least one grade by construction.
    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    /// Largest grade.
    pub fn max_grade(&self) -> f64 {
        self.grades[0]
    }

    /// Smallest grade.
    pub fn min_grade(&self) -> f64 {
        *self.grades.last().expect("non-empty by construction")
    }

    fn pad_grade(&self, policy: ExtensionPolicy) -> f64 {
        match policy {
            ExtensionPolicy::Pessimistic => self.min_grade(),
            ExtensionPolicy::Optimistic => self.max_grade(),
        }
    }

    /// Descending view of this element padded out to `n` grades.
    pub(crate) fn extended_view(&self, n: usize, policy: ExtensionPolicy) -> ExtendedGrades<'_> {
        let extra = n.saturating_sub(self.grades.len());
        let (lead, tail) = match policy {
            // min-padding goes to the tail, max-padding to the front,
            // so the view stays sorted descending
            ExtensionPolicy::Pessimistic => (0, extra),
            ExtensionPolicy::Optimistic => (extra, 0),
        };
        ExtendedGrades {
            lead,
            grades: &self.grades,
            tail,
            pad: self.pad_grade(policy),
        }
    }

    fn extended(&self, n: usize, policy: ExtensionPolicy) -> Self {
        Self::from_sorted(self.extended_view(n, policy).iter().collect())
    }

    /// Extends `a` and `b` to their common length; the longer input comes
    /// back unchanged.
    pub fn extend_pair(
        a: &Self,
        b: &Self,
        policy: ExtensionPolicy,
    ) -> (Self, Self) {
        let n = a.len().max(b.len());
        (a.extended(n, policy), b.extended(n, policy))
    }

    /// Position-wise comparison of `a` and `b` after extension.
    pub fn compare(a: &Self, b: &Self, policy: ExtensionPolicy) -> Comparison {
        let n = a.len().max(b.len());
        let va = a.extended_view(n, policy);
        let vb = b.extended_view(n, policy);
        let mut all_le = true;
        let mut all_ge = true;
        for (x, y) in va.iter().zip(vb.iter()) {
            if x > y {
                all_le = false;
            }
            if x < y {
                all_ge = false;
            }
        }
        match (all_le, all_ge) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Inferior,
            (false, true) => Comparison::Superior,
            (false, false) => Comparison::Incomparable,
        }
    }
}

/// Lazily extended grade sequence. Pessimistic padding repeats the minimum
/// after the stored grades; optimistic padding repeats the maximum before
/// them. Either way the sequence stays descending.
pub(crate) struct ExtendedGrades<'a> {
    lead: usize,
    grades: &'a [f64],
    tail: usize,
    pad: f64,
}

impl ExtendedGrades<'_> {
    pub(crate) fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        let lead = std::iter::repeat(self.pad).take(self.lead);
        let tail = std::iter::repeat(self.pad).take(self.tail);
        lead.chain(self.grades.iter().copied()).chain(tail)
    }
}
