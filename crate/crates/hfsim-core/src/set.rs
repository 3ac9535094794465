//! Hesitant fuzzy sets over a finite, ordered universe.

use indexmap::IndexMap;

use crate::element::{Comparison, ExtensionPolicy, HesitantElement};
use crate::error::HfsError;

/// A hesitant fuzzy set: an ordered mapping from universe-element
/// identifiers to hesitant elements.
///
/// Universe order is insertion order; measures pair elements of two sets by
/// identifier and require identical identifier sets.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitantSet {
    elements: IndexMap<String, HesitantElement>,
}

impl HesitantSet {
    /// Builds a set from `(identifier, element)` pairs.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self, HfsError>
    where
        I: IntoIterator<Item = (S, HesitantElement)>,
        S: Into<String>,
    {
        let mut elements = IndexMap::new();
        for (id, element) in pairs {
            let id = id.into();
            if elements.insert(id.clone(), element).is_some() {
                return Err(HfsError::DuplicateElement(id));
            }
        }
        if elements.is_empty() {
            return Err(HfsError::EmptySet);
        }
        Ok(Self { elements })
    }

    /// Number of universe elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: sets hold at least one element by construction.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The element attached to `id`, if the universe contains it.
    pub fn get(&self, id: &str) -> Option<&HesitantElement> {
        self.elements.get(id)
    }

    /// Universe identifiers in insertion order.
    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.elements.keys().map(String::as_str)
    }

    /// `(identifier, element)` pairs in universe order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &HesitantElement)> {
        self.elements.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// True when both sets are defined on the same identifiers.
    pub fn same_universe(&self, other: &Self) -> bool {
        self.elements.len() == other.elements.len()
            && self.elements.keys().all(|k| other.elements.contains_key(k))
    }

    /// Pairs this set's elements with `other`'s, in this set's universe
    /// order.
    pub(crate) fn zipped<'a>(
        &'a self,
        other: &'a Self,
    ) -> Result<Vec<(&'a HesitantElement, &'a HesitantElement)>, HfsError> {
        if !self.same_universe(other) {
            return Err(HfsError::UniverseMismatch);
        }
        Ok(self
            .elements
            .iter()
            .map(|(id, el)| (el, &other.elements[id]))
            .collect())
    }

    /// True when every element of `self` is inferior or equal to the
    /// corresponding element of `other` after extension.
    pub fn is_quasi_subset_of(
        &self,
        other: &Self,
        policy: ExtensionPolicy,
    ) -> Result<bool, HfsError> {
        Ok(self.zipped(other)?.iter().all(|(a, b)| {
            matches!(
                HesitantElement::compare(a, b, policy),
                Comparison::Inferior | Comparison::Equal
            )
        }))
    }

    /// Extension-aware equality: every paired element compares `Equal`.
    pub fn extension_equal(
        &self,
        other: &Self,
        policy: ExtensionPolicy,
    ) -> Result<bool, HfsError> {
        Ok(self
            .zipped(other)?
            .iter()
            .all(|(a, b)| HesitantElement::compare(a, b, policy) == Comparison::Equal))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(grades: &[f64]) -> HesitantElement {
        HesitantElement::new(grades).unwrap()
    }

    fn set(pairs: &[(&str, &[f64])]) -> HesitantSet {
        HesitantSet::from_pairs(pairs.iter().map(|(id, g)| (*id, el(g)))).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(
            HesitantSet::from_pairs(Vec::<(String, HesitantElement)>::new()),
            Err(HfsError::EmptySet)
        );
        assert_eq!(
            HesitantSet::from_pairs(vec![("x", el(&[0.1])), ("x", el(&[0.2]))]),
            Err(HfsError::DuplicateElement("x".into()))
        );
    }

    #[test]
    fn quasi_subset_is_reflexive() {
        let a = set(&[("x1", &[0.5, 0.4]), ("x2", &[0.3])]);
        assert!(a.is_quasi_subset_of(&a, ExtensionPolicy::Pessimistic).unwrap());
    }

    #[test]
    fn all_zero_set_is_quasi_subset_of_anything() {
        let zero = set(&[("x1", &[0.0]), ("x2", &[0.0])]);
        let b = set(&[("x1", &[0.5, 0.4]), ("x2", &[0.9])]);
        assert!(zero.is_quasi_subset_of(&b, ExtensionPolicy::Pessimistic).unwrap());
    }

    #[test]
    fn incomparable_elements_break_quasi_subset() {
        let a = set(&[("x", &[0.5, 0.4])]);
        let b = set(&[("x", &[0.7, 0.4, 0.2])]);
        assert!(!a.is_quasi_subset_of(&b, ExtensionPolicy::Pessimistic).unwrap());
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let a = set(&[("x", &[0.5])]);
        let b = set(&[("y", &[0.5])]);
        assert_eq!(
            a.is_quasi_subset_of(&b, ExtensionPolicy::Pessimistic),
            Err(HfsError::UniverseMismatch)
        );
    }

    #[test]
    fn universe_order_does_not_matter_for_pairing() {
        let a = set(&[("x", &[0.5]), ("y", &[0.2])]);
        let b = set(&[("y", &[0.3]), ("x", &[0.6])]);
        assert!(a.is_quasi_subset_of(&b, ExtensionPolicy::Pessimistic).unwrap());
    }
}
