//! Ordered collections of evidence from independent sources.

use crate::error::{Error, Result};
use crate::qprob::QuantumProbability;

/// An ordered, non-empty sequence of labeled quantum probabilities, one
/// per evidence source. Labels are pairwise distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceSet {
    entries: Vec<(String, QuantumProbability)>,
}

impl EvidenceSet {
    /// Builds an evidence set from `(label, probability)` pairs in order.
    pub fn new(entries: Vec<(String, QuantumProbability)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyEvidence);
        }
        for (i, (label, _)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|(seen, _)| seen == label) {
                return Err(Error::DuplicateLabel { label: label.clone() });
            }
        }
        Ok(Self { entries })
    }

    /// Convenience constructor labeling sources `p1`, `p2`, … in order.
    pub fn from_probabilities<I>(probabilities: I) -> Result<Self>
    where
        I: IntoIterator<Item = QuantumProbability>,
    {
        let entries = probabilities
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("p{}", i + 1), p))
            .collect();
        Self::new(entries)
    }

    /// Number of sources; at least 1.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false: evidence sets carry at least one source.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry at `index`, if any.
    pub fn get(&self, index: usize) -> Option<(&str, QuantumProbability)> {
        self.entries.get(index).map(|(l, p)| (l.as_str(), *p))
    }

    /// Source labels in order.
    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(l, _)| l.as_str())
    }

    /// Probabilities in source order.
    pub fn probabilities(&self) -> impl Iterator<Item = QuantumProbability> + '_ {
        self.entries.iter().map(|(_, p)| *p)
    }

    /// `(label, probability)` pairs in source order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, QuantumProbability)> {
        self.entries.iter().map(|(l, p)| (l.as_str(), *p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicate_labels() {
        assert!(matches!(EvidenceSet::new(vec![]), Err(Error::EmptyEvidence)));
        let p = QuantumProbability::from_cartesian(0.5, 0.0).unwrap();
        assert!(matches!(
            EvidenceSet::new(vec![("s".into(), p), ("s".into(), p)]),
            Err(Error::DuplicateLabel { .. })
        ));
    }

    #[test]
    fn auto_labels_run_from_p1() {
        let p = QuantumProbability::from_cartesian(0.5, 0.0).unwrap();
        let e = EvidenceSet::from_probabilities([p, p, p]).unwrap();
        assert_eq!(e.labels().collect::<Vec<_>>(), ["p1", "p2", "p3"]);
        assert_eq!(e.len(), 3);
        assert_eq!(e.get(1), Some(("p2", p)));
    }
}
