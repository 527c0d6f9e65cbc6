//! Frames of discernment and quantum mass functions.
//!
//! A frame is a finite set of mutually exclusive, collectively exhaustive
//! events. A quantum mass function assigns a complex amplitude to subsets
//! of the frame. Two distinct magnitude readings coexist on amplitudes:
//! the plain complex modulus `a` (what [`QuantumProbability::modulus`]
//! returns, and what every ordering and product in this crate uses), and
//! the Born-rule weight `a²` used for mass normalization — assigned
//! squared moduli must sum to 1. Validation checks the Born-rule reading;
//! arithmetic everywhere else works with the plain modulus.
//!
//! Mass functions are sparse: only assigned subsets are stored, never the
//! full power set (which has `2^n` elements).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::qprob::QuantumProbability;

/// Absolute tolerance on the Born-rule normalization sum.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// An ordered set of distinct event labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameOfDiscernment {
    events: Vec<String>,
}

impl FrameOfDiscernment {
    /// Builds a frame from event labels, preserving order.
    ///
    /// Labels must be pairwise distinct and at least one is required.
    pub fn new<I, S>(events: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let events: Vec<String> = events.into_iter().map(Into::into).collect();
        if events.is_empty() {
            return Err(Error::EmptyFrame);
        }
        let mut seen = BTreeSet::new();
        for label in &events {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel { label: label.clone() });
            }
        }
        Ok(Self { events })
    }

    /// Event labels in frame order.
    pub fn events(&self) -> &[String] {
        &self.events
    }

    /// Number of events in the frame.
    pub fn len(&self) -> usize {
        self.events.len()
    }

    /// Always false: frames carry at least one event.
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Whether `label` names an event of this frame.
    pub fn contains(&self, label: &str) -> bool {
        self.events.iter().any(|e| e == label)
    }

    /// Size of the power set, `2^n`. `None` when `2^n` overflows `u128`;
    /// the power set itself is never materialized.
    pub fn power_set_size(&self) -> Option<u128> {
        1u128.checked_shl(self.events.len() as u32)
    }
}

/// A sparse assignment of complex amplitudes to subsets of a frame.
///
/// Construction checks structure only (labels belong to the frame, no
/// subset assigned twice); the mathematical constraints — zero mass on
/// the empty set, Born-rule normalization — are checked by [`validate`],
/// which reports violations instead of failing.
///
/// [`validate`]: QuantumMassFunction::validate
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumMassFunction {
    frame: FrameOfDiscernment,
    assignments: Vec<(BTreeSet<String>, QuantumProbability)>,
}

impl QuantumMassFunction {
    /// Builds a mass function over `frame` from `(subset, amplitude)`
    /// pairs. The empty subset is representable so that a nonzero mass
    /// on it can be reported by validation.
    pub fn new(
        frame: FrameOfDiscernment,
        assignments: Vec<(Vec<String>, QuantumProbability)>,
    ) -> Result<Self> {
        let mut canonical: Vec<(BTreeSet<String>, QuantumProbability)> = Vec::new();
        for (subset, mass) in assignments {
            let mut set = BTreeSet::new();
            for label in subset {
                if !frame.contains(&label) {
                    return Err(Error::UnknownEvent { label });
                }
                if !set.insert(label.clone()) {
                    return Err(Error::DuplicateLabel { label });
                }
            }
            if canonical.iter().any(|(existing, _)| *existing == set) {
                return Err(Error::DuplicateSubset {
                    subset: set.iter().cloned().collect::<Vec<_>>().join(", "),
                });
            }
            canonical.push((set, mass));
        }
        Ok(Self { frame, assignments: canonical })
    }

    /// The underlying frame.
    pub fn frame(&self) -> &FrameOfDiscernment {
        &self.frame
    }

    /// Assigned `(subset, amplitude)` pairs in assignment order.
    pub fn assignments(&self) -> impl Iterator<Item = (&BTreeSet<String>, QuantumProbability)> {
        self.assignments.iter().map(|(s, m)| (s, *m))
    }

    /// Checks the mass-function constraints and reports every violation.
    ///
    /// Never fails on any finite input: an invalid mass function yields a
    /// non-empty report, not an error.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for (subset, mass) in &self.assignments {
            if subset.is_empty() && mass.modulus() > 0.0 {
                violations.push(Violation::EmptySetMass { modulus: mass.modulus() });
            }
        }

        let sum: f64 = self
            .assignments
            .iter()
            .map(|(_, mass)| {
                let a = mass.modulus();
                a * a
            })
            .sum();
        let residual = sum - 1.0;
        if residual.abs() > NORMALIZATION_TOLERANCE {
            violations.push(Violation::NormalizationResidual { sum, residual });
        }

        ValidationReport { violations }
    }
}

/// A single violated mass-function constraint.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// The empty set carries nonzero mass.
    EmptySetMass { modulus: f64 },
    /// Squared moduli of the assigned masses do not sum to 1.
    /// `residual` is signed: negative for a deficit, positive for excess.
    NormalizationResidual { sum: f64, residual: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySetMass { modulus } => {
                write!(f, "empty set carries mass of modulus {modulus}")
            }
            Violation::NormalizationResidual { sum, residual } => {
                let kind = if *residual < 0.0 { "deficit" } else { "excess" };
                write!(
                    f,
                    "squared moduli sum to {sum} ({kind}, residual {:.6})",
                    residual.abs()
                )
            }
        }
    }
}

/// Outcome of [`QuantumMassFunction::validate`]: valid iff no violations.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no constraint was violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// The violated constraints, in check order.
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}
