use thiserror::Error;

/// Errors raised while constructing domain values or evaluating operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A probability's modulus is above the unit bound (plus round-off slack).
    #[error("modulus {modulus} exceeds 1")]
    ModulusExceedsOne { modulus: f64 },

    /// A polar amplitude below zero.
    #[error("amplitude {amplitude} is negative")]
    NegativeAmplitude { amplitude: f64 },

    /// A component that must be finite is NaN or infinite.
    #[error("{name} is not finite (got {value})")]
    NonFinite { name: &'static str, value: f64 },

    /// A frame of discernment needs at least one event.
    #[error("frame of discernment has no events")]
    EmptyFrame,

    /// Event or source labels must be pairwise distinct.
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },

    /// A mass assignment referenced an event outside the frame.
    #[error("event {label:?} is not in the frame of discernment")]
    UnknownEvent { label: String },

    /// The same subset was assigned mass twice.
    #[error("subset {{{subset}}} assigned more than once")]
    DuplicateSubset { subset: String },

    /// Evidence sets must contain at least one source.
    #[error("evidence set is empty")]
    EmptyEvidence,

    /// The attitude parameter lies outside the open interval (0, 1).
    #[error("attitude parameter {alpha} is outside the open interval (0, 1)")]
    InvalidAlpha { alpha: f64 },

    /// A weight vector needs at least one entry.
    #[error("weight vector must have at least one entry")]
    InvalidLength,

    /// Values and weights must pair up one-to-one.
    #[error("length mismatch: {values} values vs {weights} weights")]
    LengthMismatch { values: usize, weights: usize },

    /// Orness is undefined for fewer than two weights.
    #[error("orness needs at least 2 weights, got {len}")]
    DegenerateLength { len: usize },

    /// Weight vectors are non-negative.
    #[error("weight {weight} at index {index} is negative")]
    NegativeWeight { index: usize, weight: f64 },

    /// Weight vectors sum to one.
    #[error("weights sum to {sum}, expected 1")]
    WeightSumMismatch { sum: f64 },

    /// A probability value outside [0, 1].
    #[error("value {value} is outside [0, 1]")]
    ValueOutOfRange { value: f64 },

    /// A sweep grid that violates 0 < start <= end < 1 with step > 0.
    #[error("invalid sweep range: start={start}, end={end}, step={step}")]
    InvalidRange { start: f64, end: f64, step: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
