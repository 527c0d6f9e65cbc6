//! Attitudinal OWA weights and the classical ordered weighted average.
//!
//! The weight vector for `n` inputs under optimism `α ∈ (0, 1)` is
//!
//! ```text
//! ω_i = (i/n)^r − ((i−1)/n)^r,   r = (1−α)/α,   i = 1…n
//! ```
//!
//! The sum telescopes to `(n/n)^r = 1`, so the vector is convex for any
//! `α`. Small `α` loads weight onto the tail (pessimistic), large `α`
//! onto the head (optimistic), and `α = 0.5` gives the uniform vector.
//! The endpoints `α = 0` and `α = 1` make `r` degenerate, so they are
//! expressed through explicit limit markers instead: [`MIN_LIMIT`] is the
//! min operator `(0,…,0,1)` and [`MAX_LIMIT`] the max operator
//! `(1,0,…,0)`.
//!
//! [`MIN_LIMIT`]: AttitudeParameter::MIN_LIMIT
//! [`MAX_LIMIT`]: AttitudeParameter::MAX_LIMIT

use std::fmt;

use crate::error::{Error, Result};

/// The degree of optimism steering an attitudinal weight vector.
///
/// Either a fixed value in the open interval `(0, 1)` or one of the two
/// limit markers for `α → 0⁺` and `α → 1⁻`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttitudeParameter(Attitude);

#[derive(Debug, Clone, Copy, PartialEq)]
enum Attitude {
    MinLimit,
    Fixed(f64),
    MaxLimit,
}

impl AttitudeParameter {
    /// `α → 0⁺`: all weight on the smallest input.
    pub const MIN_LIMIT: Self = Self(Attitude::MinLimit);

    /// `α → 1⁻`: all weight on the largest input.
    pub const MAX_LIMIT: Self = Self(Attitude::MaxLimit);

    /// A fixed `α`; must be finite and strictly inside `(0, 1)`.
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
            return Err(Error::InvalidAlpha { alpha });
        }
        Ok(Self(Attitude::Fixed(alpha)))
    }

    /// The fixed `α`, or `None` for a limit marker.
    pub fn value(&self) -> Option<f64> {
        match self.0 {
            Attitude::Fixed(alpha) => Some(alpha),
            _ => None,
        }
    }
}

impl fmt::Display for AttitudeParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Attitude::MinLimit => write!(f, "min-limit"),
            Attitude::Fixed(alpha) => write!(f, "{alpha}"),
            Attitude::MaxLimit => write!(f, "max-limit"),
        }
    }
}

/// A convex weight vector: non-negative entries summing to 1.
///
/// Carries the attitude it was derived from when built by
/// [`attitudinal_weights`]; hand-built vectors have no provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    attitude: Option<AttitudeParameter>,
}

/// Absolute tolerance on the weight-sum and orness/dispersion checks.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

impl WeightVector {
    /// Builds a weight vector from explicit weights, checking convexity.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidLength);
        }
        for (index, &weight) in weights.iter().enumerate() {
            if !weight.is_finite() {
                return Err(Error::NonFinite { name: "weight", value: weight });
            }
            if weight < 0.0 {
                return Err(Error::NegativeWeight { index, weight });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::WeightSumMismatch { sum });
        }
        Ok(Self { weights, attitude: None })
    }

    /// Number of weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Always false: weight vectors carry at least one entry.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The weights as a slice, position 0 first.
    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    /// Iterates the weights in order.
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.weights.iter().copied()
    }

    /// The attitude this vector was derived from, if any.
    pub fn attitude(&self) -> Option<AttitudeParameter> {
        self.attitude
    }

    /// Degree to which the vector behaves like the max operator:
    /// `Σ ((n−i)/(n−1))·ω_i` over `i = 1…n`, in `[0, 1]`.
    ///
    /// 1 for `(1,0,…,0)`, 0 for `(0,…,0,1)`, 0.5 for uniform weights.
    /// Undefined for a single weight.
    pub fn orness(&self) -> Result<f64> {
        let n = self.weights.len();
        if n < 2 {
            return Err(Error::DegenerateLength { len: n });
        }
        let denom = (n - 1) as f64;
        Ok(self
            .weights
            .iter()
            .enumerate()
            .map(|(idx, w)| ((n - 1 - idx) as f64 / denom) * w)
            .sum())
    }

    /// Entropy `−Σ ω·ln ω` with `0·ln 0 = 0`, in `[0, ln n]`.
    ///
    /// 0 for any one-hot vector, `ln n` for the uniform vector.
    pub fn dispersion(&self) -> f64 {
        self.weights
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|&w| -w * w.ln())
            .sum()
    }
}

/// Derives the attitudinal weight vector of length `n` for `attitude`.
///
/// The limit markers yield the one-hot min/max vectors; a fixed `α`
/// yields `ω_i = (i/n)^r − ((i−1)/n)^r` with `r = (1−α)/α`.
pub fn attitudinal_weights(n: usize, attitude: AttitudeParameter) -> Result<WeightVector> {
    if n == 0 {
        return Err(Error::InvalidLength);
    }
    let weights = match attitude.0 {
        Attitude::MinLimit => {
            let mut w = vec![0.0; n];
            w[n - 1] = 1.0;
            w
        }
        Attitude::MaxLimit => {
            let mut w = vec![0.0; n];
            w[0] = 1.0;
            w
        }
        Attitude::Fixed(alpha) => {
            let r = (1.0 - alpha) / alpha;
            let n_f = n as f64;
            (1..=n)
                .map(|i| (i as f64 / n_f).powf(r) - ((i - 1) as f64 / n_f).powf(r))
                .collect()
        }
    };
    Ok(WeightVector { weights, attitude: Some(attitude) })
}

/// The classical OWA operator: `values` sorted in descending order,
/// dotted with `weights`. Ties keep their original relative order.
pub fn classical_owa(values: &[f64], weights: &WeightVector) -> Result<f64> {
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            values: values.len(),
            weights: weights.len(),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    Ok(sorted.iter().zip(weights.iter()).map(|(v, w)| v * w).sum())
}
