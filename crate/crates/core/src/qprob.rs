//! Complex-valued probabilities.
//!
//! A quantum probability is a complex amplitude `a·e^{iθ}` whose modulus
//! `a` plays the role of a probability magnitude (so `a ≤ 1`) and whose
//! angle `θ` encodes phase. Values are immutable and validated at
//! construction; every operator downstream can rely on the unit bound.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Absolute slack on the unit-modulus bound, absorbing round-off from
/// polar construction.
pub const MODULUS_TOLERANCE: f64 = 1e-12;

/// A complex probability amplitude with modulus at most 1.
///
/// Cartesian components are stored; the polar views [`modulus`] and
/// [`angle`] are derived on demand. The angle follows the two-argument
/// arctangent convention and lands in `(-π, π]`.
///
/// [`modulus`]: QuantumProbability::modulus
/// [`angle`]: QuantumProbability::angle
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumProbability {
    re: f64,
    im: f64,
}

impl QuantumProbability {
    /// The zero amplitude, `0 + 0i`.
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };

    /// The multiplicative identity, `1 + 0i`.
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };

    /// Builds a probability from cartesian components `re + im·i`.
    ///
    /// Fails with [`Error::ModulusExceedsOne`] when `√(re² + im²)` is
    /// above `1 + 1e-12`, and with [`Error::NonFinite`] on NaN or
    /// infinite components.
    pub fn from_cartesian(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() {
            return Err(Error::NonFinite { name: "re", value: re });
        }
        if !im.is_finite() {
            return Err(Error::NonFinite { name: "im", value: im });
        }
        let modulus = re.hypot(im);
        if modulus > 1.0 + MODULUS_TOLERANCE {
            return Err(Error::ModulusExceedsOne { modulus });
        }
        Ok(Self { re, im })
    }

    /// Builds a probability from a polar amplitude and angle in radians,
    /// so that `re = a·cos θ` and `im = a·sin θ`.
    pub fn from_polar(amplitude: f64, angle: f64) -> Result<Self> {
        if !amplitude.is_finite() {
            return Err(Error::NonFinite { name: "amplitude", value: amplitude });
        }
        if !angle.is_finite() {
            return Err(Error::NonFinite { name: "angle", value: angle });
        }
        if amplitude < 0.0 {
            return Err(Error::NegativeAmplitude { amplitude });
        }
        if amplitude > 1.0 + MODULUS_TOLERANCE {
            return Err(Error::ModulusExceedsOne { modulus: amplitude });
        }
        Ok(Self {
            re: amplitude * angle.cos(),
            im: amplitude * angle.sin(),
        })
    }

    /// Real component.
    pub fn re(&self) -> f64 {
        self.re
    }

    /// Imaginary component.
    pub fn im(&self) -> f64 {
        self.im
    }

    /// The modulus `√(re² + im²)`, always in `[0, 1 + 1e-12]`.
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// The angle `atan2(im, re)` in radians, in `(-π, π]`.
    pub fn angle(&self) -> f64 {
        self.im.atan2(self.re)
    }

    /// Scales by a non-negative real weight. Reserved for convex
    /// combinations, which cannot escape the unit bound.
    pub(crate) fn scaled(self, weight: f64) -> Self {
        Self {
            re: weight * self.re,
            im: weight * self.im,
        }
    }

    /// Component-wise sum. Reserved for convex combinations.
    pub(crate) fn plus(self, other: Self) -> Self {
        Self {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }
}

/// Complex product. Closed over the type: `|pq| = |p|·|q| ≤ 1`.
impl Mul for QuantumProbability {
    type Output = QuantumProbability;

    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

/// Renders as `re + im·i`, honoring a precision flag: `{:.4}` gives the
/// four-decimal form used in tables, e.g. `0.9600 - 0.2200i`.
impl fmt::Display for QuantumProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im < 0.0 { '-' } else { '+' };
        let im = self.im.abs();
        match f.precision() {
            Some(p) => write!(f, "{:.p$} {} {:.p$}i", self.re, sign, im, p = p),
            None => write!(f, "{} {} {}i", self.re, sign, im),
        }
    }
}
