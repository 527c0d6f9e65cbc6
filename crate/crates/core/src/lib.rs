//! Complex-valued evidence aggregation.
//!
//! Evidence from independent sources arrives as complex probability
//! amplitudes. This crate ranks such evidence by modulus, forms the
//! running products of the ranking, and blends them with attitudinal
//! ordered-weighted-average (OWA) weights into a soft likelihood that a
//! single weak source cannot collapse. With all angles at zero the
//! operators reduce exactly to their classical real-valued forms.
//!
//! Modules:
//! - [`qprob`]: the [`QuantumProbability`] amplitude type and its arithmetic.
//! - [`frame`]: frames of discernment and validated quantum mass functions.
//! - [`evidence`]: ordered, labeled evidence collections.
//! - [`owa`]: attitudinal weight vectors, classical OWA, orness, dispersion.
//! - [`likelihood`]: ranking, cumulative products, soft likelihood, sweeps.
//!
//! All types are immutable values and all operations are pure functions;
//! everything here can be shared and called freely across threads.

pub mod error;
pub mod evidence;
pub mod frame;
pub mod likelihood;
pub mod owa;
pub mod qprob;

pub use error::{Error, Result};
pub use evidence::EvidenceSet;
pub use frame::{
    FrameOfDiscernment, QuantumMassFunction, ValidationReport, Violation,
    NORMALIZATION_TOLERANCE,
};
pub use likelihood::{
    alpha_sweep, classical_soft_likelihood, cumulative_products, product_likelihood,
    quantum_owa_direct, quantum_soft_likelihood, sort_by_modulus, LikelihoodTrace,
    SortedEvidence, SweepResult, SweepRow,
};
pub use owa::{attitudinal_weights, classical_owa, AttitudeParameter, WeightVector};
pub use qprob::{QuantumProbability, MODULUS_TOLERANCE};
