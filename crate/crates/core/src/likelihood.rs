//! Soft likelihood operators over complex-valued evidence.
//!
//! The strict likelihood of independent evidence is the product of all
//! source probabilities, so a single low-modulus source collapses it.
//! The soft variant tempers this: sources are ranked by modulus, the
//! running (cumulative) products `Prod(1) … Prod(n)` over that ranking
//! are formed, and an attitudinal weight vector blends them:
//!
//! ```text
//! L(α) = Σ_{i=1..n} ω_i(α) · Prod(i)
//! ```
//!
//! `α → 0⁺` recovers the strict product `Prod(n)`; `α → 1⁻` keeps only
//! the single strongest source. Every evaluation returns a full
//! [`LikelihoodTrace`] so the ranking, products, and weights that
//! produced a result can be audited.
//!
//! [`quantum_owa_direct`] is the related operator that blends the sorted
//! probabilities themselves instead of their running products. For
//! evidence with all angles zero both operators degenerate exactly to
//! their classical real-valued counterparts.

use crate::error::{Error, Result};
use crate::evidence::EvidenceSet;
use crate::owa::{attitudinal_weights, AttitudeParameter, WeightVector};
use crate::qprob::QuantumProbability;

/// Evidence probabilities ranked by non-increasing modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedEvidence {
    ordered: Vec<QuantumProbability>,
    permutation: Vec<usize>,
}

impl SortedEvidence {
    /// Probabilities in non-increasing modulus order.
    pub fn ordered(&self) -> &[QuantumProbability] {
        &self.ordered
    }

    /// Maps sorted position to the original 0-based source index; a
    /// bijection on `0..n`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Number of ranked sources.
    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    /// Always false: built from a non-empty evidence set.
    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }
}

/// Ranks evidence by descending modulus. The sort is stable: equal
/// moduli keep their original relative order, so traces are
/// deterministic.
pub fn sort_by_modulus(evidence: &EvidenceSet) -> SortedEvidence {
    let mut permutation: Vec<usize> = (0..evidence.len()).collect();
    let moduli: Vec<f64> = evidence.probabilities().map(|p| p.modulus()).collect();
    permutation.sort_by(|&a, &b| moduli[b].total_cmp(&moduli[a]));
    let ordered = permutation
        .iter()
        .map(|&i| evidence.get(i).expect("permutation index in range").1)
        .collect();
    SortedEvidence { ordered, permutation }
}

/// Running complex products over the ranked evidence: element `i` is the
/// product of the `i + 1` largest-modulus probabilities.
pub fn cumulative_products(sorted: &SortedEvidence) -> Vec<QuantumProbability> {
    sorted
        .ordered
        .iter()
        .scan(QuantumProbability::ONE, |acc, &p| {
            *acc = *acc * p;
            Some(*acc)
        })
        .collect()
}

/// The strict product likelihood: the product of all source
/// probabilities. Order-independent, since complex multiplication
/// commutes.
pub fn product_likelihood(evidence: &EvidenceSet) -> QuantumProbability {
    evidence
        .probabilities()
        .fold(QuantumProbability::ONE, |acc, p| acc * p)
}

/// Full audit of one soft-likelihood evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct LikelihoodTrace {
    sorted: SortedEvidence,
    cumulative_products: Vec<QuantumProbability>,
    weights: WeightVector,
    result: QuantumProbability,
}

impl LikelihoodTrace {
    /// The modulus ranking the evaluation used.
    pub fn sorted(&self) -> &SortedEvidence {
        &self.sorted
    }

    /// `Prod(1) … Prod(n)` over the ranking.
    pub fn cumulative_products(&self) -> &[QuantumProbability] {
        &self.cumulative_products
    }

    /// The attitudinal weights applied to the products.
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// The blended likelihood `Σ ω_i · Prod(i)`.
    pub fn result(&self) -> QuantumProbability {
        self.result
    }

    /// Modulus of the blended likelihood.
    pub fn result_modulus(&self) -> f64 {
        self.result.modulus()
    }
}

/// Evaluates the soft likelihood of `evidence` under `attitude`,
/// returning the full trace.
///
/// The result is the attitudinal blend of the cumulative products of the
/// modulus-ranked evidence. With [`AttitudeParameter::MIN_LIMIT`] it
/// equals [`product_likelihood`].
pub fn quantum_soft_likelihood(
    evidence: &EvidenceSet,
    attitude: AttitudeParameter,
) -> LikelihoodTrace {
    let sorted = sort_by_modulus(evidence);
    let products = cumulative_products(&sorted);
    let weights =
        attitudinal_weights(evidence.len(), attitude).expect("evidence sets are non-empty");
    let result = products
        .iter()
        .zip(weights.iter())
        .fold(QuantumProbability::ZERO, |acc, (&p, w)| acc.plus(p.scaled(w)));
    LikelihoodTrace { sorted, cumulative_products: products, weights, result }
}

/// The ordered weighted average of the ranked probabilities themselves,
/// `Σ ω_i · p'_i`, with no products involved.
///
/// For all-real evidence this equals [`classical_owa`] on the real
/// parts.
///
/// [`classical_owa`]: crate::owa::classical_owa
pub fn quantum_owa_direct(
    evidence: &EvidenceSet,
    attitude: AttitudeParameter,
) -> QuantumProbability {
    let sorted = sort_by_modulus(evidence);
    let weights =
        attitudinal_weights(evidence.len(), attitude).expect("evidence sets are non-empty");
    sorted
        .ordered
        .iter()
        .zip(weights.iter())
        .fold(QuantumProbability::ZERO, |acc, (&p, w)| acc.plus(p.scaled(w)))
}

/// The soft likelihood of plain real probabilities in `[0, 1]`.
///
/// Evaluates [`quantum_soft_likelihood`] over zero-angle evidence; the
/// imaginary part is exactly zero there, so only the real part is
/// returned.
pub fn classical_soft_likelihood(values: &[f64], attitude: AttitudeParameter) -> Result<f64> {
    for &value in values {
        if !value.is_finite() {
            return Err(Error::NonFinite { name: "value", value });
        }
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::ValueOutOfRange { value });
        }
    }
    let evidence = EvidenceSet::from_probabilities(
        values
            .iter()
            .map(|&v| QuantumProbability::from_cartesian(v, 0.0).expect("v is in [0, 1]"))
            .collect::<Vec<_>>(),
    )?;
    let trace = quantum_soft_likelihood(&evidence, attitude);
    debug_assert_eq!(trace.result().im(), 0.0);
    Ok(trace.result().re())
}

/// One grid point of an attitude sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub likelihood: QuantumProbability,
    pub modulus: f64,
}

/// Soft-likelihood values over a strictly increasing `α` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Grid rows in increasing `α` order.
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// True when the grid produced no points.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Evaluates the soft likelihood over the grid `start, start + step, …`
/// up to and including `end` (within a relative step tolerance, so a
/// grid like `0.05 … 0.95` lands exactly on its endpoint despite
/// round-off).
///
/// Requires `0 < start ≤ end < 1` and `step > 0`. Grid points are
/// generated as integer multiples of `step` from `start`; rows are
/// emitted in grid order.
pub fn alpha_sweep(
    evidence: &EvidenceSet,
    start: f64,
    end: f64,
    step: f64,
) -> Result<SweepResult> {
    let range_err = Error::InvalidRange { start, end, step };
    if !(start.is_finite() && end.is_finite() && step.is_finite()) {
        return Err(range_err);
    }
    if !(0.0 < start && start <= end && end < 1.0 && step > 0.0) {
        return Err(range_err);
    }

    let slack = step * 1e-9;
    let count = ((end + slack - start) / step).floor() as usize;
    let mut rows = Vec::with_capacity(count + 1);
    let mut last_alpha = f64::NEG_INFINITY;
    for k in 0..=count {
        let alpha = start + k as f64 * step;
        if alpha > end + slack || alpha >= 1.0 {
            break;
        }
        // A step below float resolution cannot advance the grid; skip
        // rather than emit a duplicate abscissa.
        if alpha <= last_alpha {
            continue;
        }
        last_alpha = alpha;
        let attitude = AttitudeParameter::new(alpha)?;
        let trace = quantum_soft_likelihood(evidence, attitude);
        rows.push(SweepRow {
            alpha,
            likelihood: trace.result(),
            modulus: trace.result_modulus(),
        });
    }
    Ok(SweepResult { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn qp(re: f64, im: f64) -> QuantumProbability {
        QuantumProbability::from_cartesian(re, im).unwrap()
    }

    /// The five-source worked example used throughout the tests.
    fn five_sources() -> EvidenceSet {
        EvidenceSet::from_probabilities([
            qp(0.3, -0.7),
            qp(0.4, -0.9),
            qp(0.5, 0.3),
            qp(0.6, 0.8),
            qp(0.2, 0.5),
        ])
        .unwrap()
    }

    fn alpha(a: f64) -> AttitudeParameter {
        AttitudeParameter::new(a).unwrap()
    }

    fn assert_close(p: QuantumProbability, re: f64, im: f64, eps: f64) {
        assert_abs_diff_eq!(p.re(), re, epsilon = eps);
        assert_abs_diff_eq!(p.im(), im, epsilon = eps);
    }

    #[test]
    fn ranking_of_the_five_sources() {
        let sorted = sort_by_modulus(&five_sources());
        assert_eq!(sorted.permutation(), &[3, 1, 0, 2, 4]);
        assert_abs_diff_eq!(sorted.ordered()[0].modulus(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn single_source_sorts_to_itself() {
        let e = EvidenceSet::from_probabilities([qp(0.2, 0.1)]).unwrap();
        let sorted = sort_by_modulus(&e);
        assert_eq!(sorted.permutation(), &[0]);
        assert_eq!(sorted.ordered(), &[qp(0.2, 0.1)]);
    }

    #[test]
    fn equal_moduli_keep_source_order() {
        let e = EvidenceSet::from_probabilities([qp(0.6, 0.8), qp(0.8, 0.6)]).unwrap();
        let sorted = sort_by_modulus(&e);
        assert_eq!(sorted.permutation(), &[0, 1]);
        assert_eq!(sorted.ordered()[0], qp(0.6, 0.8));
    }

    #[test]
    fn running_products_of_the_five_sources() {
        let products = cumulative_products(&sort_by_modulus(&five_sources()));
        let expected = [
            (0.6, 0.8),
            (0.96, -0.22),
            (0.134, -0.738),
            (0.2884, -0.3288),
            (0.2221, 0.0784),
        ];
        assert_eq!(products.len(), 5);
        for (got, (re, im)) in products.iter().zip(expected) {
            assert_close(*got, re, im, 1e-4);
        }
    }

    #[test]
    fn products_of_unit_evidence_stay_unit() {
        let e = EvidenceSet::from_probabilities(vec![QuantumProbability::ONE; 4]).unwrap();
        for p in cumulative_products(&sort_by_modulus(&e)) {
            assert_eq!(p, QuantumProbability::ONE);
        }
    }

    // Independent log-sum oracle: |Prod(i)| must equal exp(Σ log |p'_k|).
    #[test]
    fn product_moduli_match_log_sum_oracle() {
        let sorted = sort_by_modulus(&five_sources());
        let products = cumulative_products(&sorted);
        let mut log_sum = 0.0;
        for (i, p) in products.iter().enumerate() {
            log_sum += sorted.ordered()[i].modulus().ln();
            assert_abs_diff_eq!(p.modulus(), log_sum.exp(), epsilon = 1e-12);
        }
    }

    #[test]
    fn strict_product_of_real_halves() {
        let e = EvidenceSet::from_probabilities([qp(0.5, 0.0), qp(0.5, 0.0)]).unwrap();
        assert_close(product_likelihood(&e), 0.25, 0.0, 1e-15);
    }

    #[test]
    fn strict_product_of_the_five_sources() {
        assert_close(product_likelihood(&five_sources()), 0.2221, 0.0784, 1e-4);
    }

    #[test]
    fn zero_source_annihilates_the_product() {
        let e = EvidenceSet::from_probabilities([qp(0.9, 0.0), QuantumProbability::ZERO]).unwrap();
        assert_eq!(product_likelihood(&e), QuantumProbability::ZERO);
    }

    #[test]
    fn soft_likelihood_of_the_five_sources() {
        let e = five_sources();
        let cases = [
            (0.2, 0.2498, -0.1266),
            (0.5, 0.4409, -0.0817),
            (0.8, 0.565, 0.4273),
        ];
        for (a, re, im) in cases {
            let trace = quantum_soft_likelihood(&e, alpha(a));
            assert_close(trace.result(), re, im, 5e-4);
            assert_abs_diff_eq!(
                trace.result_modulus(),
                trace.result().modulus(),
                epsilon = 0.0
            );
        }
    }

    // Equality up to round-off: the min-limit blend is Prod(n) over the
    // ranking, the strict product multiplies in source order.
    #[test]
    fn min_limit_recovers_the_strict_product() {
        let e = five_sources();
        let trace = quantum_soft_likelihood(&e, AttitudeParameter::MIN_LIMIT);
        let strict = product_likelihood(&e);
        assert_close(trace.result(), strict.re(), strict.im(), 1e-12);
    }

    #[test]
    fn trace_is_internally_consistent() {
        let trace = quantum_soft_likelihood(&five_sources(), alpha(0.3));
        let mut acc = QuantumProbability::ZERO;
        for (p, w) in trace.cumulative_products().iter().zip(trace.weights().iter()) {
            acc = acc.plus(p.scaled(w));
        }
        assert_eq!(acc, trace.result());
        assert_eq!(trace.cumulative_products()[0], trace.sorted().ordered()[0]);
    }

    // Independent oracle: with uniform weights the direct blend is the
    // component-wise mean of the five probabilities, (0.4, 0.0).
    #[test]
    fn direct_blend_at_neutral_attitude_is_the_mean() {
        let e = five_sources();
        let got = quantum_owa_direct(&e, alpha(0.5));
        let n = e.len() as f64;
        let mean_re: f64 = e.probabilities().map(|p| p.re()).sum::<f64>() / n;
        let mean_im: f64 = e.probabilities().map(|p| p.im()).sum::<f64>() / n;
        assert_close(got, mean_re, mean_im, 1e-12);
        assert_close(got, 0.4, 0.0, 1e-12);
    }

    #[test]
    fn direct_blend_of_single_source_is_the_source() {
        let e = EvidenceSet::from_probabilities([qp(0.3, 0.4)]).unwrap();
        for a in [0.1, 0.5, 0.9] {
            assert_eq!(quantum_owa_direct(&e, alpha(a)), qp(0.3, 0.4));
        }
    }

    #[test]
    fn direct_blend_degenerates_to_classical_owa() {
        let values = [0.6, 0.4, 0.3, 0.5, 0.2];
        let e = EvidenceSet::from_probabilities(
            values.iter().map(|&v| qp(v, 0.0)).collect::<Vec<_>>(),
        )
        .unwrap();
        for a in [0.2, 0.5, 0.8] {
            let weights = attitudinal_weights(5, alpha(a)).unwrap();
            let classical = crate::owa::classical_owa(&values, &weights).unwrap();
            let quantum = quantum_owa_direct(&e, alpha(a));
            assert_abs_diff_eq!(quantum.re(), classical, epsilon = 1e-12);
            assert_eq!(quantum.im(), 0.0);
        }
    }

    #[test]
    fn classical_soft_likelihood_bounds_for_two_halves() {
        let v = [0.5, 0.5];
        let at_min = classical_soft_likelihood(&v, AttitudeParameter::MIN_LIMIT).unwrap();
        assert_abs_diff_eq!(at_min, 0.25, epsilon = 1e-15);
        for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let l = classical_soft_likelihood(&v, alpha(a)).unwrap();
            assert!((0.25..=0.5).contains(&l), "blend of 0.5 and 0.25 stays within");
        }
    }

    // Expected value fixed by the hand-computed five-term sum
    // (0.6 + 0.3 + 0.12 + 0.036 + 0.0072) / 5 = 0.21264.
    #[test]
    fn classical_soft_likelihood_against_hand_sum() {
        let got = classical_soft_likelihood(&[0.6, 0.4, 0.3, 0.5, 0.2], alpha(0.5)).unwrap();
        assert_abs_diff_eq!(got, 0.21264, epsilon = 1e-12);
    }

    #[test]
    fn classical_soft_likelihood_of_single_value() {
        for v in [0.0, 0.37, 1.0] {
            for a in [0.1, 0.5, 0.9] {
                assert_eq!(classical_soft_likelihood(&[v], alpha(a)).unwrap(), v);
            }
        }
    }

    #[test]
    fn classical_soft_likelihood_rejects_bad_values() {
        assert!(matches!(
            classical_soft_likelihood(&[1.2], alpha(0.5)),
            Err(Error::ValueOutOfRange { .. })
        ));
        assert!(matches!(
            classical_soft_likelihood(&[], alpha(0.5)),
            Err(Error::EmptyEvidence)
        ));
    }

    #[test]
    fn sweep_covers_the_nineteen_point_grid() {
        let sweep = alpha_sweep(&five_sources(), 0.05, 0.95, 0.05).unwrap();
        assert_eq!(sweep.len(), 19);
        let alphas: Vec<f64> = sweep.rows().iter().map(|r| r.alpha).collect();
        assert!(alphas.windows(2).all(|w| w[0] < w[1]));
        assert_abs_diff_eq!(alphas[0], 0.05, epsilon = 1e-12);
        assert_abs_diff_eq!(alphas[18], 0.95, epsilon = 1e-12);
    }

    #[test]
    fn degenerate_sweep_is_a_single_evaluation() {
        let e = five_sources();
        let sweep = alpha_sweep(&e, 0.5, 0.5, 0.05).unwrap();
        assert_eq!(sweep.len(), 1);
        let direct = quantum_soft_likelihood(&e, alpha(0.5));
        assert_eq!(sweep.rows()[0].likelihood, direct.result());
    }

    #[test]
    fn sweep_of_real_evidence_stays_real() {
        let e = EvidenceSet::from_probabilities([qp(0.9, 0.0), qp(0.4, 0.0), qp(0.7, 0.0)])
            .unwrap();
        let sweep = alpha_sweep(&e, 0.1, 0.9, 0.1).unwrap();
        assert!(sweep.rows().iter().all(|r| r.likelihood.im() == 0.0));
    }

    #[test]
    fn sweep_rejects_bad_ranges() {
        let e = five_sources();
        for (s, t, d) in [
            (0.9, 0.1, 0.05),
            (0.0, 0.5, 0.1),
            (0.5, 1.0, 0.1),
            (0.1, 0.9, 0.0),
            (0.1, 0.9, -0.1),
            (f64::NAN, 0.9, 0.1),
        ] {
            assert!(matches!(
                alpha_sweep(&e, s, t, d),
                Err(Error::InvalidRange { .. })
            ));
        }
    }
}
