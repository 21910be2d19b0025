//! The spectral threshold theta(k, n) for k-extendability, certification of
//! graphs against it, the excluded graph and the extremal families attaining
//! the bound, sharpness verification, and falsification sweeps.
//!
//! For even n >= 2k + 4 the theorem reads: a connected graph G of order n
//! other than K_{2k} v (K_{n-2k-1} u K_1) is k-extendable whenever
//! q(G) > theta(k, n), where theta(k, n) is the largest root of
//!   x^3 - (3n + 2k - 7) x^2 + (2n^2 + 6kn - 7n - 24k) x
//!       - 2 (2k + 1)(n - 3)(n - 4)
//! except at n = 2k + 6 and n = 2k + 8, where the bound is
//! 3k + 4 + sqrt(k^2 + 12k + 12) and 3k + 6 + sqrt(k^2 + 16k + 24).

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::extendability::{
    deficiency_witness_with, is_k_extendable_direct_with, is_k_extendable_lemma_with,
    DeficiencyWitness, DirectOutcome, ExtendabilityConfig, ExtendabilityError, LemmaOutcome,
};
use crate::graph::{build_family, FamilyGraph, Graph};
use crate::matching::has_one_factor;
use crate::spectral::{
    largest_real_root, q_spectral_radius_with, Polynomial, SolverConfig, SpectralError,
};

#[derive(Debug, Error, PartialEq)]
pub enum TheoremError {
    #[error("order n = {0} must be even")]
    OddOrder(usize),
    #[error("order n = {n} must be at least 2k + 4 = {min} for k = {k}")]
    OrderTooSmall { k: usize, n: usize, min: usize },
    #[error("n = {n} falls in a special case (n = 2k + 6 or n = 2k + 8 for k = {k}); use the dispatching threshold")]
    SpecialCaseOrder { k: usize, n: usize },
    #[error("the excluded graph is disconnected for k = 0")]
    ExceptionUndefinedForKZero,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Which branch of the threshold definition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThresholdCase {
    #[serde(rename = "general")]
    General,
    #[serde(rename = "n_eq_2k6")]
    NEq2k6,
    #[serde(rename = "n_eq_2k8")]
    NEq2k8,
}

impl std::fmt::Display for ThresholdCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThresholdCase::General => write!(f, "general"),
            ThresholdCase::NEq2k6 => write!(f, "n_eq_2k6"),
            ThresholdCase::NEq2k8 => write!(f, "n_eq_2k8"),
        }
    }
}

/// The (k, n) threshold together with its defining polynomial: the cubic in
/// the general case, the quadratic whose largest root is the closed-form surd
/// in the two special cases.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdSpec {
    pub k: usize,
    pub n: usize,
    pub case: ThresholdCase,
    pub polynomial: Polynomial,
    pub value: f64,
}

/// Integer coefficients (ascending) of the general-case cubic.
pub fn theta_cubic_coefficients(k: usize, n: usize) -> [i64; 4] {
    let (k, n) = (k as i64, n as i64);
    [
        -2 * (2 * k + 1) * (n - 3) * (n - 4),
        2 * n * n + 6 * k * n - 7 * n - 24 * k,
        -(3 * n + 2 * k - 7),
        1,
    ]
}

fn check_even_and_size(k: usize, n: usize) -> Result<(), TheoremError> {
    if n % 2 != 0 {
        return Err(TheoremError::OddOrder(n));
    }
    if n < 2 * k + 4 {
        return Err(TheoremError::OrderTooSmall {
            k,
            n,
            min: 2 * k + 4,
        });
    }
    Ok(())
}

/// The general-case threshold: the largest root of the cubic, for even
/// n >= 2k + 4 with n not in {2k + 6, 2k + 8}.
pub fn theta(k: usize, n: usize) -> Result<f64, TheoremError> {
    check_even_and_size(k, n)?;
    if n == 2 * k + 6 || n == 2 * k + 8 {
        return Err(TheoremError::SpecialCaseOrder { k, n });
    }
    let poly = Polynomial::from_int_coeffs(&theta_cubic_coefficients(k, n))?;
    Ok(largest_real_root(&poly, 0.0, 2.0 * (n as f64 - 1.0))?)
}

/// Threshold dispatch over all three cases.
pub fn threshold(k: usize, n: usize) -> Result<ThresholdSpec, TheoremError> {
    check_even_and_size(k, n)?;
    let kf = k as f64;
    if n == 2 * k + 6 {
        let value = 3.0 * kf + 4.0 + (kf * kf + 12.0 * kf + 12.0).sqrt();
        let ki = k as i64;
        let polynomial =
            Polynomial::from_int_coeffs(&[(2 * ki + 2) * (4 * ki + 2), -(6 * ki + 8), 1])?;
        return Ok(ThresholdSpec {
            k,
            n,
            case: ThresholdCase::NEq2k6,
            polynomial,
            value,
        });
    }
    if n == 2 * k + 8 {
        let value = 3.0 * kf + 6.0 + (kf * kf + 16.0 * kf + 24.0).sqrt();
        let ki = k as i64;
        let polynomial =
            Polynomial::from_int_coeffs(&[(2 * ki + 3) * (4 * ki + 4), -(6 * ki + 12), 1])?;
        return Ok(ThresholdSpec {
            k,
            n,
            case: ThresholdCase::NEq2k8,
            polynomial,
            value,
        });
    }
    let polynomial = Polynomial::from_int_coeffs(&theta_cubic_coefficients(k, n))?;
    let value = largest_real_root(&polynomial, 0.0, 2.0 * (n as f64 - 1.0))?;
    Ok(ThresholdSpec {
        k,
        n,
        case: ThresholdCase::General,
        polynomial,
        value,
    })
}

/// The excluded graph K_{2k} v (K_{n-2k-1} u K_1). Rejected for k = 0, where
/// the construction degenerates to the disconnected K_{n-1} u K_1.
pub fn exception_graph(k: usize, n: usize) -> Result<FamilyGraph, TheoremError> {
    check_even_and_size(k, n)?;
    if k == 0 {
        return Err(TheoremError::ExceptionUndefinedForKZero);
    }
    Ok(build_family(2 * k, &[n - 2 * k - 1, 1]))
}

/// Structural test for the excluded graph: some vertex of degree exactly 2k
/// whose removal leaves a complete graph. No general isomorphism needed.
pub fn is_exception(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < 2 || 2 * k > n - 2 {
        return false;
    }
    'candidates: for v in 0..n {
        if g.degree(v) != 2 * k {
            continue;
        }
        for a in 0..n {
            if a == v {
                continue;
            }
            for b in (a + 1)..n {
                if b == v {
                    continue;
                }
                if !g.has_edge(a, b) {
                    continue 'candidates;
                }
            }
        }
        return true;
    }
    false
}

/// The extremal graph attaining the threshold: K_{2k+1} v (K_{n-2k-3} u 2K_1)
/// in the general case, K_{2k+2} v 4K_1 at n = 2k + 6, K_{2k+3} v 5K_1 at
/// n = 2k + 8.
pub fn extremal_graph(k: usize, n: usize) -> Result<FamilyGraph, TheoremError> {
    check_even_and_size(k, n)?;
    Ok(if n == 2 * k + 6 {
        build_family(2 * k + 2, &[1, 1, 1, 1])
    } else if n == 2 * k + 8 {
        build_family(2 * k + 3, &[1, 1, 1, 1, 1])
    } else {
        build_family(2 * k + 1, &[n - 2 * k - 3, 1, 1])
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ExtendableByTheorem,
    Exception,
    PreconditionFailed,
    Inconclusive,
}

/// Outcome of applying the threshold test to a graph.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub k: usize,
    pub n: usize,
    pub q_value: Option<f64>,
    pub threshold: Option<f64>,
    pub margin: Option<f64>,
    pub reasons: Vec<String>,
}

/// Tolerances for certification.
#[derive(Debug, Clone)]
pub struct CertifyConfig {
    /// Strict inequality q > theta is certified only with at least this
    /// numeric margin; anything within it is Inconclusive.
    pub decision_epsilon: f64,
    pub solver: SolverConfig,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            decision_epsilon: 1e-8,
            solver: SolverConfig::default(),
        }
    }
}

pub fn certify(g: &Graph, k: usize) -> Certificate {
    certify_with(g, k, &CertifyConfig::default())
}

pub fn certify_with(g: &Graph, k: usize, cfg: &CertifyConfig) -> Certificate {
    let n = g.vertex_count();
    let mut reasons = Vec::new();

    let connected = n >= 1 && g.is_connected().unwrap_or(false);
    if n == 0 {
        reasons.push("graph is empty".to_string());
    } else if !connected {
        reasons.push("graph is disconnected".to_string());
    }
    if n % 2 != 0 {
        reasons.push(format!("order {n} is odd"));
    }
    if n < 2 * k + 4 {
        reasons.push(format!("order {n} is below 2k + 4 = {}", 2 * k + 4));
    }
    if !reasons.is_empty() {
        return Certificate {
            verdict: Verdict::PreconditionFailed,
            k,
            n,
            q_value: None,
            threshold: None,
            margin: None,
            reasons,
        };
    }

    if is_exception(g, k) {
        return Certificate {
            verdict: Verdict::Exception,
            k,
            n,
            q_value: None,
            threshold: None,
            margin: None,
            reasons: vec![format!(
                "graph is the excluded K_{} v (K_{} u K_1)",
                2 * k,
                n - 2 * k - 1
            )],
        };
    }

    let spec = match threshold(k, n) {
        Ok(spec) => spec,
        Err(err) => {
            return Certificate {
                verdict: Verdict::PreconditionFailed,
                k,
                n,
                q_value: None,
                threshold: None,
                margin: None,
                reasons: vec![err.to_string()],
            };
        }
    };
    let q = match q_spectral_radius_with(g, &cfg.solver) {
        Ok(r) => r,
        Err(err) => {
            return Certificate {
                verdict: Verdict::Inconclusive,
                k,
                n,
                q_value: None,
                threshold: Some(spec.value),
                margin: None,
                reasons: vec![format!("eigensolver failed: {err}")],
            };
        }
    };
    let margin = q.value - spec.value;
    let verdict = if margin > cfg.decision_epsilon {
        Verdict::ExtendableByTheorem
    } else {
        Verdict::Inconclusive
    };
    let reasons = match verdict {
        Verdict::ExtendableByTheorem => vec![format!(
            "q = {:.12} exceeds theta({k}, {n}) = {:.12} ({})",
            q.value, spec.value, spec.case
        )],
        _ => {
            if margin.abs() <= cfg.decision_epsilon {
                vec![format!(
                    "q = {:.12} is within epsilon of theta({k}, {n}) = {:.12}; strict inequality cannot be certified",
                    q.value, spec.value
                )]
            } else {
                vec![format!(
                    "q = {:.12} does not exceed theta({k}, {n}) = {:.12}; the threshold test is silent",
                    q.value, spec.value
                )]
            }
        }
    };
    Certificate {
        verdict,
        k,
        n,
        q_value: Some(q.value),
        threshold: Some(spec.value),
        margin: Some(margin),
        reasons,
    }
}

/// Sharpness check for one (k, n): the extremal graph must attain the
/// threshold to 1e-9 and fail k-extendability with the join-core block as
/// witness.
#[derive(Debug, Clone, Serialize)]
pub struct SharpnessReport {
    pub k: usize,
    pub n: usize,
    pub case: ThresholdCase,
    pub graph6: String,
    pub q: f64,
    pub threshold: f64,
    pub gap: f64,
    pub attains_threshold: bool,
    pub witness: DeficiencyWitness,
    pub witness_is_core_block: bool,
    pub direct_not_extendable: bool,
    /// None for k = 0, where the odd-component characterization is replaced
    /// by the 1-factor test inside `direct_not_extendable`.
    pub lemma_not_extendable: Option<bool>,
    pub pass: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct SharpnessConfig {
    pub certify: CertifyConfig,
    pub exact: ExtendabilityConfig,
}

pub fn verify_sharpness(k: usize, n: usize) -> Result<SharpnessReport, TheoremError> {
    verify_sharpness_with(k, n, &SharpnessConfig::default())
}

pub fn verify_sharpness_with(
    k: usize,
    n: usize,
    cfg: &SharpnessConfig,
) -> Result<SharpnessReport, TheoremError> {
    let spec = threshold(k, n)?;
    let family = extremal_graph(k, n)?;
    let g = &family.graph;
    let mut failures = Vec::new();

    let q = q_spectral_radius_with(g, &cfg.certify.solver)?;
    let gap = (q.value - spec.value).abs();
    let attains_threshold = gap <= 1e-9;
    if !attains_threshold {
        failures.push(format!(
            "q = {:.15} differs from theta = {:.15} by {gap:.3e}",
            q.value, spec.value
        ));
    }

    // The defining witness is always the join core S; its removal leaves
    // 3, 4, or 5 odd components depending on the case.
    let core = family.core_block();
    let core_odd = g
        .odd_component_count(&core)
        .expect("core block is a subset of V(G)");
    if core_odd + 2 * k <= core.len() {
        failures.push(format!(
            "core block is not a violation: o = {core_odd}, |S| - 2k = {}",
            core.len() - 2 * k
        ));
    }

    let direct_not_extendable = match is_k_extendable_direct_with(g, k, &cfg.exact) {
        Ok(DirectOutcome::Extendable) => {
            failures.push("direct checker reports k-extendable".to_string());
            false
        }
        Ok(DirectOutcome::NotExtendable { .. }) => true,
        // For k >= 1 a missing 1-factor is itself a proof of non-extendability.
        Err(ExtendabilityError::NoOneFactor) => true,
        Err(err) => {
            failures.push(format!("direct checker failed: {err}"));
            false
        }
    };

    let (witness, witness_is_core_block, lemma_not_extendable) = if k == 0 {
        // The k = 0 witness is the Tutte-style violation at the core block.
        let witness = DeficiencyWitness {
            size: core.len(),
            odd_components: core_odd,
            k: 0,
            matching_in_s: crate::matching::Matching::empty(),
            s: core.clone(),
        };
        (witness, true, None)
    } else {
        match deficiency_witness_with(g, k, &cfg.exact) {
            Ok(Some(w)) => {
                let is_core = w.s == core;
                if !is_core {
                    failures.push(format!(
                        "canonical witness {:?} is not the join-core block",
                        w.s.to_sorted_vec()
                    ));
                }
                (w, is_core, Some(true))
            }
            Ok(None) => {
                failures.push("odd-component checker reports k-extendable".to_string());
                let witness = DeficiencyWitness {
                    size: core.len(),
                    odd_components: core_odd,
                    k,
                    matching_in_s: crate::matching::Matching::empty(),
                    s: core.clone(),
                };
                (witness, false, Some(false))
            }
            Err(err) => {
                failures.push(format!("odd-component checker failed: {err}"));
                let witness = DeficiencyWitness {
                    size: core.len(),
                    odd_components: core_odd,
                    k,
                    matching_in_s: crate::matching::Matching::empty(),
                    s: core.clone(),
                };
                (witness, false, None)
            }
        }
    };

    let pass = failures.is_empty();
    Ok(SharpnessReport {
        k,
        n,
        case: spec.case,
        graph6: g.to_graph6(),
        q: q.value,
        threshold: spec.value,
        gap,
        attains_threshold,
        witness,
        witness_is_core_block,
        direct_not_extendable,
        lemma_not_extendable,
        pass,
        failures,
    })
}

/// One graph's outcome inside a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub verdict: Verdict,
    pub q: Option<f64>,
    pub theta: Option<f64>,
    /// Exact checker agreement, evaluated when the verdict certifies
    /// extendability: (direct, lemma).
    pub exact_direct: Option<bool>,
    pub exact_lemma: Option<bool>,
    pub counterexample: bool,
    pub witness: Option<DeficiencyWitness>,
    pub budget_error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub k: usize,
    pub total: usize,
    pub extendable_by_theorem: usize,
    pub exception: usize,
    pub precondition_failed: usize,
    pub inconclusive: usize,
    pub exact_checked: usize,
    pub counterexamples: usize,
    pub budget_errors: usize,
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    /// Compact CSV of the per-graph records.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,n,k,verdict,q,theta,exact_direct,exact_lemma,counterexample\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{:?},{},{},{},{},{}\n",
                r.graph6,
                r.n,
                r.k,
                r.verdict,
                r.q.map(|v| format!("{v:.12}")).unwrap_or_default(),
                r.theta.map(|v| format!("{v:.12}")).unwrap_or_default(),
                r.exact_direct.map(|b| b.to_string()).unwrap_or_default(),
                r.exact_lemma.map(|b| b.to_string()).unwrap_or_default(),
                r.counterexample,
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepConfig {
    pub certify: CertifyConfig,
    pub exact: ExtendabilityConfig,
    /// Run the exact checkers on certified graphs (the falsification step).
    pub check_exact: bool,
}

/// Certifies every graph; wherever the verdict is ExtendableByTheorem and
/// exact checking is enabled, confirms with both exact deciders. A certified
/// graph the exact checkers reject is a counterexample (there must be none).
/// Graphs are processed in parallel; records keep input order.
pub fn sweep(corpus: &[Graph], k: usize, cfg: &SweepConfig) -> SweepReport {
    let records: Vec<SweepRecord> = corpus
        .par_iter()
        .map(|g| sweep_one(g, k, cfg))
        .collect();
    let mut report = SweepReport {
        k,
        total: records.len(),
        extendable_by_theorem: 0,
        exception: 0,
        precondition_failed: 0,
        inconclusive: 0,
        exact_checked: 0,
        counterexamples: 0,
        budget_errors: 0,
        records,
    };
    for r in &report.records {
        match r.verdict {
            Verdict::ExtendableByTheorem => report.extendable_by_theorem += 1,
            Verdict::Exception => report.exception += 1,
            Verdict::PreconditionFailed => report.precondition_failed += 1,
            Verdict::Inconclusive => report.inconclusive += 1,
        }
        if r.exact_direct.is_some() || r.exact_lemma.is_some() {
            report.exact_checked += 1;
        }
        if r.counterexample {
            report.counterexamples += 1;
        }
        if r.budget_error.is_some() {
            report.budget_errors += 1;
        }
    }
    report
}

fn sweep_one(g: &Graph, k: usize, cfg: &SweepConfig) -> SweepRecord {
    let cert = certify_with(g, k, &cfg.certify);
    let mut record = SweepRecord {
        graph6: g.to_graph6(),
        n: g.vertex_count(),
        k,
        verdict: cert.verdict,
        q: cert.q_value,
        theta: cert.threshold,
        exact_direct: None,
        exact_lemma: None,
        counterexample: false,
        witness: None,
        budget_error: None,
    };
    if cfg.check_exact && cert.verdict == Verdict::ExtendableByTheorem {
        match is_k_extendable_direct_with(g, k, &cfg.exact) {
            Ok(outcome) => record.exact_direct = Some(outcome.is_extendable()),
            Err(ExtendabilityError::NoOneFactor) => record.exact_direct = Some(false),
            Err(err @ ExtendabilityError::Matching(_))
            | Err(err @ ExtendabilityError::ScanCapExceeded { .. }) => {
                record.budget_error = Some(err.to_string());
            }
            Err(err) => record.budget_error = Some(err.to_string()),
        }
        if k >= 1 {
            match is_k_extendable_lemma_with(g, k, &cfg.exact) {
                Ok(outcome) => {
                    if let LemmaOutcome::NotExtendable(w) = &outcome {
                        record.witness = Some(w.clone());
                    }
                    record.exact_lemma = Some(outcome.is_extendable());
                }
                Err(err @ ExtendabilityError::ScanCapExceeded { .. }) => {
                    record.budget_error = Some(err.to_string());
                }
                Err(err) => record.budget_error = Some(err.to_string()),
            }
        }
        record.counterexample = record.exact_direct == Some(false)
            || record.exact_lemma == Some(false);
    }
    record
}

/// Direct non-extendability decision usable on any even-order graph: a graph
/// without a 1-factor is not k-extendable by definition.
pub fn is_k_extendable_exact(
    g: &Graph,
    k: usize,
    cfg: &ExtendabilityConfig,
) -> Result<bool, ExtendabilityError> {
    if k == 0 {
        let n = g.vertex_count();
        if n % 2 != 0 {
            return Err(ExtendabilityError::OddOrder(n));
        }
        return Ok(has_one_factor(g));
    }
    match is_k_extendable_direct_with(g, k, cfg) {
        Ok(outcome) => Ok(outcome.is_extendable()),
        Err(ExtendabilityError::NoOneFactor) => Ok(false),
        Err(err) => Err(err),
    }
}
