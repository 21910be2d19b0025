//! Acceptance suite. Each criterion is one test that runs the full stated
//! workload at the stated tolerance, printing one pass/fail line (visible
//! with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use qextend::extendability::{
    deficiency_witness_with, is_k_extendable_direct_with, is_k_extendable_lemma_with,
    ExtendabilityConfig,
};
use qextend::graph::{build_family, FamilyGraph, Graph, VertexSet};
use qextend::random::{connected_corpus, connected_one_factor_corpus};
use qextend::spectral::{
    char_poly, largest_real_root, q_spectral_radius, quotient_matrix, signless_laplacian,
};
use qextend::theorem::{
    certify, exception_graph, extremal_graph, is_exception, sweep, theta, threshold,
    verify_sharpness_with, SharpnessConfig, SweepConfig,
};

struct Criterion {
    label: &'static str,
    started: Instant,
    limit: Duration,
}

impl Criterion {
    fn start(label: &'static str, limit_secs: u64) -> Self {
        Criterion {
            label,
            started: Instant::now(),
            limit: Duration::from_secs(limit_secs),
        }
    }

    fn finish(self, detail: String) {
        let elapsed = self.started.elapsed();
        println!(
            "{}: PASS — {} ({:.2?} of {:?} budget)",
            self.label, detail, elapsed, self.limit
        );
        assert!(
            elapsed < self.limit,
            "{} exceeded its runtime budget: {elapsed:.2?}",
            self.label
        );
    }
}

/// Criterion 1: q(K_n) = 2n - 2 to 1e-9 for 2 <= n <= 50.
#[test]
fn criterion_01_complete_graph_closed_form() {
    let c = Criterion::start("criterion 1 (closed-form q of complete graphs)", 5);
    let mut worst = 0.0f64;
    for n in 2..=50usize {
        let r = q_spectral_radius(&Graph::complete(n)).unwrap();
        let err = (r.value - (2.0 * n as f64 - 2.0)).abs();
        worst = worst.max(err);
        assert!(err <= 1e-9, "n = {n}: error {err:e}");
    }
    c.finish(format!("49 orders checked, worst error {worst:.2e}"));
}

/// Criterion 2: the two surd-valued families match the eigensolver for
/// 0 <= k <= 10.
#[test]
fn criterion_02_special_case_thresholds() {
    let c = Criterion::start("criterion 2 (surd thresholds via eigensolver)", 10);
    let mut worst = 0.0f64;
    for k in 0..=10usize {
        let kf = k as f64;
        let g = build_family(2 * k + 2, &[1; 4]).graph;
        let expected = 3.0 * kf + 4.0 + (kf * kf + 12.0 * kf + 12.0).sqrt();
        let err = (q_spectral_radius(&g).unwrap().value - expected).abs();
        worst = worst.max(err);
        assert!(err <= 1e-9, "K_(2k+2) v 4K_1 at k = {k}: error {err:e}");

        let g = build_family(2 * k + 3, &[1; 5]).graph;
        let expected = 3.0 * kf + 6.0 + (kf * kf + 16.0 * kf + 24.0).sqrt();
        let err = (q_spectral_radius(&g).unwrap().value - expected).abs();
        worst = worst.max(err);
        assert!(err <= 1e-9, "K_(2k+3) v 5K_1 at k = {k}: error {err:e}");
    }
    c.finish(format!("22 families checked, worst error {worst:.2e}"));
}

/// Criterion 3: general-case sharpness. The extremal graph attains theta to
/// 1e-9 and both exact checkers reject it with the join core as witness,
/// o(G - S) = 3 > 1.
#[test]
fn criterion_03_general_sharpness() {
    let c = Criterion::start("criterion 3 (general-case sharpness)", 60);
    // n reaches 26 at k = 5; raise the scan cap accordingly.
    let cfg = SharpnessConfig {
        exact: ExtendabilityConfig {
            subset_scan_max_n: 26,
            ..Default::default()
        },
        ..Default::default()
    };
    let mut cases = 0;
    for k in 0..=5usize {
        for n in (2 * k + 4..=2 * k + 16).step_by(2) {
            if n == 2 * k + 6 || n == 2 * k + 8 {
                continue;
            }
            let report = verify_sharpness_with(k, n, &cfg).unwrap();
            assert!(
                report.pass,
                "k={k} n={n}: {:?}",
                report.failures
            );
            assert!(report.gap <= 1e-9, "k={k} n={n}: gap {:e}", report.gap);
            assert!(report.witness_is_core_block, "k={k} n={n}");
            assert_eq!(report.witness.odd_components, 3, "k={k} n={n}");
            assert_eq!(report.witness.size, 2 * k + 1, "k={k} n={n}");
            assert!(report.direct_not_extendable, "k={k} n={n}");
            if k >= 1 {
                assert_eq!(report.lemma_not_extendable, Some(true), "k={k} n={n}");
            }
            cases += 1;
        }
    }
    c.finish(format!("{cases} (k, n) cases sharp with core-block witnesses"));
}

/// Criterion 4: the excluded family is detected structurally and rejected by
/// the exact checkers with the K_2k block as witness.
#[test]
fn criterion_04_exception_behavior() {
    let c = Criterion::start("criterion 4 (excluded-graph behavior)", 30);
    let cfg = ExtendabilityConfig::default();
    let mut cases = 0;
    for k in 1..=4usize {
        for n in [2 * k + 4, 2 * k + 6, 2 * k + 8, 2 * k + 10] {
            let fam = exception_graph(k, n).unwrap();
            let g = &fam.graph;
            assert!(is_exception(g, k), "k={k} n={n}");

            let direct = is_k_extendable_direct_with(g, k, &cfg).unwrap();
            assert!(!direct.is_extendable(), "k={k} n={n}: direct");

            let witness = deficiency_witness_with(g, k, &cfg)
                .unwrap()
                .unwrap_or_else(|| panic!("k={k} n={n}: no witness"));
            assert_eq!(
                witness.s,
                fam.core_block(),
                "k={k} n={n}: witness {:?}",
                witness.s.to_sorted_vec()
            );
            assert_eq!(witness.size, 2 * k);
            assert!(witness.odd_components > witness.size - 2 * k);
            assert!(witness.is_valid_for(g));
            cases += 1;
        }
    }
    c.finish(format!("{cases} excluded graphs detected and rejected"));
}

/// Criterion 5: the two exact deciders agree on 10^4 random connected
/// even-order graphs with a 1-factor, across every valid k >= 1.
#[test]
fn criterion_05_oracle_equivalence() {
    let c = Criterion::start("criterion 5 (exact-decider equivalence)", 300);
    let cfg = ExtendabilityConfig::default();
    let mut graphs = 0usize;
    let mut checks = 0usize;
    for (n, seed) in [(6usize, 0x0515_0006u64), (8, 0x0515_0008)] {
        for g in connected_one_factor_corpus(n, 5_000, seed) {
            graphs += 1;
            for k in 1..=(n - 2) / 2 {
                let direct = is_k_extendable_direct_with(&g, k, &cfg)
                    .unwrap()
                    .is_extendable();
                let lemma = is_k_extendable_lemma_with(&g, k, &cfg)
                    .unwrap()
                    .is_extendable();
                assert_eq!(direct, lemma, "disagreement on {} at k={k}", g.to_graph6());
                checks += 1;
            }
        }
    }
    assert!(graphs >= 10_000);
    c.finish(format!("{checks} checks over {graphs} graphs, zero disagreements"));
}

/// Criterion 6: soundness sweep. Wherever the threshold certifies
/// extendability, the exact checkers agree; zero counterexamples.
#[test]
fn criterion_06_soundness_sweep() {
    let c = Criterion::start("criterion 6 (threshold soundness sweep)", 600);
    let cfg = SweepConfig {
        check_exact: true,
        ..Default::default()
    };
    let mut total = 0usize;
    let mut certified = 0usize;

    // The criterion-5 style corpus at n in {6, 8}, every valid k.
    for (n, seed) in [(6usize, 0x0615_0006u64), (8, 0x0615_0008)] {
        let corpus = connected_one_factor_corpus(n, 5_000, seed);
        for k in 1..=(n - 2) / 2 {
            let report = sweep(&corpus, k, &cfg);
            assert_eq!(report.counterexamples, 0, "n={n} k={k}");
            assert_eq!(report.budget_errors, 0, "n={n} k={k}");
            total += report.total;
            certified += report.extendable_by_theorem;
        }
    }
    // Plus 10^3 random connected graphs at n in {10, 12}, k in {1, 2}.
    for (n, seed) in [(10usize, 0x0615_0010u64), (12, 0x0615_0012)] {
        let corpus = connected_corpus(n, 500, seed);
        for k in [1usize, 2] {
            let report = sweep(&corpus, k, &cfg);
            assert_eq!(report.counterexamples, 0, "n={n} k={k}");
            assert_eq!(report.budget_errors, 0, "n={n} k={k}");
            total += report.total;
            certified += report.extendable_by_theorem;
        }
    }
    c.finish(format!(
        "{total} certifications, {certified} certified-extendable, zero counterexamples"
    ));
}

fn merged_partition(fam: &FamilyGraph) -> Vec<VertexSet> {
    let n = fam.graph.vertex_count();
    let mut parts = Vec::new();
    let mut singletons = VertexSet::empty(n);
    for (i, block) in fam.blocks.iter().enumerate() {
        if (i == 0 && fam.core_size() > 0) || block.len() > 1 {
            parts.push(block.clone());
        } else {
            for v in block.iter() {
                singletons.insert(v);
            }
        }
    }
    if !singletons.is_empty() {
        parts.push(singletons);
    }
    parts
}

/// Criterion 7: for every family graph used in criteria 2-4, the largest
/// root of the exact-integer quotient characteristic polynomial matches the
/// full eigensolver within 1e-9.
#[test]
fn criterion_07_quotient_transfer() {
    let c = Criterion::start("criterion 7 (equitable quotient transfer)", 60);
    let mut families: Vec<FamilyGraph> = Vec::new();
    for k in 0..=10usize {
        families.push(build_family(2 * k + 2, &[1; 4]));
        families.push(build_family(2 * k + 3, &[1; 5]));
    }
    for k in 0..=5usize {
        for n in (2 * k + 4..=2 * k + 16).step_by(2) {
            if n == 2 * k + 6 || n == 2 * k + 8 {
                continue;
            }
            families.push(extremal_graph(k, n).unwrap());
        }
    }
    for k in 1..=4usize {
        for n in [2 * k + 4, 2 * k + 6, 2 * k + 8, 2 * k + 10] {
            families.push(exception_graph(k, n).unwrap());
        }
    }
    let count = families.len();
    let mut worst = 0.0f64;
    for fam in families {
        let n = fam.graph.vertex_count();
        let m = signless_laplacian(&fam.graph);
        let b = quotient_matrix(&m, &merged_partition(&fam)).unwrap();
        assert!(b.equitable);
        assert!(b.int_entries.is_some(), "quotient must be exactly integral");
        let p = char_poly(&b).unwrap();
        let root = largest_real_root(&p, 0.0, 2.0 * (n as f64 - 1.0)).unwrap();
        let q = q_spectral_radius(&fam.graph).unwrap().value;
        let err = (root - q).abs();
        worst = worst.max(err);
        assert!(err <= 1e-9, "family on {n} vertices: {err:e}");
    }
    c.finish(format!("{count} quotients transferred, worst error {worst:.2e}"));
}

/// Criterion 8: Perron block structure on 20 grid points: entries constant on
/// blocks to 1e-8, and the clique-row eigen-equation residual at most 1e-8.
#[test]
fn criterion_08_perron_structure() {
    let c = Criterion::start("criterion 8 (Perron block structure)", 60);
    let mut grid: Vec<(usize, usize, usize)> = Vec::new();
    for s in 1..=5usize {
        for (n1, t) in [(3usize, 2usize), (5, 3), (7, 4), (4, 1)] {
            grid.push((s, n1, t));
        }
    }
    assert_eq!(grid.len(), 20);
    let mut worst_dev = 0.0f64;
    let mut worst_res = 0.0f64;
    for (s, n1, t) in grid {
        let mut sizes = vec![n1];
        sizes.extend(std::iter::repeat(1).take(t));
        let fam = build_family(s, &sizes);
        let r = q_spectral_radius(&fam.graph).unwrap();
        for block in &fam.blocks {
            let vals: Vec<f64> = block.iter().map(|v| r.vector[v]).collect();
            let dev = vals.iter().cloned().fold(f64::MIN, f64::max)
                - vals.iter().cloned().fold(f64::MAX, f64::min);
            worst_dev = worst_dev.max(dev);
            assert!(dev <= 1e-8, "s={s} n1={n1} t={t}: deviation {dev:e}");
        }
        let y0 = r.vector[0];
        let y1 = r.vector[s];
        let residual = (r.value * y1 - s as f64 * y0 - (s as f64 + 2.0 * n1 as f64 - 2.0) * y1)
            .abs();
        worst_res = worst_res.max(residual);
        assert!(residual <= 1e-8, "s={s} n1={n1} t={t}: residual {residual:e}");
    }
    c.finish(format!(
        "20 grid points, worst block deviation {worst_dev:.2e}, worst residual {worst_res:.2e}"
    ));
}

/// Criterion 9: merging two odd cliques (n1 + 2, n2 - 2) strictly raises q.
#[test]
fn criterion_09_merge_monotonicity() {
    let c = Criterion::start("criterion 9 (clique-merge monotonicity)", 60);
    let mut cases = 0;
    let mut min_margin = f64::INFINITY;
    for s in 1..=6usize {
        for n1 in 3..=9usize {
            for n2 in 3..=n1 {
                let before = build_family(s, &[n1, n2]).graph;
                let after = build_family(s, &[n1 + 2, n2 - 2]).graph;
                let q_before = q_spectral_radius(&before).unwrap().value;
                let q_after = q_spectral_radius(&after).unwrap().value;
                let margin = q_after - q_before;
                min_margin = min_margin.min(margin);
                assert!(
                    margin > 1e-9,
                    "s={s} n1={n1} n2={n2}: margin {margin:e}"
                );
                cases += 1;
            }
        }
    }
    c.finish(format!("{cases} merges, smallest margin {min_margin:.3}"));
}

/// Criterion 10: identical configuration produces byte-identical JSON.
#[test]
fn criterion_10_determinism() {
    let c = Criterion::start("criterion 10 (byte-identical reports)", 120);

    fn report_bundle() -> String {
        let mut pieces = Vec::new();
        let cfg = SweepConfig {
            check_exact: true,
            ..Default::default()
        };
        for (n, seed) in [(6usize, 0xD_0006u64), (8, 0xD_0008)] {
            let corpus = connected_corpus(n, 150, seed);
            let report = sweep(&corpus, 1, &cfg);
            pieces.push(serde_json::to_string(&report).unwrap());
        }
        let sharp_cfg = SharpnessConfig::default();
        for (k, n) in [(0usize, 6usize), (0, 10), (1, 8), (1, 12), (2, 10)] {
            let report = verify_sharpness_with(k, n, &sharp_cfg).unwrap();
            pieces.push(serde_json::to_string(&report).unwrap());
        }
        for (k, n) in [(0usize, 4usize), (1, 10), (2, 12), (3, 14)] {
            pieces.push(serde_json::to_string(&threshold(k, n).unwrap()).unwrap());
        }
        pieces.push(serde_json::to_string(&certify(&Graph::complete(8), 2)).unwrap());
        pieces.push(format!("{}", theta(1, 12).unwrap()));
        pieces.join("\n")
    }

    let first = report_bundle();
    let second = report_bundle();
    assert_eq!(first, second, "reports differ between identical runs");
    c.finish(format!("{} report bytes reproduced exactly", first.len()));
}
