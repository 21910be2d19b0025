//! Deterministic random graph corpora. The generator is a fixed 64-bit
//! mixing PRNG so that a seed reproduces the same corpus byte-for-byte on
//! every platform and build.

use crate::graph::Graph;
use crate::matching::has_one_factor;

/// SplitMix64: tiny, stable, and good enough for sampling edges.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// One G(n, p) draw.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

/// Rejection-samples G(n, p) until connected. The cap keeps a pathological
/// (n, p) from spinning forever.
pub fn erdos_renyi_connected(n: usize, p: f64, rng: &mut SplitMix64) -> Option<Graph> {
    for _ in 0..100_000 {
        let g = erdos_renyi(n, p, rng);
        if g.is_connected() == Ok(true) {
            return Some(g);
        }
    }
    None
}

/// Edge probabilities cycled by the corpus generators, spanning sparse to
/// dense around the threshold.
pub const CORPUS_EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.8];

/// `count` connected graphs on n vertices, probabilities cycling through
/// {0.3, 0.5, 0.8}, derived entirely from `seed`.
pub fn connected_corpus(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let p = CORPUS_EDGE_PROBABILITIES[i % CORPUS_EDGE_PROBABILITIES.len()];
        i += 1;
        if let Some(g) = erdos_renyi_connected(n, p, &mut rng) {
            out.push(g);
        }
    }
    out
}

/// Like `connected_corpus`, additionally requiring a 1-factor (so n must be
/// even for this to terminate).
pub fn connected_one_factor_corpus(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    assert!(n % 2 == 0, "a 1-factor needs even order");
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let p = CORPUS_EDGE_PROBABILITIES[i % CORPUS_EDGE_PROBABILITIES.len()];
        i += 1;
        if let Some(g) = erdos_renyi_connected(n, p, &mut rng) {
            if has_one_factor(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Every labeled graph on n vertices, by edge-set bitmask, connected ones
/// only. Exhaustive over 2^(n(n-1)/2) masks, so n must stay small.
pub fn exhaustive_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 24, "exhaustive enumeration is capped at 24 edges");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("pairs are in range");
        if g.is_connected() == Ok(true) {
            out.push(g);
        }
    }
    out
}
