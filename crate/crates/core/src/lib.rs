//! Spectral certification of k-extendability in graphs.
//!
//! A connected even-order graph with a 1-factor is k-extendable when every
//! matching of size k extends to a perfect matching. This crate computes
//! signless Laplacian spectral radii q(G) = largest eigenvalue of D(G) + A(G),
//! evaluates the threshold theta(k, n) above which q(G) forces
//! k-extendability, decides k-extendability exactly two independent ways, and
//! verifies that the threshold is attained exactly by explicit extremal
//! families.
//!
//! Modules:
//! - [`graph`]: dense-bitset graphs, clique-family constructors, components,
//!   graph6 text codec.
//! - [`spectral`]: the signless Laplacian, the eigensolver, equitable quotient
//!   matrices, characteristic polynomials, root extraction.
//! - [`matching`]: Edmonds blossom maximum matching, 1-factor detection,
//!   size-k matching enumeration.
//! - [`extendability`]: the two exact deciders and deficiency witnesses.
//! - [`theorem`]: theta(k, n), certification, exception and extremal graphs,
//!   sharpness verification, falsification sweeps.
//! - [`random`]: seeded deterministic graph corpora.

pub mod extendability;
pub mod graph;
pub mod matching;
pub mod random;
pub mod spectral;
pub mod theorem;

pub use extendability::{
    deficiency_witness, is_k_extendable_direct, is_k_extendable_lemma, DeficiencyWitness,
    DirectOutcome, ExtendabilityConfig, ExtendabilityError, LemmaOutcome,
};
pub use graph::{build_family, FamilyGraph, Graph, Graph6Error, GraphError, VertexSet};
pub use matching::{
    enumerate_matchings, extends_to_one_factor, has_one_factor, maximum_matching, Matching,
    MatchingError,
};
pub use spectral::{
    adjacency_spectral_radius, char_poly, closed_form_split_join, largest_eigenvalue,
    largest_real_root, q_spectral_radius, quotient_matrix, signless_laplacian, Polynomial,
    QuotientMatrix, SolverConfig, SpectralError, SpectralResult, SymMatrix,
};
pub use theorem::{
    certify, exception_graph, extremal_graph, is_exception, sweep, theta, threshold,
    verify_sharpness, Certificate, CertifyConfig, SharpnessReport, SweepConfig, SweepReport,
    TheoremError, ThresholdCase, ThresholdSpec, Verdict,
};
