//! Exact degree-power extremal graph computations on small graphs.
//!
//! The crate evaluates the degree power sum `e_r(G) = Σ d_i^r`, counts stars
//! and general subgraph copies, builds the standard extremal constructions
//! (Turán, friendship, `H(s-1, n)` and its girth-5 augmentation, ...),
//! computes chromatic invariants and decomposition families, and runs an
//! exhaustive isomorphism-reduced search for `ex(n, F)`, `ex(n, S_r, F)`,
//! `ex_r(n, F)`, `ex(n, H, F)` and `biex(n, F)`.

pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod search;

pub use canon::{canonical_form, canonical_labeling, Labeling};
pub use coloring::{
    chromatic_number, color_critical_edges, decomposition_family, proper_colorings, sigma,
    DecompositionFamily, ProperColoring,
};
pub use constructions::{CatalogId, Closure, PartSpec};
pub use counting::{
    automorphism_count, contains_subgraph, degree_power_sum, star_count, star_weights,
    subgraph_count, CountValue, WeightVector,
};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph, MAX_ORDER};
pub use search::{
    biex, enumerate_free, generalized_turan, search_max, verify_claim, Claim, ClaimReport, Engine,
    ForbiddenFamily, Objective, SearchOptions, SearchResult, Verdict,
};
