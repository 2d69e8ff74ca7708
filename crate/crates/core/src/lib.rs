//! Symmetry computations for small undirected graphs.
//!
//! The crate computes automorphism groups (by individualization-refinement
//! and, for tiny graphs, by brute force), automorphism orbits of vertices,
//! vertex pairs and whole edge sets, and uses them to check exactly that
//!
//! ```text
//! |Aut(G)| / |AO_G(E')| = |Aut(G - E')| / |AO_{G-E'}(E')|
//! ```
//!
//! for every edge subset `E'` of `G`. Around that identity sit exact
//! Erdős-Rényi `G(n, m)` isomorphism-class probabilities, a seeded sampler,
//! and deck/augmented-deck tooling for graph reconstruction experiments.

pub mod aut;
pub mod cli;
mod error;
pub mod er;
pub mod graph;
pub mod group;
pub mod identity;
pub mod orbits;
pub mod perm;
pub mod reconstruction;
mod serde_big;

pub use aut::{
    analyze, automorphism_group, canonical_form, canonical_labeling, color_refine, is_isomorphic,
    Analysis, Certificate, OrderedPartition,
};
pub use error::{Error, Result};
pub use graph::{
    emit_edge_list, emit_graph6, enumerate_labeled_graphs, parse_edge_list, parse_graph6, EdgeSet,
    Graph, LabeledGraphs, Pair,
};
pub use group::{brute_force_aut, enumerate_elements, group_order, PermGroup};
pub use identity::{verify_ratio_identity, IdentityReport};
pub use orbits::{edge_set_orbit, edge_set_orbit_size, pair_orbit, vertex_orbit, Orbit, OrbitKind};
pub use perm::Perm;

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
