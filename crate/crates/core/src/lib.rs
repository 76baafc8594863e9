//! Wiener index, conditional diameter `D(G; s)`, extremal tree families and exhaustive
//! audits of extremal claims over small graph classes.

pub mod canon;
pub mod checks;
pub mod cli;
pub mod condiam;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod random;
pub mod search;
pub mod transforms;

pub use canon::{canonical_form, canonical_key};
pub use condiam::{
    balanced_biclique_at_least, brute_force_conditional_diameter, condiam_upper_bound,
    conditional_diameter, far_graph, has_conditional_diameter, set_distance, SubsetPairWitness,
};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, UNREACHABLE};
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{diameter, path_transmission, transmission, wiener, InvariantReport};
