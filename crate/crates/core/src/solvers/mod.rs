//! Exact combinatorial solvers over [`Graph`](crate::graph::Graph).
//!
//! All solvers are deterministic: ties are broken towards lower vertex
//! indices, so witnesses are reproducible.

pub mod brute;
mod clique;
mod coloring;
mod holes;
mod isomorphism;
mod orientation;

pub use clique::{max_clique, CliqueResult};
pub use coloring::{chromatic_number, dsatur, ColoringResult};
pub use holes::{
    collapse_twins, find_odd_hole, find_odd_hole_uncollapsed, is_induced_odd_cycle,
    is_perfect_desk_scale, CycleLocation, OddCycleCertificate, Perfection,
};
pub use isomorphism::{are_isomorphic, is_isomorphism};
pub use orientation::is_transitive_orientation;
