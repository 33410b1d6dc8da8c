//! Cozero-divisor graphs of finite commutative rings.
//!
//! A ring is given as a direct product of modular rings `Z_{n_1} x ... x Z_{n_k}`.
//! Its cozero-divisor graph has the non-zero non-unit elements as vertices, with
//! `a -- b` whenever `a` is not in `Rb` and `b` is not in `Ra`.
//!
//! The crate builds these graphs, computes exact clique and chromatic numbers,
//! certifies perfection by searching for induced odd cycles in the graph and its
//! complement, and runs a suite of structural checks over families of rings:
//!
//! * [`ring`]: residue arithmetic, principal-ideal membership, associate classes
//! * [`graph`]: graph construction, complements, quotients, DOT/JSON export
//! * [`solvers`]: max clique, chromatic number, odd holes, isomorphism
//! * [`verify`]: named checks producing [`verify::VerificationReport`]s
//! * [`cli`]: the `analyze` / `verify` / `export` front end used by the binary

pub mod bitset;
pub mod cli;
pub mod error;
pub mod graph;
pub mod ring;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CozeroGraph, Graph, QuotientGraph};
pub use ring::{parse_spec, AssociateClasses, CrtSplit, RingElement, RingSpec};

/// Default cap on ring cardinality for graph construction.
pub const DEFAULT_MAX_CARDINALITY: u64 = 10_000;
/// Default cap on vertex count for clique, coloring and odd-hole search.
pub const DEFAULT_MAX_VERTICES: usize = 512;
/// Default cap on search-tree nodes per odd-hole search.
pub const DEFAULT_MAX_SEARCH_NODES: u64 = 20_000_000;
/// Hard cap on vertex count for isomorphism search.
pub const ISOMORPHISM_MAX_VERTICES: usize = 64;

/// Size limits shared by graph construction and the solvers.
///
/// Exceeding a limit is reported as an error; nothing is truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cardinality: u64,
    pub max_vertices: usize,
    /// Odd-hole search is exhaustive and can be exponential; it stops with
    /// [`Error::SearchBudget`] after this many nodes.
    pub max_search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cardinality: DEFAULT_MAX_CARDINALITY,
            max_vertices: DEFAULT_MAX_VERTICES,
            max_search_nodes: DEFAULT_MAX_SEARCH_NODES,
        }
    }
}

impl Limits {
    pub(crate) fn check_vertices(&self, order: usize) -> Result<()> {
        if order > self.max_vertices {
            return Err(Error::VertexCap {
                vertices: order,
                cap: self.max_vertices,
            });
        }
        Ok(())
    }
}
