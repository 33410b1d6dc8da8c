//! Undirected simple graphs with bitset adjacency, and the cozero-divisor graph
//! built on top of them.

mod cozero;
mod export;

use crate::bitset::BitSet;

pub use cozero::{adjacency_via_containment, nzc, CozeroGraph, QuotientGraph};
pub use export::GraphDump;

/// A simple undirected graph on `0..order`.
///
/// Rows are symmetric and irreflexive. Solvers work on this type directly, so
/// any hand-built graph can be fed to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(order); order],
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let edges: Vec<_> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Graph::from_edges(order, &edges)
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::from_edges(order, &edges)
    }

    /// Panics on self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        Graph {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(v, row)| {
                    let mut c = row.complement();
                    c.remove(v);
                    c
                })
                .collect(),
        }
    }

    /// The subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Every pair in `vertices` adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// No pair in `vertices` adjacent.
    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.order() && self.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(g.complement().edge_count(), 0);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().edge_count(), 5);
        let c70 = Graph::cycle(70);
        assert_eq!(c70.complement().edge_count(), 70 * 69 / 2 - 70);
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced_subgraph(&[0, 1, 2, 3]), k4);
        assert_eq!(k4.induced_subgraph(&[]).order(), 0);
        let p = Graph::path(4).induced_subgraph(&[0, 2, 3]);
        assert_eq!(p.edges(), vec![(1, 2)]);
    }

    #[test]
    fn predicates() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_clique(&[0, 1]));
        assert!(!c5.is_clique(&[0, 2]));
        assert!(c5.is_independent(&[0, 2]));
        assert!(c5.is_proper_coloring(&[0, 1, 0, 1, 2]));
        assert!(!c5.is_proper_coloring(&[0, 1, 0, 1, 0]));
        assert_eq!(c5.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }
}
