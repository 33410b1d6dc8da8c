use crate::bitset::BitSet;
use crate::graph::Graph;

/// Checks that `out` orients every edge of `g` exactly once and nothing
/// else, transitively: `u -> v -> w` implies `u -> w`.
///
/// A graph with such an orientation is a comparability graph, and
/// comparability graphs and their complements are perfect.
pub fn is_transitive_orientation(g: &Graph, out: &[BitSet]) -> bool {
    let n = g.order();
    if out.len() != n || out.iter().any(|row| row.capacity() != n) {
        return false;
    }
    for u in 0..n {
        if out[u].contains(u) || !out[u].is_subset(g.neighbors(u)) {
            return false;
        }
        for v in g.neighbors(u) {
            if out[u].contains(v) == out[v].contains(u) {
                return false;
            }
        }
        if out[u].iter().any(|v| !out[v].is_subset(&out[u])) {
            return false;
        }
    }
    true
}
