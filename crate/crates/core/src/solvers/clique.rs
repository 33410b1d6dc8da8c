use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Vertex indices, ascending.
    pub witness: Vec<usize>,
}

/// Exact maximum clique.
///
/// Branch and bound over bitset candidate sets. Candidates are greedily
/// colored at every node; a branch is cut as soon as the current clique plus
/// the color count of what remains cannot beat the incumbent. Vertices are
/// pre-ordered by decreasing degree (ties by lower index).
pub fn max_clique(g: &Graph, limits: &Limits) -> Result<CliqueResult> {
    limits.check_vertices(g.order())?;
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let rows: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|u| position[u])))
        .collect();

    let mut search = Search {
        rows: &rows,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(BitSet::full(n));

    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    debug_assert!(g.is_clique(&witness));
    Ok(CliqueResult {
        size: witness.len(),
        witness,
    })
}

struct Search<'a> {
    rows: &'a [BitSet],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: BitSet) {
        let (order, bounds) = self.color_sort(&candidates);
        for k in (0..order.len()).rev() {
            if self.current.len() + bounds[k] <= self.best.len() {
                return;
            }
            let v = order[k];
            self.current.push(v);
            let next = candidates.intersection(&self.rows[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }

    /// Sequential greedy coloring; returns vertices grouped by color with the
    /// 1-based color of each.
    fn color_sort(&self, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.count());
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.rows[v]);
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}
