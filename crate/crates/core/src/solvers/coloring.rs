use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::clique::max_clique;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub count: usize,
    /// Color of each vertex, in `0..count`.
    pub assignment: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

/// Exact chromatic number.
///
/// DSATUR gives an upper bound and a maximum clique a lower bound. If they
/// differ, a DSATUR-ordered branch and bound with the clique pre-colored
/// closes the gap.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<ColoringResult> {
    limits.check_vertices(g.order())?;
    let n = g.order();
    if n == 0 {
        return Ok(ColoringResult {
            count: 0,
            assignment: Vec::new(),
        });
    }
    let clique = max_clique(g, limits)?;
    let mut best = dsatur(g);
    let mut best_count = best.iter().max().map_or(0, |&c| c + 1);
    if best_count > clique.size {
        let mut search = Exact::new(g, best_count);
        for (color, &v) in clique.witness.iter().enumerate() {
            search.assign(v, color);
        }
        search.run(clique.witness.len(), clique.size, clique.size);
        if let Some(found) = search.found {
            best = found;
            best_count = search.best;
        }
    }
    debug_assert!(g.is_proper_coloring(&best));
    Ok(ColoringResult {
        count: best_count,
        assignment: best,
    })
}

/// Picks the uncolored vertex with the most distinct neighbour colors, then
/// highest degree, then lowest index.
fn select(g: &Graph, colors: &[usize], saturation: &[usize]) -> Option<usize> {
    (0..g.order())
        .filter(|&v| colors[v] == UNCOLORED)
        .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
}

/// Greedy DSATUR coloring.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = vec![UNCOLORED; n];
    let mut neighbor_colors: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut saturation = vec![0; n];
    while let Some(v) = select(g, &colors, &saturation) {
        let c = (0..n).find(|&c| !neighbor_colors[v][c]).unwrap();
        colors[v] = c;
        for u in g.neighbors(v) {
            if !neighbor_colors[u][c] {
                neighbor_colors[u][c] = true;
                saturation[u] += 1;
            }
        }
    }
    colors
}

struct Exact<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    /// `counts[v][c]`: neighbours of `v` colored `c`.
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: usize,
    found: Option<Vec<usize>>,
}

impl<'a> Exact<'a> {
    fn new(g: &'a Graph, upper: usize) -> Self {
        let n = g.order();
        Exact {
            g,
            colors: vec![UNCOLORED; n],
            counts: vec![vec![0; upper]; n],
            saturation: vec![0; n],
            best: upper,
            found: None,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v) {
            self.counts[u][c] += 1;
            if self.counts[u][c] == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        for u in self.g.neighbors(v) {
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Returns true once a coloring matching the lower bound is found.
    fn run(&mut self, colored: usize, used: usize, lower: usize) -> bool {
        if colored == self.g.order() {
            self.best = used;
            self.found = Some(self.colors.clone());
            return used == lower;
        }
        let v = select(self.g, &self.colors, &self.saturation).unwrap();
        // a new coloring must use at most best - 1 colors
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            let done = self.run(colored + 1, used.max(c + 1), lower);
            self.unassign(v);
            if done {
                return true;
            }
            if c + 1 >= self.best - 1 {
                break;
            }
        }
        false
    }
}
