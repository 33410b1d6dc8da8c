//! Induced odd cycles of length at least five, in a graph or its complement.
//!
//! A graph is perfect exactly when neither it nor its complement has one, so
//! an exhaustive search on both sides certifies perfection for graphs small
//! enough to enumerate.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleLocation {
    /// An odd hole.
    Graph,
    /// An odd antihole: an odd hole of the complement.
    Complement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCycleCertificate {
    pub location: CycleLocation,
    /// Vertices in cycle order, starting at the smallest index.
    pub cycle: Vec<usize>,
}

impl OddCycleCertificate {
    /// Checks the certificate against `g` (the graph, not its complement).
    pub fn validate(&self, g: &Graph, min_len: usize) -> bool {
        match self.location {
            CycleLocation::Graph => is_induced_odd_cycle(g, &self.cycle, min_len),
            CycleLocation::Complement => {
                is_induced_odd_cycle(&g.complement(), &self.cycle, min_len)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Perfection {
    pub perfect: bool,
    pub certificate: Option<OddCycleCertificate>,
}

/// Consecutive vertices adjacent, every other pair non-adjacent, odd length
/// of at least `min_len`, no repeats.
pub fn is_induced_odd_cycle(g: &Graph, cycle: &[usize], min_len: usize) -> bool {
    let k = cycle.len();
    if k < min_len.max(3) || k.is_multiple_of(2) || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if cycle[i] == cycle[j] {
                return false;
            }
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Shortest induced odd cycle of length at least `min_len`, if any.
///
/// Twins are collapsed first (see [`collapse_twins`]), then the search runs
/// on what remains; the certificate uses the original vertex indices.
pub fn find_odd_hole(
    g: &Graph,
    min_len: usize,
    limits: &Limits,
) -> Result<Option<OddCycleCertificate>> {
    limits.check_vertices(g.order())?;
    let kept = collapse_twins(g);
    let cycle = search_holes(&g.induced_subgraph(&kept), min_len, limits)?;
    Ok(cycle.map(|c| certificate(c.iter().map(|&v| kept[v]).collect())))
}

/// [`find_odd_hole`] without twin collapsing.
pub fn find_odd_hole_uncollapsed(
    g: &Graph,
    min_len: usize,
    limits: &Limits,
) -> Result<Option<OddCycleCertificate>> {
    limits.check_vertices(g.order())?;
    Ok(search_holes(g, min_len, limits)?.map(certificate))
}

fn certificate(mut cycle: Vec<usize>) -> OddCycleCertificate {
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    OddCycleCertificate {
        location: CycleLocation::Graph,
        cycle,
    }
}

/// Perfection by exhaustive odd hole and odd antihole search.
pub fn is_perfect_desk_scale(g: &Graph, limits: &Limits) -> Result<Perfection> {
    if let Some(hole) = find_odd_hole(g, 5, limits)? {
        return Ok(Perfection {
            perfect: false,
            certificate: Some(hole),
        });
    }
    // C5 is self-complementary and was ruled out above
    let antihole = find_odd_hole(&g.complement(), 7, limits)?.map(|c| OddCycleCertificate {
        location: CycleLocation::Complement,
        ..c
    });
    Ok(Perfection {
        perfect: antihole.is_none(),
        certificate: antihole,
    })
}

/// Vertices left after repeatedly deleting twins, ascending.
///
/// Twins are pairs with `N(u) - v = N(v) - u`. An induced cycle of length at
/// least 5 contains at most one of them (two false twins would close a C4,
/// two true twins a triangle), and either twin can stand in for the other,
/// so deleting one keeps every hole length present. The lower index is kept.
pub fn collapse_twins(g: &Graph) -> Vec<usize> {
    let mut kept: Vec<usize> = (0..g.order()).collect();
    loop {
        let h = g.induced_subgraph(&kept);
        let mut seen_open: HashSet<&BitSet> = HashSet::new();
        let mut seen_closed: HashSet<BitSet> = HashSet::new();
        let mut survivors = Vec::with_capacity(kept.len());
        for (v, &original) in kept.iter().enumerate() {
            let open = h.neighbors(v);
            let mut closed = open.clone();
            closed.insert(v);
            if !seen_open.contains(open) && !seen_closed.contains(&closed) {
                seen_open.insert(open);
                seen_closed.insert(closed);
                survivors.push(original);
            }
        }
        if survivors.len() == kept.len() {
            return kept;
        }
        kept = survivors;
    }
}

/// Every induced cycle is enumerated from its lowest-ranked vertex `s` as an
/// induced path `s, p1, ..., t`: each extension must be adjacent to the tail
/// and to nothing else on the path, and only the final vertex may touch `s`.
/// Cycles are closed with `t` ranked above `p1` so each is seen in one
/// direction only. Once a cycle is found, paths that could only produce a
/// longer one are cut, so the result has minimum length. Vertices are ranked
/// by decreasing degree, which keeps later roots cheap.
fn search_holes(g: &Graph, min_len: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if min_len < 5 || min_len.is_multiple_of(2) {
        return Err(Error::InvalidMinLength(min_len));
    }
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let ranked = g.induced_subgraph(&order);
    let mut search = HoleSearch {
        g: &ranked,
        min_len,
        best: None,
        path: Vec::with_capacity(n),
        blocked: BitSet::new(n),
        root_neighbors: BitSet::new(n),
        nodes: 0,
        budget: limits.max_search_nodes,
    };
    for s in 0..n {
        search.root(s);
        if search.nodes > search.budget {
            return Err(Error::SearchBudget {
                nodes: search.budget,
            });
        }
    }
    Ok(search
        .best
        .map(|cycle| cycle.into_iter().map(|v| order[v]).collect()))
}

struct HoleSearch<'a> {
    g: &'a Graph,
    min_len: usize,
    best: Option<Vec<usize>>,
    path: Vec<usize>,
    /// Vertices that may not extend the path: at or below the root, on the
    /// path, or adjacent to an interior path vertex.
    blocked: BitSet,
    root_neighbors: BitSet,
    nodes: u64,
    budget: u64,
}

impl HoleSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, Vec::len)
    }

    fn root(&mut self, s: usize) {
        let n = self.g.order();
        if n - s < self.min_len {
            return;
        }
        self.root_neighbors = self.g.neighbors(s).clone();
        self.blocked = BitSet::from_indices(n, 0..=s);
        self.path.clear();
        self.path.push(s);
        let firsts: Vec<usize> = self.g.neighbors(s).iter().filter(|&v| v > s).collect();
        for p1 in firsts {
            self.path.push(p1);
            self.blocked.insert(p1);
            self.extend(p1);
            self.blocked.remove(p1);
            self.path.pop();
        }
    }

    fn extend(&mut self, tail: usize) {
        self.nodes += 1;
        // extending gives a cycle of at least path.len() + 2 vertices
        if self.nodes > self.budget || self.path.len() + 2 >= self.best_len() {
            return;
        }
        let g = self.g;
        let candidates = g.neighbors(tail).difference(&self.blocked);
        if candidates.is_empty() {
            return;
        }
        let p1 = self.path[1];
        let closing = self.path.len() >= 3;
        for w in candidates.iter() {
            if self.root_neighbors.contains(w) {
                let len = self.path.len() + 1;
                if closing && w > p1 && len % 2 == 1 && len >= self.min_len && len < self.best_len()
                {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    self.best = Some(cycle);
                }
                continue;
            }
            // tail becomes interior: its neighbours can no longer join
            let saved = self.blocked.clone();
            self.blocked.union_with(g.neighbors(tail));
            self.blocked.insert(w);
            self.path.push(w);
            self.extend(w);
            self.path.pop();
            self.blocked = saved;
            if self.nodes > self.budget || self.path.len() + 2 >= self.best_len() {
                return;
            }
        }
    }
}
