use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ISOMORPHISM_MAX_VERTICES;

/// Finds `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])` for all
/// pairs, or returns `None` if the graphs are not isomorphic.
///
/// Vertices are first split by iterated degree refinement (degree, then the
/// multiset of neighbour classes, until stable) computed jointly over both
/// graphs, then matched by backtracking within classes.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for order in [g.order(), h.order()] {
        if order > ISOMORPHISM_MAX_VERTICES {
            return Err(Error::VertexCap {
                vertices: order,
                cap: ISOMORPHISM_MAX_VERTICES,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.order();
    let (g_class, h_class) = refine(g, h);
    let mut g_hist = BTreeMap::new();
    let mut h_hist = BTreeMap::new();
    for v in 0..n {
        *g_hist.entry(g_class[v]).or_insert(0) += 1;
        *h_hist.entry(h_class[v]).or_insert(0) += 1;
    }
    if g_hist != h_hist {
        return Ok(None);
    }

    let mut matcher = Matcher {
        g,
        h,
        g_class: &g_class,
        h_class: &h_class,
        class_size: &g_hist,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if matcher.search(0) {
        debug_assert!(is_isomorphism(g, h, &matcher.map));
        Ok(Some(matcher.map))
    } else {
        Ok(None)
    }
}

/// Checks that `map` is a bijection preserving adjacency and non-adjacency.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}

fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut g_class: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut h_class: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signature = |graph: &Graph, class: &[usize], v: usize| {
            let mut around: Vec<usize> = graph.neighbors(v).iter().map(|u| class[u]).collect();
            around.sort_unstable();
            (class[v], around)
        };
        let g_sig: Vec<_> = (0..g.order()).map(|v| signature(g, &g_class, v)).collect();
        let h_sig: Vec<_> = (0..h.order()).map(|v| signature(h, &h_class, v)).collect();
        let mut ids = BTreeMap::new();
        for sig in g_sig.iter().chain(&h_sig) {
            let next = ids.len();
            ids.entry(sig.clone()).or_insert(next);
        }
        g_class = g_sig.iter().map(|s| ids[s]).collect();
        h_class = h_sig.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (g_class, h_class);
        }
        classes = ids.len();
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    g_class: &'a [usize],
    h_class: &'a [usize],
    class_size: &'a BTreeMap<usize, usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    /// Next vertex of `g`: most already-mapped neighbours, then smallest
    /// class, then lowest index.
    fn next_vertex(&self) -> usize {
        (0..self.g.order())
            .filter(|&v| self.map[v] == usize::MAX)
            .max_by_key(|&v| {
                let mapped = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&u| self.map[u] != usize::MAX)
                    .count();
                (
                    mapped,
                    std::cmp::Reverse(self.class_size[&self.g_class[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap()
    }

    fn search(&mut self, depth: usize) -> bool {
        let n = self.g.order();
        if depth == n {
            return true;
        }
        let v = self.next_vertex();
        for w in 0..n {
            if self.used[w] || self.h_class[w] != self.g_class[v] {
                continue;
            }
            let consistent = (0..n).all(|u| {
                self.map[u] == usize::MAX
                    || self.g.has_edge(v, u) == self.h.has_edge(w, self.map[u])
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.search(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[w] = false;
        }
        false
    }
}
