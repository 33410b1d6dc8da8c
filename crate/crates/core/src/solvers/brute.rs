//! Exhaustive reference values for small graphs.
//!
//! Nothing here shares code with the branch-and-bound solvers; these are the
//! oracles the solvers are tested against.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CLIQUE_MAX_VERTICES: usize = 20;
pub const CHROMATIC_MAX_VERTICES: usize = 12;
pub const ODD_HOLE_MAX_VERTICES: usize = 16;

fn masks(g: &Graph, cap: usize) -> Result<Vec<u32>> {
    if g.order() > cap {
        return Err(Error::VertexCap {
            vertices: g.order(),
            cap,
        });
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect())
}

/// Largest clique size over all vertex subsets.
pub fn brute_force_clique(g: &Graph) -> Result<usize> {
    let adj = masks(g, CLIQUE_MAX_VERTICES)?;
    let n = g.order();
    // is_clique[S] = is_clique[S - low] and (S - low) inside N(low)
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if is_clique[rest] && rest as u32 & !adj[low] == 0 {
            is_clique[s] = true;
            best = best.max(s.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Fewest independent sets covering all vertices.
pub fn brute_force_chromatic(g: &Graph) -> Result<usize> {
    let adj = masks(g, CHROMATIC_MAX_VERTICES)?;
    let n = g.order();
    let full = (1usize << n) - 1;
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && rest as u32 & adj[low] == 0;
    }
    let mut chi = vec![usize::MAX; 1 << n];
    chi[0] = 0;
    for s in 1usize..=full {
        let low = s & s.wrapping_neg();
        let others = s ^ low;
        // every independent subset of s containing its lowest vertex
        let mut sub = others;
        loop {
            let class = sub | low;
            if independent[class] && chi[s ^ class] != usize::MAX {
                chi[s] = chi[s].min(chi[s ^ class] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }
    Ok(chi[full])
}

/// Some vertex subset of odd size at least `min_len` inducing a cycle, found
/// by checking every subset: all induced degrees two, and connected.
pub fn brute_force_odd_hole(g: &Graph, min_len: usize) -> Result<Option<Vec<usize>>> {
    let adj = masks(g, ODD_HOLE_MAX_VERTICES)?;
    let n = g.order();
    for s in 1u32..1 << n {
        let size = s.count_ones() as usize;
        if size < min_len || size.is_multiple_of(2) {
            continue;
        }
        let members = (0..n).filter(|&v| s >> v & 1 == 1);
        if members.clone().any(|v| (adj[v] & s).count_ones() != 2) {
            continue;
        }
        // 2-regular: a single cycle iff connected
        let mut reached = 1u32 << s.trailing_zeros();
        loop {
            let next = (0..n)
                .filter(|&v| reached >> v & 1 == 1)
                .fold(reached, |r, v| r | (adj[v] & s));
            if next == reached {
                break;
            }
            reached = next;
        }
        if reached == s {
            return Ok(Some(members.collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let k4 = Graph::complete(4);
        assert_eq!(brute_force_clique(&k4).unwrap(), 4);
        assert_eq!(brute_force_chromatic(&k4).unwrap(), 4);
    }

    #[test]
    fn five_cycle() {
        let c5 = Graph::cycle(5);
        assert_eq!(brute_force_clique(&c5).unwrap(), 2);
        assert_eq!(brute_force_chromatic(&c5).unwrap(), 3);
        assert_eq!(
            brute_force_odd_hole(&c5, 5).unwrap(),
            Some(vec![0, 1, 2, 3, 4])
        );
        assert_eq!(brute_force_odd_hole(&Graph::cycle(6), 5).unwrap(), None);
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(brute_force_clique(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(brute_force_chromatic(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(brute_force_chromatic(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn caps() {
        assert!(brute_force_clique(&Graph::empty(21)).unwrap_err().is_cap());
        assert!(brute_force_chromatic(&Graph::empty(13))
            .unwrap_err()
            .is_cap());
    }
}
