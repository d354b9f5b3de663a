//! Exact chromatic number for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for the exact colouring search.
pub const DEFAULT_CHROMATIC_CAP: usize = 16;

/// Exact chromatic number under the default order cap.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_capped(g, DEFAULT_CHROMATIC_CAP)
}

/// Exact chromatic number via branch-and-bound between a greedy clique
/// lower bound and a greedy colouring upper bound.
pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    if n > cap {
        return Err(Error::capacity(format!(
            "chromatic_number is capped at order {cap}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let lb = greedy_clique(g).len();
    let ub = greedy_coloring_count(g);
    debug_assert!(lb >= 2 && lb <= ub);
    for c in lb..ub {
        if colorable(g, c) {
            return Ok(c);
        }
    }
    Ok(ub)
}

/// Greedily grows a clique scanning vertices by descending degree.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut verts: Vec<usize> = (0..g.order()).collect();
    verts.sort_unstable_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in verts {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

fn greedy_coloring_count(g: &Graph) -> usize {
    let mut verts: Vec<usize> = (0..g.order()).collect();
    verts.sort_unstable_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; g.order()];
    let mut used = 0;
    for v in verts {
        let mut taken = 0u64;
        for w in g.neighbors(v) {
            if color[w] != usize::MAX {
                taken |= 1 << color[w];
            }
        }
        let c = (0..).find(|&c| taken >> c & 1 == 0).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Backtracking k-colourability, vertices in descending degree order, new
/// colours introduced one at a time to break colour symmetry.
fn colorable(g: &Graph, k: usize) -> bool {
    let mut verts: Vec<usize> = (0..g.order()).collect();
    verts.sort_unstable_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; g.order()];
    color_rec(g, &verts, 0, k, 0, &mut color)
}

fn color_rec(
    g: &Graph,
    verts: &[usize],
    idx: usize,
    k: usize,
    max_used: usize,
    color: &mut [usize],
) -> bool {
    if idx == verts.len() {
        return true;
    }
    let v = verts[idx];
    let mut taken = 0u64;
    for w in g.neighbors(v) {
        if color[w] != usize::MAX {
            taken |= 1 << color[w];
        }
    }
    for c in 0..k.min(max_used + 1) {
        if taken >> c & 1 == 1 {
            continue;
        }
        color[v] = c;
        if color_rec(g, verts, idx + 1, k, max_used.max(c + 1), color) {
            return true;
        }
        color[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{named, turan_graph};

    #[test]
    fn wheel_chromatic_numbers() {
        // even rim C_4 plus hub
        assert_eq!(chromatic_number(&named::wheel(5).unwrap()).unwrap(), 3);
        // odd rim C_5 needs 3, hub adds 1
        assert_eq!(chromatic_number(&named::wheel(6).unwrap()).unwrap(), 4);
    }

    #[test]
    fn parity_classification() {
        for k in 2..=6 {
            assert_eq!(
                chromatic_number(&named::wheel(2 * k).unwrap()).unwrap(),
                4,
                "even wheel W_{}",
                2 * k
            );
            assert_eq!(
                chromatic_number(&named::wheel(2 * k + 1).unwrap()).unwrap(),
                3,
                "odd wheel W_{}",
                2 * k + 1
            );
        }
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(chromatic_number(&turan_graph(10, 3).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&named::clique(7).unwrap()).unwrap(), 7);
        assert_eq!(chromatic_number(&named::cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&named::cycle(8).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::edgeless(5)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::edgeless(17);
        assert!(chromatic_number(&g).is_err());
        assert_eq!(chromatic_number_capped(&g, 17).unwrap(), 1);
    }
}
