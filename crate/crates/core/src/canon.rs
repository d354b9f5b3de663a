//! Canonical forms for small graphs by minimum-encoding search.
//!
//! The canonical form of a graph is the lexicographically smallest graph6
//! line over a class of vertex relabellings. Restricting the search to
//! relabellings that sort vertices by ascending degree is sound: the
//! restricted permutation sets of isomorphic graphs correspond under any
//! isomorphism, and the winning byte string still decodes to the graph, so
//! equal strings are produced exactly for isomorphic graphs.

use crate::codec::encode_graph6;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Default order cap for canonicalisation; the oracle only needs tiny n.
pub const DEFAULT_CANON_CAP: usize = 9;

/// Canonical byte string (a graph6 line) under the default cap.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_capped(g, DEFAULT_CANON_CAP)
}

/// Canonical byte string with an explicit order cap.
pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<Vec<u8>> {
    let n = g.order();
    if n > cap {
        return Err(Error::capacity(format!(
            "canonical_form is capped at order {cap} (got {n}); \
             use an isomorphism-free workflow for larger graphs"
        )));
    }
    if n <= 1 {
        return encode_graph6(g);
    }
    debug_assert!(n <= 11, "single-word bit encoding below assumes C(n,2) <= 64");

    // single-word adjacency rows for the tiny-n fast path
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc | 1 << w))
        .collect();
    let degs: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut target: Vec<usize> = degs.clone();
    target.sort_unstable();

    let nbits = n * (n - 1) / 2;
    let mut best: u64 = u64::MAX;
    let mut perm = vec![usize::MAX; n]; // position -> original vertex
    let mut used = vec![false; n];
    search(
        &rows, &degs, &target, n, 0, 0u64, 0usize, &mut perm, &mut used, &mut best,
    );

    // materialise the winning bit string as a graph6 line
    let mut b = GraphBuilder::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if best >> (63 - bit) & 1 == 1 {
                b.add_edge(i, j);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    encode_graph6(&b.build())
}

/// Places original vertices into positions `pos..`, keeping the bit prefix
/// (column-major upper triangle, left-aligned in a u64) minimal.
#[allow(clippy::too_many_arguments)]
fn search(
    rows: &[u64],
    degs: &[usize],
    target: &[usize],
    n: usize,
    pos: usize,
    prefix: u64,
    prefix_bits: usize,
    perm: &mut [usize],
    used: &mut [bool],
    best: &mut u64,
) {
    if pos == n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    for v in 0..n {
        if used[v] || degs[v] != target[pos] {
            continue;
        }
        // bits for column `pos`: adjacency of v to the already placed vertices
        let mut col = 0u64;
        for &u in perm.iter().take(pos) {
            col = (col << 1) | (rows[v] >> u & 1);
        }
        let new_bits = prefix_bits + pos;
        let new_prefix = if pos == 0 {
            prefix
        } else {
            prefix | col << (64 - new_bits)
        };
        // compare against the best full string on the shared prefix
        if new_prefix & mask_high(new_bits) > *best & mask_high(new_bits) {
            continue;
        }
        used[v] = true;
        perm[pos] = v;
        search(
            rows, degs, target, n, pos + 1, new_prefix, new_bits, perm, used, best,
        );
        used[v] = false;
        perm[pos] = usize::MAX;
    }
}

#[inline]
fn mask_high(bits: usize) -> u64 {
    if bits == 0 {
        0
    } else if bits >= 64 {
        u64::MAX
    } else {
        !0u64 << (64 - bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named;
    use crate::graph::GraphBuilder;
    use std::collections::BTreeSet;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(g.order());
        for (u, v) in g.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }

    #[test]
    fn relabelled_cycles_share_a_form() {
        let c4 = named::cycle(4).unwrap();
        let other = relabel(&c4, &[2, 0, 3, 1]);
        assert_ne!(c4, other);
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn different_graphs_differ() {
        let k3 = named::clique(3).unwrap();
        let p3 = named::path(3).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&p3).unwrap());
    }

    #[test]
    fn labeled_enumeration_on_four_vertices_has_eleven_classes() {
        // exhaust all 2^6 labeled graphs on 4 vertices and dedup by form
        let mut forms = BTreeSet::new();
        for bits in 0u32..64 {
            let mut b = GraphBuilder::new(4);
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    b.add_edge(u, v);
                }
            }
            forms.insert(canonical_form(&b.build()).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn canonical_form_decodes_to_isomorphic_graph() {
        let w = named::wheel(6).unwrap();
        let form = canonical_form(&w).unwrap();
        let decoded = crate::codec::decode_graph6(&form).unwrap();
        assert_eq!(decoded.order(), w.order());
        assert_eq!(decoded.edge_count(), w.edge_count());
        assert_eq!(canonical_form(&decoded).unwrap(), form);
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = Graph::edgeless(10);
        assert!(canonical_form(&g).is_err());
        assert!(canonical_form_capped(&g, 10).is_ok());
    }
}
