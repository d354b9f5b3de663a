//! Immutable simple undirected graphs over bitset adjacency rows.
//!
//! A [`Graph`] stores one bitset row per vertex, each row a slice of 64-bit
//! words, so neighbourhood intersections used by the detectors are plain
//! word-wise `AND`s. Graphs are built through [`GraphBuilder`] and never
//! mutated afterwards; every downstream module treats them as values that
//! can be shared freely across threads.

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices of some graph, stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set over the vertex range `0..nbits`.
    pub fn empty(nbits: usize) -> Self {
        VertexSet {
            nbits,
            words: vec![0; words_for(nbits)],
        }
    }

    /// Full set over the vertex range `0..nbits`.
    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for v in 0..nbits {
            s.insert(v);
        }
        s
    }

    pub fn from_members(nbits: usize, members: &[usize]) -> Self {
        let mut s = Self::empty(nbits);
        for &v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the vertex range this set indexes into.
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter {
            words: &self.words,
            word_idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of members of `self` that are also neighbours of `v` in `g`.
    pub fn degree_within(&self, g: &Graph, v: usize) -> usize {
        g.row(v)
            .iter()
            .zip(&self.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn remove_all(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Members of `mask` adjacent to `v` in `g`.
    pub fn neighbors_within(g: &Graph, v: usize, mask: &VertexSet) -> VertexSet {
        let mut out = VertexSet {
            nbits: g.order(),
            words: g.row(v).to_vec(),
        };
        out.intersect_with(mask);
        out
    }

    /// Sorted member list, handy for small sets.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word_idx];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Immutable simple undirected graph.
///
/// Invariants: the adjacency is symmetric, the diagonal is empty, and
/// `edge_count` equals half the number of set adjacency bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Words per adjacency row.
    pub(crate) fn row_words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Ascending iterator over the neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        BitIter {
            words: row,
            word_idx: 0,
            cur: row.first().copied().unwrap_or(0),
        }
    }

    /// Neighbourhood of `v` as a [`VertexSet`].
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet {
            nbits: self.order,
            words: self.row(v).to_vec(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sorted, ascending degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Edge mutation reserved for the oracle's search scratch graphs; the
    /// public API keeps graphs immutable.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u < self.order && v < self.order && u != v);
        let had = self.has_edge(u, v);
        let (wu, wv) = (u * self.words + v / WORD_BITS, v * self.words + u / WORD_BITS);
        if present {
            self.bits[wu] |= 1u64 << (v % WORD_BITS);
            self.bits[wv] |= 1u64 << (u % WORD_BITS);
            if !had {
                self.edge_count += 1;
            }
        } else {
            self.bits[wu] &= !(1u64 << (v % WORD_BITS));
            self.bits[wv] &= !(1u64 << (u % WORD_BITS));
            if had {
                self.edge_count -= 1;
            }
        }
    }

    /// Connected components of the subgraph induced by `allowed`.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.order);
        let mut out = Vec::new();
        for start in allowed.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.order);
            let mut stack = vec![start];
            seen.insert(start);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if allowed.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

// ============================================================================
// GraphBuilder
// ============================================================================

/// Single-owner builder; call [`GraphBuilder::build`] to freeze.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        let words = words_for(order).max(1);
        GraphBuilder {
            order,
            words,
            bits: vec![0; order * words],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Adds the edge `{u, v}`. Idempotent. Panics on loops or out-of-range
    /// indices, which are programming errors rather than data errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        assert!(
            u < self.order && v < self.order,
            "edge ({u},{v}) out of range 0..{}",
            self.order
        );
        assert!(u != v, "loop at vertex {u}");
        self.bits[u * self.words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 != 0
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> &mut Self {
        assert!(u < self.order && v < self.order && u != v);
        self.bits[u * self.words + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
        self
    }

    pub fn build(self) -> Graph {
        let ones: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        debug_assert!(ones % 2 == 0);
        Graph {
            order: self.order,
            words: self.words,
            bits: self.bits,
            edge_count: ones / 2,
        }
    }
}

impl From<&Graph> for GraphBuilder {
    fn from(g: &Graph) -> Self {
        GraphBuilder {
            order: g.order,
            words: g.words,
            bits: g.bits.clone(),
        }
    }
}

// ============================================================================
// Composition operators
// ============================================================================

/// Join of two graphs: disjoint copies plus every cross edge. Vertices of
/// `g1` keep their labels, vertices of `g2` are shifted by `g1.order()`.
pub fn join_graphs(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let mut b = GraphBuilder::new(n1 + n2);
    for (u, v) in g1.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        b.add_edge(n1 + u, n1 + v);
    }
    for u in 0..n1 {
        for v in 0..n2 {
            b.add_edge(u, n1 + v);
        }
    }
    b.build()
}

/// Disjoint union with vertex labels concatenated in input order.
/// The empty sequence yields the empty graph.
pub fn disjoint_union<'a, I>(parts: I) -> Graph
where
    I: IntoIterator<Item = &'a Graph>,
{
    let parts: Vec<&Graph> = parts.into_iter().collect();
    let total: usize = parts.iter().map(|g| g.order()).sum();
    let mut b = GraphBuilder::new(total);
    let mut base = 0;
    for g in parts {
        for (u, v) in g.edges() {
            b.add_edge(base + u, base + v);
        }
        base += g.order();
    }
    b.build()
}

/// Subgraph induced by `s`, vertices relabelled by ascending original index.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if let Some(v) = s.iter().find(|&v| v >= g.order()) {
        return Err(Error::range(format!(
            "vertex {v} outside graph of order {}",
            g.order()
        )));
    }
    let members: Vec<usize> = s.iter().collect();
    let mut b = GraphBuilder::new(members.len());
    for (i, &u) in members.iter().enumerate() {
        for (j, &v) in members.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named;

    #[test]
    fn builder_roundtrip_and_counts() {
        let mut b = GraphBuilder::new(4);
        b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 1);
        let g = b.build();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn join_hub_and_rim_is_a_wheel() {
        let hub = named::clique(1).unwrap();
        let rim = named::cycle(4).unwrap();
        let w = join_graphs(&hub, &rim);
        assert_eq!(w.order(), 5);
        assert_eq!(w.edge_count(), 8);
        assert_eq!(w.degree(0), 4);
        let canonical_w5 = crate::canon::canonical_form(&named::wheel(5).unwrap()).unwrap();
        assert_eq!(crate::canon::canonical_form(&w).unwrap(), canonical_w5);
    }

    #[test]
    fn join_identity_scale_cases() {
        let k1 = named::clique(1).unwrap();
        let k2 = join_graphs(&k1, &k1);
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let k4 = join_graphs(&named::clique(2).unwrap(), &named::clique(2).unwrap());
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
    }

    #[test]
    fn disjoint_union_cases() {
        let k3 = named::clique(3).unwrap();
        let two = disjoint_union([&k3, &k3]);
        assert_eq!((two.order(), two.edge_count()), (6, 6));
        assert!(two.degrees().iter().all(|&d| d == 2));

        let empty = disjoint_union([]);
        assert_eq!(empty.order(), 0);

        let w5 = named::wheel(5).unwrap();
        let pair = disjoint_union([&w5, &w5]);
        assert_eq!((pair.order(), pair.edge_count()), (10, 16));
    }

    #[test]
    fn induced_subgraph_cases() {
        let k5 = named::clique(5).unwrap();
        let tri = induced_subgraph(&k5, &VertexSet::from_members(5, &[0, 2, 4])).unwrap();
        assert_eq!((tri.order(), tri.edge_count()), (3, 3));

        // wheel minus hub is its rim
        let w5 = named::wheel(5).unwrap();
        let rim = induced_subgraph(&w5, &VertexSet::from_members(5, &[1, 2, 3, 4])).unwrap();
        assert_eq!((rim.order(), rim.edge_count()), (4, 4));
        assert!(rim.degrees().iter().all(|&d| d == 2));

        let e = induced_subgraph(&k5, &VertexSet::empty(5)).unwrap();
        assert_eq!(e.order(), 0);

        let full = induced_subgraph(&w5, &VertexSet::full(5)).unwrap();
        assert_eq!(full, w5);

        let err = induced_subgraph(&k5, &VertexSet::from_members(9, &[0, 7]));
        assert!(matches!(err, Err(Error::Range(_))));
    }

    #[test]
    fn vertex_set_iteration() {
        let s = VertexSet::from_members(130, &[0, 63, 64, 129]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(!s.contains(1));
    }

    #[test]
    fn large_order_supported() {
        // sweeps go up to a few hundred vertices; make sure multi-word rows work
        let mut b = GraphBuilder::new(600);
        b.add_edge(0, 599).add_edge(128, 256);
        let g = b.build();
        assert!(g.has_edge(599, 0));
        assert!(g.has_edge(256, 128));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn components_within_mask() {
        let g = disjoint_union([&named::clique(3).unwrap(), &named::path(3).unwrap()]);
        let comps = g.components_within(&VertexSet::full(6));
        assert_eq!(comps.len(), 2);
        let comps = g.components_within(&VertexSet::from_members(6, &[3, 5]));
        assert_eq!(comps.len(), 2);
    }
}
