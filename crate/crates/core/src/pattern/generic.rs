//! Generic non-induced subgraph containment by backtracking.
//!
//! This is the independent cross-check for every specialized detector:
//! slower, but with no structural assumptions beyond injectivity and edge
//! preservation.

use super::{Budget, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An arbitrary pattern graph.
#[derive(Clone, Debug)]
pub struct GenericPattern {
    pattern: Graph,
    label: String,
    degs: Vec<usize>,
}

impl GenericPattern {
    pub fn new(pattern: Graph) -> Result<Self> {
        let label = match crate::codec::encode_graph6(&pattern) {
            Ok(bytes) => format!("g6:{}", String::from_utf8_lossy(&bytes)),
            Err(_) => format!("generic(order={})", pattern.order()),
        };
        Self::with_label(pattern, label)
    }

    pub fn with_label(pattern: Graph, label: String) -> Result<Self> {
        if pattern.order() < 1 {
            return Err(Error::domain("generic pattern needs at least one vertex"));
        }
        let degs = pattern.degrees();
        Ok(GenericPattern { pattern, label, degs })
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    /// Vertex order for the backtracking: seeds first, then repeatedly the
    /// vertex with the most already-ordered neighbours (ties to higher
    /// degree, then lower index), so candidate sets stay constrained.
    fn search_order(&self, seeds: &[usize]) -> Vec<usize> {
        let np = self.pattern.order();
        let mut order: Vec<usize> = seeds.to_vec();
        let mut placed = vec![false; np];
        for &s in seeds {
            placed[s] = true;
        }
        while order.len() < np {
            let next = (0..np)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let anchored = self
                        .pattern
                        .neighbors(p)
                        .filter(|&q| placed[q])
                        .count();
                    (anchored, self.degs[p], std::cmp::Reverse(p))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    fn embed(
        &self,
        g: &Graph,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        used: &mut VertexSet,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if pos == order.len() {
            return Ok(true);
        }
        let pv = order[pos];
        // candidates: common neighbourhood of the images of mapped
        // pattern-neighbours, degree-compatible, not yet used
        let mut cands = VertexSet::full(g.order());
        for q in self.pattern.neighbors(pv) {
            if map[q] != usize::MAX {
                cands.intersect_with(&g.neighbor_set(map[q]));
            }
        }
        cands.remove_all(used);
        for c in cands.iter() {
            if g.degree(c) < self.degs[pv] {
                continue;
            }
            map[pv] = c;
            used.insert(c);
            if self.embed(g, order, pos + 1, map, used, budget)? {
                map[pv] = usize::MAX;
                used.remove(c);
                return Ok(true);
            }
            map[pv] = usize::MAX;
            used.remove(c);
        }
        Ok(false)
    }

    fn embed_with_pre(
        &self,
        g: &Graph,
        pre: &[(usize, usize)],
        budget: &mut Budget,
    ) -> Result<bool> {
        let np = self.pattern.order();
        let mut map = vec![usize::MAX; np];
        let mut used = VertexSet::empty(g.order());
        for &(pv, gv) in pre {
            if g.degree(gv) < self.degs[pv] || used.contains(gv) {
                return Ok(false);
            }
            map[pv] = gv;
            used.insert(gv);
        }
        // preassigned pattern edges must land on host edges
        for &(pv, gv) in pre {
            for q in self.pattern.neighbors(pv) {
                if map[q] != usize::MAX && !g.has_edge(gv, map[q]) {
                    return Ok(false);
                }
            }
        }
        let seeds: Vec<usize> = pre.iter().map(|&(pv, _)| pv).collect();
        let order = self.search_order(&seeds);
        self.embed(g, &order, pre.len(), &mut map, &mut used, budget)
    }
}

impl Pattern for GenericPattern {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn min_order(&self) -> usize {
        self.pattern.order()
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        if self.pattern.order() > g.order() || self.pattern.edge_count() > g.edge_count() {
            return Ok(false);
        }
        self.embed_with_pre(g, &[], budget)
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if self.pattern.order() > g.order() || self.pattern.edge_count() > g.edge_count() {
            return Ok(false);
        }
        for (pa, pb) in self.pattern.edges() {
            for (gu, gv) in [(u, v), (v, u)] {
                if self.embed_with_pre(g, &[(pa, gu), (pb, gv)], budget)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}
