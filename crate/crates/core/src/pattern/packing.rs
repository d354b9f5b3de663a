//! Vertex-disjoint packing searches: wheel forests and star forests.
//!
//! The wheel-forest search branches on the smallest vertex used by any
//! packed wheel, enumerating the wheel embeddings through it and recursing
//! on the remainder. Before branching it tries to refute cheaply: greedily
//! remove one vertex per found wheel until the rest is wheel-free; if that
//! takes fewer removals than there are wheels still to place, no packing
//! can exist, since disjoint wheels would each need their own removed
//! vertex. Nothing is memoized across siblings; the node budget caps the
//! exponential worst case.

use super::{
    find_wheel_within, for_each_cycle_through, for_each_cycle_through_edge, Budget, Pattern,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::HashSet;

// ============================================================================
// Wheel forests
// ============================================================================

/// Vertex-disjoint wheels, one per listed order (each >= 4, since W_4 = K_4
/// is the smallest wheel). Even/odd refers to the parity of the order.
#[derive(Clone, Debug)]
pub struct WheelForestPattern {
    /// Wheel orders, kept sorted descending.
    orders: Vec<usize>,
}

impl WheelForestPattern {
    pub fn new(mut orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::domain("wheel forest needs at least one wheel"));
        }
        if let Some(&q) = orders.iter().find(|&&q| q < 4) {
            return Err(Error::domain(format!(
                "wheel orders must be >= 4, got {q}"
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(WheelForestPattern { orders })
    }

    /// m vertex-disjoint copies of the wheel on `q` vertices.
    pub fn uniform(q: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("wheel forest needs m >= 1"));
        }
        Self::new(vec![q; m])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }
}

impl Pattern for WheelForestPattern {
    fn name(&self) -> String {
        let parts: Vec<String> = self.orders.iter().map(|q| q.to_string()).collect();
        format!("wheel-forest:{}", parts.join(","))
    }

    fn min_order(&self) -> usize {
        self.orders.iter().sum()
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        pack_wheels(g, &VertexSet::full(g.order()), &self.orders, budget)
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        let full = VertexSet::full(g.order());
        let mut prev = 0;
        for (idx, &q) in self.orders.iter().enumerate() {
            if q == prev {
                continue; // equal-order wheels are interchangeable
            }
            prev = q;
            let mut rest_demands = self.orders.clone();
            rest_demands.remove(idx);
            let mut found = false;
            for_each_wheel_set_using_edge(g, &full, q, u, v, budget, &mut |set, budget| {
                let mut rest = full.clone();
                rest.remove_all(set);
                if pack_wheels(g, &rest, &rest_demands, budget)? {
                    found = true;
                    return Ok(true);
                }
                Ok(false)
            })?;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Can wheels with the given orders (sorted descending) be packed
/// vertex-disjointly inside `allowed`?
fn pack_wheels(
    g: &Graph,
    allowed: &VertexSet,
    demands: &[usize],
    budget: &mut Budget,
) -> Result<bool> {
    if demands.is_empty() {
        return Ok(true);
    }
    budget.tick()?;
    let need: usize = demands.iter().sum();
    if allowed.len() < need {
        return Ok(false);
    }
    if demands.len() == 1 {
        return Ok(find_wheel_within(g, allowed, demands[0], budget)?.is_some());
    }
    if hitting_bound_prunes(g, allowed, demands, budget)? {
        return Ok(false);
    }

    // Branch on the smallest vertex v in any packed wheel: one wheel uses v,
    // everything else lives strictly above v. Earlier loop iterations have
    // already dropped the vertices below v from `live`.
    let mut live = allowed.clone();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for v in allowed.iter() {
        if live.len() < need {
            break;
        }
        let mut prev = 0;
        for (idx, &q) in demands.iter().enumerate() {
            if q == prev {
                continue;
            }
            prev = q;
            let mut rest_demands = demands.to_vec();
            rest_demands.remove(idx);
            let mut found = false;
            seen.clear();
            for_each_wheel_set_containing(g, &live, q, v, budget, &mut |set, budget| {
                if !seen.insert(set.iter().map(|x| x as u16).collect::<Vec<u16>>()) {
                    return Ok(false);
                }
                let mut rest = live.clone();
                rest.remove_all(set);
                if pack_wheels(g, &rest, &rest_demands, budget)? {
                    found = true;
                    return Ok(true);
                }
                Ok(false)
            })?;
            if found {
                return Ok(true);
            }
        }
        live.remove(v);
    }
    Ok(false)
}

/// Greedy refutation: remove one high-degree vertex per found wheel until
/// `g[shrunk]` has no wheel of any demanded order. If that needed fewer
/// removals than wheels demanded, every packing is short at least one wheel.
fn hitting_bound_prunes(
    g: &Graph,
    allowed: &VertexSet,
    demands: &[usize],
    budget: &mut Budget,
) -> Result<bool> {
    let r = demands.len();
    let mut distinct = demands.to_vec();
    distinct.dedup();
    let mut shrunk = allowed.clone();
    let mut hits = 0usize;
    loop {
        budget.tick()?;
        let mut wheel = None;
        for &q in &distinct {
            if let Some(w) = find_wheel_within(g, &shrunk, q, budget)? {
                wheel = Some(w);
                break;
            }
        }
        match wheel {
            None => return Ok(hits < r),
            Some(w) => {
                hits += 1;
                if hits >= r {
                    return Ok(false);
                }
                let rm = w
                    .iter()
                    .max_by_key(|&x| (shrunk.degree_within(g, x), std::cmp::Reverse(x)))
                    .expect("wheel set is nonempty");
                shrunk.remove(rm);
            }
        }
    }
}

/// Enumerates the vertex sets of wheels on `q` vertices inside `mask` that
/// contain `v`, as hub or on the rim. Sets may repeat across hub choices;
/// callers deduplicate. `cb` returns true to stop early.
pub(crate) fn for_each_wheel_set_containing(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    v: usize,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&VertexSet, &mut Budget) -> Result<bool>,
) -> Result<bool> {
    if !mask.contains(v) {
        return Ok(false);
    }
    let nbv = VertexSet::neighbors_within(g, v, mask);

    // v as hub: every rim cycle inside N(v)
    if nbv.len() >= q - 1 {
        let mut shrink = nbv.clone();
        for anchor in nbv.iter() {
            if shrink.len() < q - 1 {
                break;
            }
            let stop = for_each_cycle_through(g, &shrink, q - 1, anchor, budget, &mut |rim, budget| {
                cb(&wheel_set(g.order(), v, rim), budget)
            })?;
            if stop {
                return Ok(true);
            }
            shrink.remove(anchor);
        }
    }

    // v on the rim: hub is one of v's neighbours
    for hub in nbv.iter() {
        if mask.degree_within(g, hub) < q - 1 {
            continue;
        }
        let nbh = VertexSet::neighbors_within(g, hub, mask);
        let stop = for_each_cycle_through(g, &nbh, q - 1, v, budget, &mut |rim, budget| {
            cb(&wheel_set(g.order(), hub, rim), budget)
        })?;
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Enumerates the vertex sets of wheels on `q` vertices inside `mask` whose
/// embedding uses the edge `{u, v}`, either hub-to-rim or along the rim.
pub(crate) fn for_each_wheel_set_using_edge(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    u: usize,
    v: usize,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&VertexSet, &mut Budget) -> Result<bool>,
) -> Result<bool> {
    if !(mask.contains(u) && mask.contains(v) && g.has_edge(u, v)) {
        return Ok(false);
    }
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut emit = |set: &VertexSet,
                    budget: &mut Budget,
                    cb: &mut dyn FnMut(&VertexSet, &mut Budget) -> Result<bool>| {
        if seen.insert(set.iter().map(|x| x as u16).collect::<Vec<u16>>()) {
            cb(set, budget)
        } else {
            Ok(false)
        }
    };

    // hub-to-rim: u hubs a wheel with v on the rim, and vice versa
    for (hub, rim_vertex) in [(u, v), (v, u)] {
        if mask.degree_within(g, hub) < q - 1 {
            continue;
        }
        let nbh = VertexSet::neighbors_within(g, hub, mask);
        let stop = for_each_cycle_through(g, &nbh, q - 1, rim_vertex, budget, &mut |rim, budget| {
            emit(&wheel_set(g.order(), hub, rim), budget, cb)
        })?;
        if stop {
            return Ok(true);
        }
    }

    // rim edge: a common neighbour hubs a rim cycle traversing {u, v}
    let mut hubs = VertexSet::neighbors_within(g, u, mask);
    hubs.intersect_with(&g.neighbor_set(v));
    for hub in hubs.iter() {
        if mask.degree_within(g, hub) < q - 1 {
            continue;
        }
        let nbh = VertexSet::neighbors_within(g, hub, mask);
        let stop = for_each_cycle_through_edge(g, &nbh, q - 1, u, v, budget, &mut |rim, budget| {
            emit(&wheel_set(g.order(), hub, rim), budget, cb)
        })?;
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

fn wheel_set(n: usize, hub: usize, rim: &[usize]) -> VertexSet {
    let mut set = VertexSet::empty(n);
    set.insert(hub);
    for &r in rim {
        set.insert(r);
    }
    set
}

// ============================================================================
// Star forests
// ============================================================================

/// Vertex-disjoint stars, one per listed max degree (each >= 1).
#[derive(Clone, Debug)]
pub struct StarForestPattern {
    /// Star max degrees, kept sorted descending.
    degrees: Vec<usize>,
}

impl StarForestPattern {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::domain("star forest needs at least one star"));
        }
        if degrees.iter().any(|&d| d < 1) {
            return Err(Error::domain("star degrees must be >= 1"));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StarForestPattern { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
}

impl Pattern for StarForestPattern {
    fn name(&self) -> String {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        format!("star-forest:{}", parts.join(","))
    }

    fn min_order(&self) -> usize {
        self.degrees.iter().map(|d| d + 1).sum()
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        let pool = VertexSet::full(g.order());
        let mut chosen = Vec::new();
        stars_backtrack(g, &pool, &self.degrees, &mut chosen, 0, budget)
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if !g.has_edge(u, v) {
            return Ok(false);
        }
        let mut prev = 0;
        for (idx, &d) in self.degrees.iter().enumerate() {
            if d == prev {
                continue;
            }
            prev = d;
            let mut rest = self.degrees.clone();
            rest.remove(idx);
            for (center, leaf) in [(u, v), (v, u)] {
                // the anchored star takes `center` plus forced leaf `leaf`
                let mut pool = VertexSet::full(g.order());
                pool.remove(leaf);
                let mut chosen = vec![(center, d - 1)];
                if !stars_feasible(g, &pool, &chosen, budget)? {
                    continue;
                }
                if stars_backtrack(g, &pool, &rest, &mut chosen, 1, budget)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Chooses centers for the remaining demands (descending), checking leaf
/// feasibility by matching after each placement. `chosen` may start with
/// `fixed` preassigned (center, residual-demand) pairs; the equal-demand
/// symmetry restriction only applies between unfixed siblings.
fn stars_backtrack(
    g: &Graph,
    pool: &VertexSet,
    remaining: &[usize],
    chosen: &mut Vec<(usize, usize)>,
    fixed: usize,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let Some((&d, rest)) = remaining.split_first() else {
        return Ok(true);
    };
    // ascending centers within a run of equal demands
    let min_center = match chosen.last() {
        Some(&(c, prev_d)) if chosen.len() > fixed && prev_d == d => c + 1,
        _ => 0,
    };
    for center in pool.iter() {
        if center < min_center {
            continue;
        }
        if chosen.iter().any(|&(c, _)| c == center) {
            continue;
        }
        if pool.degree_within(g, center) < d {
            continue;
        }
        chosen.push((center, d));
        if stars_feasible(g, pool, chosen, budget)?
            && stars_backtrack(g, pool, rest, chosen, fixed, budget)?
        {
            chosen.pop();
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Matching feasibility: can every chosen center claim its demanded number
/// of distinct leaves from the pool (centers excluded), leaves unshared?
fn stars_feasible(
    g: &Graph,
    pool: &VertexSet,
    centers: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<bool> {
    let n = g.order();
    let mut leaf_pool = pool.clone();
    for &(c, _) in centers {
        leaf_pool.remove(c);
    }
    let mut leaf_owner: Vec<Option<usize>> = vec![None; n];
    for ci in 0..centers.len() {
        for _ in 0..centers[ci].1 {
            let mut visited = VertexSet::empty(n);
            if !augment(g, &leaf_pool, centers, ci, &mut leaf_owner, &mut visited, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn augment(
    g: &Graph,
    leaf_pool: &VertexSet,
    centers: &[(usize, usize)],
    ci: usize,
    leaf_owner: &mut [Option<usize>],
    visited: &mut VertexSet,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    let mut cands = VertexSet::neighbors_within(g, centers[ci].0, leaf_pool);
    cands.remove_all(visited);
    for leaf in cands.iter() {
        visited.insert(leaf);
        match leaf_owner[leaf] {
            None => {
                leaf_owner[leaf] = Some(ci);
                return Ok(true);
            }
            Some(owner) => {
                if augment(g, leaf_pool, centers, owner, leaf_owner, visited, budget)? {
                    leaf_owner[leaf] = Some(ci);
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named;
    use crate::graph::{disjoint_union, join_graphs};
    use crate::pattern::{contains_star_forest, contains_wheel, contains_wheel_forest};

    #[test]
    fn wheel_forest_cases() {
        let w5 = named::wheel(5).unwrap();
        let two = disjoint_union([&w5, &w5]);
        assert!(contains_wheel_forest(&two, &[5, 5]).unwrap());

        let w5_k4 = disjoint_union([&w5, &named::clique(4).unwrap()]);
        assert!(!contains_wheel_forest(&w5_k4, &[5, 5]).unwrap());
        assert!(contains_wheel_forest(&w5_k4, &[5, 4]).unwrap());

        let k12 = named::clique(12).unwrap();
        assert!(contains_wheel_forest(&k12, &[5, 5]).unwrap());
        assert!(!contains_wheel_forest(&named::clique(9).unwrap(), &[5, 5]).unwrap());
    }

    #[test]
    fn single_wheel_forest_matches_wheel_detector() {
        let graphs = [
            named::wheel(6).unwrap(),
            named::clique(6).unwrap(),
            crate::construct::turan_graph(8, 3).unwrap(),
            named::complete_bipartite(3, 4).unwrap(),
        ];
        for g in &graphs {
            for q in [4, 5, 6, 7] {
                assert_eq!(
                    contains_wheel_forest(g, &[q]).unwrap(),
                    contains_wheel(g, q).unwrap(),
                    "q={q}"
                );
            }
        }
    }

    #[test]
    fn mixed_order_forest() {
        let g = disjoint_union([&named::wheel(6).unwrap(), &named::wheel(5).unwrap()]);
        assert!(contains_wheel_forest(&g, &[6, 5]).unwrap());
        assert!(!contains_wheel_forest(&g, &[6, 6]).unwrap());
        // joined clique vertex serves exactly one extra wheel
        let joined = join_graphs(&named::clique(1).unwrap(), &g);
        assert!(contains_wheel_forest(&joined, &[6, 5]).unwrap());
    }

    #[test]
    fn star_forest_cases() {
        let two_edges = disjoint_union([&named::clique(2).unwrap(), &named::clique(2).unwrap()]);
        assert!(contains_star_forest(&two_edges, &[1, 1]).unwrap());

        let k13 = named::star(4).unwrap();
        assert!(!contains_star_forest(&k13, &[2, 2]).unwrap());
        assert!(contains_star_forest(&k13, &[3]).unwrap());

        let p6 = named::path(6).unwrap();
        assert!(contains_star_forest(&p6, &[2, 2]).unwrap());
        assert!(!contains_star_forest(&p6, &[2, 2, 2]).unwrap());
    }

    #[test]
    fn star_forest_needs_distinct_leaves() {
        // two centers sharing all their neighbours fight over leaves
        let k23 = named::complete_bipartite(2, 3).unwrap();
        assert!(contains_star_forest(&k23, &[2, 1]).unwrap());
        assert!(!contains_star_forest(&k23, &[3, 2]).unwrap());
    }
}
