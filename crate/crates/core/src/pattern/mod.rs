//! Decision procedures for forbidden-subgraph containment.
//!
//! Containment is always non-induced subgraph containment (the Turán-number
//! convention). Every detector is an exact decision procedure driven by a
//! node [`Budget`]: when the budget runs out the search returns a
//! distinguished error instead of a wrong answer.
//!
//! Each pattern family implements [`Pattern`], and [`parse_pattern`] builds
//! one from a `name:args` spec string, so callers select detectors by name
//! at runtime.

mod chromatic;
mod generic;
mod packing;

pub use chromatic::{chromatic_number, chromatic_number_capped, DEFAULT_CHROMATIC_CAP};
pub use generic::GenericPattern;
pub use packing::{StarForestPattern, WheelForestPattern};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default search-node budget; sized so the verification sweeps finish in
/// minutes on a laptop.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Search-node allowance shared by a detector invocation.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { nodes: self.used })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}

// ============================================================================
// Pattern trait and registry
// ============================================================================

/// A forbidden pattern with a containment decision procedure.
pub trait Pattern: std::fmt::Debug + Send + Sync {
    /// Spec string this pattern parses back from, e.g. `wheel-forest:7,7`.
    fn name(&self) -> String;

    /// Vertices any host graph needs to contain the pattern.
    fn min_order(&self) -> usize;

    /// True iff `g` contains the pattern as a subgraph.
    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool>;

    /// True iff `g` contains an embedding that maps some pattern edge onto
    /// the edge `{u, v}` of `g`. Exactly the incremental check needed when
    /// `g` minus that edge is already known pattern-free.
    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool>;
}

/// Builds a pattern from a `name:args` spec string. Registered names:
/// `path:q`, `cycle:q`, `wheel:q`, `star:q`, `clique:q`,
/// `complete-bipartite:a,b`, `wheel-forest:q1,q2,...`,
/// `star-forest:d1,d2,...`, `g6:<line>`.
pub fn parse_pattern(spec: &str) -> Result<Box<dyn Pattern>> {
    let (name, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::domain(format!("pattern spec {spec:?} must look like name:args")))?;
    let ints = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("bad integer {t:?} in pattern {spec:?}")))
            })
            .collect()
    };
    match name {
        "path" => Ok(Box::new(PathPattern::new(one(&ints(rest)?, spec)?)?)),
        "cycle" => Ok(Box::new(CyclePattern::new(one(&ints(rest)?, spec)?)?)),
        "wheel" => Ok(Box::new(WheelPattern::new(one(&ints(rest)?, spec)?)?)),
        "wheel-forest" => Ok(Box::new(WheelForestPattern::new(ints(rest)?)?)),
        "star-forest" => Ok(Box::new(StarForestPattern::new(ints(rest)?)?)),
        "star" => {
            let q = one(&ints(rest)?, spec)?;
            let g = crate::construct::named::star(q)?;
            Ok(Box::new(GenericPattern::with_label(g, format!("star:{q}"))?))
        }
        "clique" => {
            let q = one(&ints(rest)?, spec)?;
            let g = crate::construct::named::clique(q)?;
            Ok(Box::new(GenericPattern::with_label(g, format!("clique:{q}"))?))
        }
        "complete-bipartite" => {
            let v = ints(rest)?;
            if v.len() != 2 {
                return Err(Error::domain(format!(
                    "complete-bipartite takes two sizes, got {spec:?}"
                )));
            }
            let g = crate::construct::named::complete_bipartite(v[0], v[1])?;
            Ok(Box::new(GenericPattern::with_label(
                g,
                format!("complete-bipartite:{},{}", v[0], v[1]),
            )?))
        }
        "g6" => {
            let g = crate::codec::decode_graph6(rest.as_bytes())?;
            Ok(Box::new(GenericPattern::with_label(g, format!("g6:{rest}"))?))
        }
        other => Err(Error::domain(format!("unknown pattern kind {other:?}"))),
    }
}

fn one(v: &[usize], spec: &str) -> Result<usize> {
    if v.len() == 1 {
        Ok(v[0])
    } else {
        Err(Error::domain(format!("pattern {spec:?} takes one integer")))
    }
}

// ============================================================================
// Paths
// ============================================================================

/// Simple path on `q` vertices.
#[derive(Clone, Debug)]
pub struct PathPattern {
    q: usize,
}

impl PathPattern {
    pub fn new(q: usize) -> Result<Self> {
        if q < 1 {
            return Err(Error::domain(format!("path needs q >= 1, got {q}")));
        }
        Ok(PathPattern { q })
    }
}

impl Pattern for PathPattern {
    fn name(&self) -> String {
        format!("path:{}", self.q)
    }

    fn min_order(&self) -> usize {
        self.q
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        path_exists_within(g, &VertexSet::full(g.order()), self.q, budget)
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if self.q < 2 {
            return Ok(true); // a single vertex is hosted by either endpoint
        }
        let mut used = VertexSet::empty(g.order());
        used.insert(u);
        used.insert(v);
        path_extend_two_sided(g, u, v, &mut used, self.q - 2, true, budget)
    }
}

/// DFS path search with per-component order pruning: a component smaller
/// than `q` cannot host the path.
pub(crate) fn path_exists_within(
    g: &Graph,
    allowed: &VertexSet,
    q: usize,
    budget: &mut Budget,
) -> Result<bool> {
    if q == 0 {
        return Ok(true);
    }
    for comp in g.components_within(allowed) {
        if comp.len() < q {
            continue;
        }
        for start in comp.iter() {
            let mut used = VertexSet::empty(g.order());
            used.insert(start);
            if path_extend(g, &comp, start, &mut used, q - 1, budget)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn path_extend(
    g: &Graph,
    comp: &VertexSet,
    end: usize,
    used: &mut VertexSet,
    remaining: usize,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    if remaining == 0 {
        return Ok(true);
    }
    let mut cands = VertexSet::neighbors_within(g, end, comp);
    cands.remove_all(used);
    for w in cands.iter() {
        used.insert(w);
        if path_extend(g, comp, w, used, remaining - 1, budget)? {
            used.remove(w);
            return Ok(true);
        }
        used.remove(w);
    }
    Ok(false)
}

/// Grows a path around a fixed middle edge: extend the `u` end while in the
/// first phase, then only the `v` end, so each split is tried once.
fn path_extend_two_sided(
    g: &Graph,
    end_u: usize,
    end_v: usize,
    used: &mut VertexSet,
    remaining: usize,
    phase_left: bool,
    budget: &mut Budget,
) -> Result<bool> {
    budget.tick()?;
    if remaining == 0 {
        return Ok(true);
    }
    if phase_left {
        let mut cands = g.neighbor_set(end_u);
        cands.remove_all(used);
        for w in cands.iter() {
            used.insert(w);
            if path_extend_two_sided(g, w, end_v, used, remaining - 1, true, budget)? {
                used.remove(w);
                return Ok(true);
            }
            used.remove(w);
        }
        path_extend_two_sided(g, end_u, end_v, used, remaining, false, budget)
    } else {
        let mut cands = g.neighbor_set(end_v);
        cands.remove_all(used);
        for w in cands.iter() {
            used.insert(w);
            if path_extend_two_sided(g, end_u, w, used, remaining - 1, false, budget)? {
                used.remove(w);
                return Ok(true);
            }
            used.remove(w);
        }
        Ok(false)
    }
}

// ============================================================================
// Cycles
// ============================================================================

/// Cycle on `q >= 3` vertices.
#[derive(Clone, Debug)]
pub struct CyclePattern {
    q: usize,
}

impl CyclePattern {
    pub fn new(q: usize) -> Result<Self> {
        if q < 3 {
            return Err(Error::domain(format!("cycle needs q >= 3, got {q}")));
        }
        Ok(CyclePattern { q })
    }
}

impl Pattern for CyclePattern {
    fn name(&self) -> String {
        format!("cycle:{}", self.q)
    }

    fn min_order(&self) -> usize {
        self.q
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        Ok(find_cycle_within(g, &VertexSet::full(g.order()), self.q, budget)?.is_some())
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        let mask = VertexSet::full(g.order());
        for_each_cycle_through_edge(g, &mask, self.q, u, v, budget, &mut |_, _| Ok(true))
    }
}

/// Finds one cycle on `q` vertices inside `mask`, anchored at its minimum
/// vertex so each cycle is considered once per reflection pair.
pub(crate) fn find_cycle_within(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    debug_assert!(q >= 3);
    if mask.len() < q {
        return Ok(None);
    }
    let mut found = None;
    let mut shrink = mask.clone();
    for anchor in mask.iter() {
        if shrink.len() < q {
            break;
        }
        let stop = for_each_cycle_through(g, &shrink, q, anchor, budget, &mut |cycle, _| {
            found = Some(cycle.to_vec());
            Ok(true)
        })?;
        if stop {
            return Ok(found);
        }
        shrink.remove(anchor);
    }
    Ok(None)
}

/// Enumerates cycles on `q` vertices inside `mask` that contain `anchor`,
/// invoking `cb` with each cycle's vertex list (reflections deduplicated).
/// `cb` returns true to stop enumeration; the return value reports whether
/// enumeration stopped early.
pub(crate) fn for_each_cycle_through(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    anchor: usize,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&[usize], &mut Budget) -> Result<bool>,
) -> Result<bool> {
    debug_assert!(q >= 3);
    if !mask.contains(anchor) {
        return Ok(false);
    }
    let mut path = vec![anchor];
    let mut used = VertexSet::empty(g.order());
    used.insert(anchor);
    cycle_dfs(g, mask, q, anchor, &mut path, &mut used, budget, cb)
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    anchor: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&[usize], &mut Budget) -> Result<bool>,
) -> Result<bool> {
    budget.tick()?;
    let last = *path.last().unwrap();
    let mut cands = VertexSet::neighbors_within(g, last, mask);
    cands.remove_all(used);
    if path.len() == q - 1 {
        // last extension must close the cycle
        cands.intersect_with(&g.neighbor_set(anchor));
    }
    for w in cands.iter() {
        path.push(w);
        used.insert(w);
        let stop = if path.len() == q {
            // reflection dedup: fix the orientation by path[1] < path[q-1]
            if path[1] < w {
                cb(path, budget)?
            } else {
                false
            }
        } else {
            cycle_dfs(g, mask, q, anchor, path, used, budget, cb)?
        };
        path.pop();
        used.remove(w);
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Enumerates cycles on `q` vertices inside `mask` that traverse the edge
/// `{u, v}`; each such cycle is produced exactly once.
pub(crate) fn for_each_cycle_through_edge(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    u: usize,
    v: usize,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&[usize], &mut Budget) -> Result<bool>,
) -> Result<bool> {
    debug_assert!(q >= 3);
    if !(mask.contains(u) && mask.contains(v) && g.has_edge(u, v)) {
        return Ok(false);
    }
    let mut path = vec![u, v];
    let mut used = VertexSet::empty(g.order());
    used.insert(u);
    used.insert(v);
    edge_cycle_dfs(g, mask, q, u, &mut path, &mut used, budget, cb)
}

#[allow(clippy::too_many_arguments)]
fn edge_cycle_dfs(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    start: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    budget: &mut Budget,
    cb: &mut dyn FnMut(&[usize], &mut Budget) -> Result<bool>,
) -> Result<bool> {
    budget.tick()?;
    let last = *path.last().unwrap();
    let mut cands = VertexSet::neighbors_within(g, last, mask);
    cands.remove_all(used);
    if path.len() == q - 1 {
        cands.intersect_with(&g.neighbor_set(start));
    }
    for w in cands.iter() {
        path.push(w);
        used.insert(w);
        let stop = if path.len() == q {
            cb(path, budget)?
        } else {
            edge_cycle_dfs(g, mask, q, start, path, used, budget, cb)?
        };
        path.pop();
        used.remove(w);
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

// ============================================================================
// Wheels
// ============================================================================

/// Wheel on `q >= 4` vertices: a hub joined to every vertex of a cycle on
/// `q - 1` vertices. W_4 = K_4 goes through the same hub+rim logic.
#[derive(Clone, Debug)]
pub struct WheelPattern {
    q: usize,
}

impl WheelPattern {
    pub fn new(q: usize) -> Result<Self> {
        if q < 4 {
            return Err(Error::domain(format!("wheel needs q >= 4, got {q}")));
        }
        Ok(WheelPattern { q })
    }
}

impl Pattern for WheelPattern {
    fn name(&self) -> String {
        format!("wheel:{}", self.q)
    }

    fn min_order(&self) -> usize {
        self.q
    }

    fn contained_in(&self, g: &Graph, budget: &mut Budget) -> Result<bool> {
        Ok(find_wheel_within(g, &VertexSet::full(g.order()), self.q, budget)?.is_some())
    }

    fn contained_using_edge(
        &self,
        g: &Graph,
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        let mask = VertexSet::full(g.order());
        packing::for_each_wheel_set_using_edge(g, &mask, self.q, u, v, budget, &mut |_, _| Ok(true))
    }
}

/// Finds one wheel on `q` vertices inside `mask`, hubs tried in descending
/// degree order. Returns the wheel's vertex set.
pub(crate) fn find_wheel_within(
    g: &Graph,
    mask: &VertexSet,
    q: usize,
    budget: &mut Budget,
) -> Result<Option<VertexSet>> {
    debug_assert!(q >= 4);
    if mask.len() < q {
        return Ok(None);
    }
    let mut hubs: Vec<(usize, usize)> = mask
        .iter()
        .map(|v| (mask.degree_within(g, v), v))
        .filter(|&(d, _)| d >= q - 1)
        .collect();
    hubs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, hub) in hubs {
        budget.tick()?;
        let nbh = VertexSet::neighbors_within(g, hub, mask);
        if let Some(rim) = find_cycle_within(g, &nbh, q - 1, budget)? {
            let mut set = VertexSet::empty(g.order());
            set.insert(hub);
            for r in rim {
                set.insert(r);
            }
            return Ok(Some(set));
        }
    }
    Ok(None)
}

// ============================================================================
// Free-function surface
// ============================================================================

/// True iff `g` has a simple path on `q` vertices.
pub fn contains_path(g: &Graph, q: usize) -> Result<bool> {
    PathPattern::new(q)?.contained_in(g, &mut Budget::default())
}

/// True iff `g` contains a cycle on `q >= 3` vertices as a subgraph.
pub fn contains_cycle(g: &Graph, q: usize) -> Result<bool> {
    CyclePattern::new(q)?.contained_in(g, &mut Budget::default())
}

/// True iff `g` contains a wheel on `q >= 4` vertices as a subgraph.
pub fn contains_wheel(g: &Graph, q: usize) -> Result<bool> {
    WheelPattern::new(q)?.contained_in(g, &mut Budget::default())
}

/// True iff `g` contains vertex-disjoint wheels with the given orders.
pub fn contains_wheel_forest(g: &Graph, orders: &[usize]) -> Result<bool> {
    WheelForestPattern::new(orders.to_vec())?.contained_in(g, &mut Budget::default())
}

/// True iff `g` contains vertex-disjoint stars with the given max degrees.
pub fn contains_star_forest(g: &Graph, degrees: &[usize]) -> Result<bool> {
    StarForestPattern::new(degrees.to_vec())?.contained_in(g, &mut Budget::default())
}

/// True iff an injective map from `pattern` vertices to `g` vertices
/// preserves all pattern edges.
pub fn contains_subgraph(g: &Graph, pattern: &Graph) -> Result<bool> {
    GenericPattern::new(pattern.clone())?.contained_in(g, &mut Budget::default())
}
