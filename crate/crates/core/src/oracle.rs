//! Ground-truth ex(n, H) at desk scale, plus brute-force verification of
//! the chromatic-deletion hypotheses behind the unique-extremal-graph
//! theorem.
//!
//! Two engines compute the same quantity along different routes: an
//! exhaustive scan over isomorphism classes, and a labeled edge-by-edge
//! branch-and-bound. They must agree wherever both run; the acceptance
//! suite checks that they do.

use crate::canon::canonical_form_capped;
use crate::codec::{decode_graph6, encode_graph6};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, GraphBuilder, VertexSet};
use crate::pattern::{chromatic_number, Budget, Pattern};
use itertools::Itertools;
use std::collections::BTreeSet;

/// Default order cap for exhaustive isomorphism-class enumeration.
pub const DEFAULT_ENUM_CAP: usize = 7;

/// Default order cap for the branch-and-bound engine.
pub const DEFAULT_BNB_CAP: usize = 10;

// ============================================================================
// Isomorphism-class enumeration
// ============================================================================

/// All graphs on `n` vertices, one representative per isomorphism class,
/// sorted by canonical form. Capped at [`DEFAULT_ENUM_CAP`].
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_capped(n, DEFAULT_ENUM_CAP)
}

/// Enumeration with an explicit cap (at most the canonicalisation cap).
pub fn enumerate_graphs_capped(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n > cap {
        return Err(Error::capacity(format!(
            "enumerate_graphs is capped at order {cap}, got {n}"
        )));
    }
    let canon_cap = n.max(crate::canon::DEFAULT_CANON_CAP);
    // grow one vertex at a time: every class on i+1 vertices extends some
    // class on i vertices by one new vertex with an arbitrary neighbourhood
    let mut current: Vec<Graph> = vec![Graph::edgeless(0)];
    for size in 1..=n {
        let mut forms: BTreeSet<Vec<u8>> = BTreeSet::new();
        for g in &current {
            for nb in 0u64..(1u64 << (size - 1)) {
                let mut b = GraphBuilder::new(size);
                for (u, v) in g.edges() {
                    b.add_edge(u, v);
                }
                for w in 0..size - 1 {
                    if nb >> w & 1 == 1 {
                        b.add_edge(w, size - 1);
                    }
                }
                forms.insert(canonical_form_capped(&b.build(), canon_cap)?);
            }
        }
        current = forms
            .iter()
            .map(|f| decode_graph6(f))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(current)
}

// ============================================================================
// ex(n, H) engines
// ============================================================================

/// Brute-force outcome: the extremal value, whether the search space was
/// exhausted, and one extremal witness as a graph6 line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub exact: bool,
    pub witness: Vec<u8>,
    pub nodes_explored: u64,
}

/// Knobs for a brute-force run.
#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub budget_nodes: u64,
    /// A certified pattern-free graph used as the initial incumbent, e.g.
    /// the extremal construction for the pattern.
    pub warm_start: Option<Graph>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget_nodes: crate::pattern::DEFAULT_NODE_BUDGET,
            warm_start: None,
        }
    }
}

/// A strategy that computes ex(n, pattern), selectable by name.
pub trait ExEngine: Sync {
    fn name(&self) -> &'static str;
    fn order_cap(&self) -> usize;
    fn solve(&self, n: usize, pattern: &dyn Pattern, opts: &OracleOptions) -> Result<OracleResult>;
}

/// Rejects queries where no pattern-free graph exists at all (the pattern
/// is contained in the edgeless graph, e.g. a single-vertex pattern).
fn check_solvable(n: usize, pattern: &dyn Pattern, budget: &mut Budget) -> Result<()> {
    if pattern.contained_in(&Graph::edgeless(n), budget)? {
        return Err(Error::domain(format!(
            "pattern {} is contained in every graph on {n} vertices; ex(n, H) is undefined",
            pattern.name()
        )));
    }
    Ok(())
}

/// Exhaustive scan over isomorphism classes.
pub struct EnumerationEngine;

impl ExEngine for EnumerationEngine {
    fn name(&self) -> &'static str {
        "enumeration"
    }

    fn order_cap(&self) -> usize {
        DEFAULT_ENUM_CAP
    }

    fn solve(&self, n: usize, pattern: &dyn Pattern, opts: &OracleOptions) -> Result<OracleResult> {
        let mut budget = Budget::new(opts.budget_nodes);
        check_solvable(n, pattern, &mut budget)?;
        let graphs = enumerate_graphs(n)?;
        let mut best: Option<(usize, Vec<u8>)> = None;
        let mut exact = true;
        for g in &graphs {
            if best.as_ref().is_some_and(|(v, _)| g.edge_count() <= *v) {
                continue;
            }
            match pattern.contained_in(g, &mut budget) {
                Ok(true) => {}
                Ok(false) => best = Some((g.edge_count(), encode_graph6(g)?)),
                Err(Error::BudgetExceeded { .. }) => {
                    exact = false;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let (value, witness) = best.ok_or(Error::BudgetExceeded {
            nodes: budget.used(),
        })?;
        Ok(OracleResult {
            value,
            exact,
            witness,
            nodes_explored: budget.used(),
        })
    }
}

/// Labeled branch-and-bound over edge slots in lexicographic order:
/// branch on include/exclude, prune when the remaining slots cannot beat
/// the incumbent, and test freeness incrementally on each inclusion by
/// checking only embeddings through the new edge.
pub struct BranchBoundEngine;

struct BnbState<'a> {
    pattern: &'a dyn Pattern,
    slots: Vec<(usize, usize)>,
    cur: Graph,
    best_value: i64,
    best_witness: Option<Vec<u8>>,
}

impl BnbState<'_> {
    fn run(&mut self, slot: usize, cur_edges: usize, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        let remaining = self.slots.len() - slot;
        if (cur_edges + remaining) as i64 <= self.best_value {
            return Ok(());
        }
        if slot == self.slots.len() {
            // strictly better by the prune above
            self.best_value = cur_edges as i64;
            self.best_witness = Some(encode_graph6(&self.cur)?);
            return Ok(());
        }
        let (u, v) = self.slots[slot];
        self.cur.set_edge(u, v, true);
        let blocked = self.pattern.contained_using_edge(&self.cur, u, v, budget);
        match blocked {
            Ok(false) => self.run(slot + 1, cur_edges + 1, budget)?,
            Ok(true) => {}
            Err(e) => {
                self.cur.set_edge(u, v, false);
                return Err(e);
            }
        }
        self.cur.set_edge(u, v, false);
        self.run(slot + 1, cur_edges, budget)
    }
}

impl ExEngine for BranchBoundEngine {
    fn name(&self) -> &'static str {
        "branch-and-bound"
    }

    fn order_cap(&self) -> usize {
        DEFAULT_BNB_CAP
    }

    fn solve(&self, n: usize, pattern: &dyn Pattern, opts: &OracleOptions) -> Result<OracleResult> {
        if n > self.order_cap() {
            return Err(Error::capacity(format!(
                "branch-and-bound engine is capped at order {}, got {n}",
                self.order_cap()
            )));
        }
        let mut budget = Budget::new(opts.budget_nodes);
        check_solvable(n, pattern, &mut budget)?;

        let (mut best_value, mut best_witness) = (-1i64, None);
        if let Some(warm) = &opts.warm_start {
            if warm.order() != n {
                return Err(Error::domain(format!(
                    "warm start has order {}, expected {n}",
                    warm.order()
                )));
            }
            if pattern.contained_in(warm, &mut budget)? {
                return Err(Error::domain("warm start graph is not pattern-free"));
            }
            best_value = warm.edge_count() as i64;
            best_witness = Some(encode_graph6(warm)?);
        }

        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut state = BnbState {
            pattern,
            slots,
            cur: Graph::edgeless(n),
            best_value,
            best_witness,
        };
        let exact = match state.run(0, 0, &mut budget) {
            Ok(()) => true,
            Err(Error::BudgetExceeded { .. }) => false,
            Err(e) => return Err(e),
        };
        let witness = state.best_witness.ok_or(Error::BudgetExceeded {
            nodes: budget.used(),
        })?;
        Ok(OracleResult {
            value: state.best_value as usize,
            exact,
            witness,
            nodes_explored: budget.used(),
        })
    }
}

static ENGINES: &[&dyn ExEngine] = &[&EnumerationEngine, &BranchBoundEngine];

/// Registered engines in stable order.
pub fn engines() -> &'static [&'static dyn ExEngine] {
    ENGINES
}

/// Looks up an engine by name (`enumeration` or `branch-and-bound`).
pub fn lookup_engine(name: &str) -> Option<&'static dyn ExEngine> {
    ENGINES.iter().copied().find(|e| e.name() == name)
}

/// Convenience front end: run the named engine.
pub fn brute_force_ex(
    n: usize,
    pattern: &dyn Pattern,
    engine: &str,
    opts: &OracleOptions,
) -> Result<OracleResult> {
    let engine = lookup_engine(engine)
        .ok_or_else(|| Error::domain(format!("unknown oracle engine {engine:?}")))?;
    engine.solve(n, pattern, opts)
}

// ============================================================================
// Simonovits parameters
// ============================================================================

/// The (p, s) hypothesis data: p is one less than the family's minimum
/// chromatic number; s is the least omission threshold where deleting any
/// s-1 vertices keeps some member (p+1)-chromatic while deleting s suitable
/// edges of some member reaches p-colorability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimonovitsParams {
    pub p: usize,
    pub s: usize,
    pub certified: bool,
}

/// Verifies the deletion hypotheses by exhaustive subset enumeration.
pub fn simonovits_params(family: &[Graph]) -> Result<SimonovitsParams> {
    if family.is_empty() {
        return Err(Error::domain("family must be nonempty"));
    }
    let chis = family
        .iter()
        .map(chromatic_number)
        .collect::<Result<Vec<_>>>()?;
    let min_chi = *chis.iter().min().unwrap();
    if min_chi < 2 {
        return Err(Error::domain(format!(
            "family needs minimum chromatic number >= 2, got {min_chi}"
        )));
    }
    let p = min_chi - 1;
    let max_edges = family.iter().map(Graph::edge_count).max().unwrap();

    for s in 1..=max_edges {
        // (i) deleting any s-1 vertices of any member keeps chi >= p+1;
        // this only gets harder as s grows, so a failure ends the search
        if !vertex_deletion_holds(family, s - 1, p)? {
            return Ok(SimonovitsParams { p, s: 0, certified: false });
        }
        // (ii) some member loses p+1-chromaticity after deleting s edges
        if edge_deletion_reaches(family, s, p)? {
            return Ok(SimonovitsParams { p, s, certified: true });
        }
    }
    Ok(SimonovitsParams { p, s: 0, certified: false })
}

fn vertex_deletion_holds(family: &[Graph], del: usize, p: usize) -> Result<bool> {
    for g in family {
        if del > g.order() {
            return Ok(false);
        }
        for subset in (0..g.order()).combinations(del) {
            let mut keep = VertexSet::full(g.order());
            for &v in &subset {
                keep.remove(v);
            }
            let sub = induced_subgraph(g, &keep)?;
            if chromatic_number(&sub)? < p + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn edge_deletion_reaches(family: &[Graph], del: usize, p: usize) -> Result<bool> {
    for g in family {
        let edges = g.edges();
        if del > edges.len() {
            continue;
        }
        for subset in edges.iter().combinations(del) {
            let mut b = GraphBuilder::from(g);
            for &&(u, v) in &subset {
                b.remove_edge(u, v);
            }
            if chromatic_number(&b.build())? <= p {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named;
    use crate::graph::disjoint_union;
    use crate::pattern::{parse_pattern, GenericPattern};

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(2).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5).unwrap().len(), 34);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let graphs = enumerate_graphs(5).unwrap();
        let forms: Vec<Vec<u8>> = graphs
            .iter()
            .map(|g| crate::canon::canonical_form(g).unwrap())
            .collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn triangle_free_on_five_vertices() {
        let pattern = GenericPattern::new(named::clique(3).unwrap()).unwrap();
        for engine in ["enumeration", "branch-and-bound"] {
            let r = brute_force_ex(5, &pattern, engine, &OracleOptions::default()).unwrap();
            assert_eq!(r.value, 6, "{engine}");
            assert!(r.exact);
            // the unique extremal graph is K_{2,3}
            let witness = decode_graph6(&r.witness).unwrap();
            assert_eq!(
                crate::canon::canonical_form(&witness).unwrap(),
                crate::canon::canonical_form(&named::complete_bipartite(2, 3).unwrap()).unwrap(),
                "{engine}"
            );
        }
    }

    #[test]
    fn path3_free_is_a_matching() {
        let pattern = parse_pattern("path:3").unwrap();
        for n in 1..=7 {
            let r = brute_force_ex(n, pattern.as_ref(), "enumeration", &OracleOptions::default())
                .unwrap();
            assert_eq!(r.value, n / 2, "n={n}");
        }
    }

    #[test]
    fn c4_free_at_four_vertices() {
        let pattern = parse_pattern("cycle:4").unwrap();
        let r = brute_force_ex(4, pattern.as_ref(), "enumeration", &OracleOptions::default())
            .unwrap();
        assert_eq!(r.value, 4);
        let r2 = brute_force_ex(
            4,
            pattern.as_ref(),
            "branch-and-bound",
            &OracleOptions::default(),
        )
        .unwrap();
        assert_eq!(r2.value, 4);
    }

    #[test]
    fn witnesses_are_free_with_the_claimed_edges() {
        for spec in ["clique:3", "cycle:4", "wheel:5", "star-forest:2,1"] {
            let pattern = parse_pattern(spec).unwrap();
            let r = brute_force_ex(6, pattern.as_ref(), "enumeration", &OracleOptions::default())
                .unwrap();
            let witness = decode_graph6(&r.witness).unwrap();
            assert_eq!(witness.order(), 6);
            assert_eq!(witness.edge_count(), r.value);
            let mut budget = Budget::default();
            assert!(!pattern.contained_in(&witness, &mut budget).unwrap(), "{spec}");
        }
    }

    #[test]
    fn warm_start_accepted_and_checked() {
        let pattern = GenericPattern::new(named::clique(3).unwrap()).unwrap();
        let warm = named::complete_bipartite(2, 3).unwrap();
        let opts = OracleOptions {
            warm_start: Some(warm),
            ..Default::default()
        };
        let r = brute_force_ex(5, &pattern, "branch-and-bound", &opts).unwrap();
        assert_eq!(r.value, 6);
        // a warm start that is not pattern-free is rejected
        let bad = OracleOptions {
            warm_start: Some(named::clique(5).unwrap()),
            ..Default::default()
        };
        assert!(brute_force_ex(5, &pattern, "branch-and-bound", &bad).is_err());
    }

    #[test]
    fn undefined_queries_are_rejected() {
        // a one-vertex pattern is in every nonempty graph
        let pattern = GenericPattern::new(Graph::edgeless(1)).unwrap();
        assert!(brute_force_ex(3, &pattern, "enumeration", &OracleOptions::default()).is_err());
        assert!(lookup_engine("nope").is_none());
    }

    #[test]
    fn budget_exhaustion_reports_inexact() {
        let pattern = parse_pattern("clique:3").unwrap();
        let opts = OracleOptions {
            budget_nodes: 300,
            ..Default::default()
        };
        match brute_force_ex(6, pattern.as_ref(), "branch-and-bound", &opts) {
            Ok(r) => assert!(!r.exact),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn simonovits_known_families() {
        let w6 = named::wheel(6).unwrap();
        let r = simonovits_params(std::slice::from_ref(&w6)).unwrap();
        assert_eq!((r.p, r.s, r.certified), (3, 1, true));

        let k3 = named::clique(3).unwrap();
        let r = simonovits_params(std::slice::from_ref(&k3)).unwrap();
        assert_eq!((r.p, r.s, r.certified), (2, 1, true));

        let two_w6 = disjoint_union([&w6, &w6]);
        let r = simonovits_params(std::slice::from_ref(&two_w6)).unwrap();
        assert_eq!((r.p, r.s, r.certified), (3, 2, true));
    }

    #[test]
    fn simonovits_rejects_degenerate_families() {
        assert!(simonovits_params(&[]).is_err());
        assert!(simonovits_params(&[Graph::edgeless(3)]).is_err());
    }
}
