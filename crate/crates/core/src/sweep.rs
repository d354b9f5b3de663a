//! Verification sweeps with machine-readable reports.
//!
//! Each suite drives one family of checks over a parameter grid and emits
//! [`ReportRow`]s in a deterministic order, so CSV output is byte-identical
//! across runs with the same spec and budgets. Inequality and equality
//! checks become `ok`/`mismatch` rows; comparisons against asymptotic
//! formulas at small n are informational notes, never failures.

use crate::construct::{
    extremal_family_graph, parse_construction, ConstructionReport, FamilyParams,
};
use crate::error::{Error, Result};
use crate::formula::{
    conjecture_ex, ex_even_wheel_mix, ex_m_odd_wheels, ex_odd_wheel, ex_star_forest, family_edges,
    g_value, main1_optimizer_candidates, turan_edges, LiuVariant,
};
use crate::graph::Graph;
use crate::oracle::{brute_force_ex, OracleOptions, DEFAULT_BNB_CAP, DEFAULT_ENUM_CAP};
use crate::pattern::{
    chromatic_number, parse_pattern, Budget, Pattern, WheelForestPattern, DEFAULT_NODE_BUDGET,
};
use rayon::prelude::*;
use std::fmt;

// ============================================================================
// Rows, summaries, CSV
// ============================================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Skipped,
    Budget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Skipped => "skipped",
            Status::Budget => "budget",
        };
        f.write_str(s)
    }
}

/// One check outcome. `status` is `ok` exactly when expected and observed
/// agree (where both are defined) and the check ran to completion.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub suite: &'static str,
    /// Semicolon-separated `key=value` pairs; never contains commas.
    pub params: String,
    pub expected: Option<String>,
    pub observed: Option<String>,
    pub status: Status,
    pub note: String,
}

impl ReportRow {
    fn new(suite: &'static str, params: String) -> Self {
        ReportRow {
            suite,
            params,
            expected: None,
            observed: None,
            status: Status::Ok,
            note: String::new(),
        }
    }

    fn compare<T: PartialEq + fmt::Display>(mut self, expected: T, observed: T) -> Self {
        self.status = if expected == observed {
            Status::Ok
        } else {
            Status::Mismatch
        };
        self.expected = Some(expected.to_string());
        self.observed = Some(observed.to_string());
        self
    }

    fn with_note(mut self, note: String) -> Self {
        debug_assert!(!note.contains(','));
        self.note = note;
        self
    }

    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.suite,
            self.params,
            self.expected.as_deref().unwrap_or(""),
            self.observed.as_deref().unwrap_or(""),
            self.status,
            self.note
        )
    }
}

pub const CSV_HEADER: &str = "suite,params,expected,observed,status,note";

/// Renders rows as CSV with the fixed header.
pub fn to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

/// Row counts by status.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub ok: usize,
    pub mismatch: usize,
    pub skipped: usize,
    pub budget: usize,
}

impl Summary {
    pub fn from_rows(rows: &[ReportRow]) -> Self {
        let mut s = Summary::default();
        for row in rows {
            match row.status {
                Status::Ok => s.ok += 1,
                Status::Mismatch => s.mismatch += 1,
                Status::Skipped => s.skipped += 1,
                Status::Budget => s.budget += 1,
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        format!(
            "{{\"ok\":{},\"mismatch\":{},\"skipped\":{},\"budget\":{}}}",
            self.ok, self.mismatch, self.skipped, self.budget
        )
    }
}

// ============================================================================
// Sweep specs
// ============================================================================

/// Inclusive integer range, parsed from `lo..hi` or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeIncl {
    pub lo: i64,
    pub hi: i64,
}

impl RangeIncl {
    pub fn new(lo: i64, hi: i64) -> Self {
        RangeIncl { lo, hi }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for RangeIncl {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::domain(format!("bad range bound {t:?}")))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(Error::domain(format!("empty range {s:?}")));
            }
            Ok(RangeIncl::new(lo, hi))
        } else {
            let v = parse(s)?;
            Ok(RangeIncl::new(v, v))
        }
    }
}

impl fmt::Display for RangeIncl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Grid and knobs for one sweep; fields left `None` use suite defaults.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub n: Option<RangeIncl>,
    pub k: Option<RangeIncl>,
    pub m: Option<RangeIncl>,
    pub h: Option<RangeIncl>,
    pub pattern: Option<String>,
    pub budget_nodes: u64,
    pub liu_variant: LiuVariant,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            n: None,
            k: None,
            m: None,
            h: None,
            pattern: None,
            budget_nodes: DEFAULT_NODE_BUDGET,
            liu_variant: LiuVariant::Verbatim,
        }
    }
}

impl SweepSpec {
    fn n_or(&self, lo: i64, hi: i64) -> RangeIncl {
        self.n.unwrap_or(RangeIncl::new(lo, hi))
    }
    fn k_or(&self, lo: i64, hi: i64) -> RangeIncl {
        self.k.unwrap_or(RangeIncl::new(lo, hi))
    }
    fn m_or(&self, lo: i64, hi: i64) -> RangeIncl {
        self.m.unwrap_or(RangeIncl::new(lo, hi))
    }
    fn h_or(&self, lo: i64, hi: i64) -> RangeIncl {
        self.h.unwrap_or(RangeIncl::new(lo, hi))
    }
}

/// One runnable verification suite, selectable by name.
pub trait Suite: Sync {
    fn id(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>>;
}

static SUITES: &[&dyn Suite] = &[
    &ConstructVerifySuite,
    &FormulaIdentitiesSuite,
    &LemmaBoundsSuite,
    &ConjectureSuite,
    &OracleCompareSuite,
    &SimonovitsSuite,
];

pub fn suites() -> &'static [&'static dyn Suite] {
    SUITES
}

pub fn lookup_suite(name: &str) -> Option<&'static dyn Suite> {
    SUITES.iter().copied().find(|s| s.id() == name)
}

/// Runs the named suite over its grid.
pub fn run_sweep(suite: &str, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
    let suite = lookup_suite(suite)
        .ok_or_else(|| Error::domain(format!("unknown suite {suite:?}")))?;
    suite.run(spec)
}

// ============================================================================
// construct-verify
// ============================================================================

/// Zero-defect family grid points for one (k, m): scan n1 ascending and
/// n2 in 2..=min(n1, 5), keeping the first `per_pair` parameter tuples
/// whose construction realizes its formula value exactly.
pub fn family_grid(k: usize, m: usize, n1_hi: usize, per_pair: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for n1 in 4..=n1_hi {
        for n2 in 2..=n1.min(5) {
            let Ok(params) = FamilyParams::new(m - 1, n1, n2, k) else {
                continue;
            };
            let Ok(report) = extremal_family_graph(params) else {
                continue;
            };
            if report.defect == 0 {
                out.push(params);
                if out.len() == per_pair {
                    return out;
                }
            }
        }
    }
    out
}

/// Builds family members over the grid, checks the edge formula on
/// zero-defect points and certifies wheel-forest freeness with the
/// detector.
struct ConstructVerifySuite;

impl Suite for ConstructVerifySuite {
    fn id(&self) -> &'static str {
        "construct-verify"
    }

    fn description(&self) -> &'static str {
        "family construction vs edge formula, plus detector freeness certification"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let ks = spec.k_or(2, 4);
        let ms = spec.m_or(1, 3);
        let n1_hi = spec.n.map_or(40, |r| r.hi.max(4) as usize);
        let mut points = Vec::new();
        for k in ks.iter() {
            for m in ms.iter() {
                for p in family_grid(k as usize, m as usize, n1_hi, 30) {
                    points.push(p);
                }
            }
        }
        let budget_nodes = spec.budget_nodes;
        let rows: Vec<Vec<ReportRow>> = points
            .par_iter()
            .map(|&params| construct_verify_point(params, budget_nodes))
            .collect::<Result<_>>()?;
        Ok(rows.into_concat())
    }
}

fn construct_verify_point(params: FamilyParams, budget_nodes: u64) -> Result<Vec<ReportRow>> {
    let FamilyParams { t, n1, n2, k } = params;
    let m = t + 1;
    let base = format!("k={k};m={m};n1={n1};n2={n2}");
    let report = extremal_family_graph(params)?;
    let target = family_edges(t as i64, n1 as i64, n2 as i64, k as i64)?;

    let edges_row = ReportRow::new("construct-verify", format!("{base};check=edges"))
        .compare(target, report.achieved_edges);

    let pattern = WheelForestPattern::uniform(2 * k + 1, m)?;
    let mut budget = Budget::new(budget_nodes);
    let free_row = match pattern.contained_in(&report.graph, &mut budget) {
        Ok(contained) => {
            let observed = if contained { "contains" } else { "free" };
            ReportRow::new("construct-verify", format!("{base};check=free"))
                .compare("free", observed)
                .with_note(format!("nodes={}", budget.used()))
        }
        Err(Error::BudgetExceeded { nodes }) => {
            let mut row = ReportRow::new("construct-verify", format!("{base};check=free"));
            row.status = Status::Budget;
            row.with_note(format!("nodes={nodes}"))
        }
        Err(e) => return Err(e),
    };
    Ok(vec![edges_row, free_row])
}

// ============================================================================
// formula-identities
// ============================================================================

/// Reductions and identities between the evaluators: the m=1 reduction,
/// the even-wheel h=1 identity, the one-more-joined-vertex recurrence and
/// the closed-form optimizer cross-check.
struct FormulaIdentitiesSuite;

impl Suite for FormulaIdentitiesSuite {
    fn id(&self) -> &'static str {
        "formula-identities"
    }

    fn description(&self) -> &'static str {
        "m=1 reduction, even-wheel identity, family recurrence, optimizer cross-check"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let mut rows = Vec::new();

        // single wheel vs one-copy union
        for k in spec.k_or(3, 5).iter() {
            for n in spec.n_or(10, 200).iter() {
                let lhs = ex_m_odd_wheels(n, k, 1)?.value;
                let rhs = ex_odd_wheel(n, k)?.value;
                rows.push(
                    ReportRow::new("formula-identities", format!("check=m1-reduction;n={n};k={k}"))
                        .compare(rhs, lhs),
                );
            }
        }

        // h=1 even-wheel value is the tripartite Turán count
        for n in spec.n_or(3, 200).iter() {
            rows.push(
                ReportRow::new("formula-identities", format!("check=even-wheel-h1;n={n}"))
                    .compare(turan_edges(n, 3)?, ex_even_wheel_mix(n, 1)?.value),
            );
        }

        // adding one joined vertex adds (order - 1) edges
        for m in 2..=4 {
            for a in 4i64..=12 {
                for b in 2..=a.min(6) {
                    for k in spec.k_or(2, 4).iter() {
                        let lhs = family_edges(m - 1, a, b, k)?;
                        let rhs = family_edges(m - 2, a, b, k)? + (a + b + m - 2);
                        rows.push(
                            ReportRow::new(
                                "formula-identities",
                                format!("check=family-recurrence;m={m};n1={a};n2={b};k={k}"),
                            )
                            .compare(rhs, lhs),
                        );
                    }
                }
            }
        }

        // scanned argmax must land on a closed-form candidate
        for k in spec.k_or(2, 5).iter() {
            for m in spec.m_or(1, 3).iter() {
                for n in spec.n_or(20, 200).iter() {
                    let r = ex_m_odd_wheels(n, k, m)?;
                    let argmax = r.optimizers["n_0"];
                    let cands = main1_optimizer_candidates(n, k, m);
                    let hit = cands.contains(&argmax);
                    let mut row = ReportRow::new(
                        "formula-identities",
                        format!("check=optimizer;n={n};k={k};m={m}"),
                    );
                    row.observed = Some(argmax.to_string());
                    row.status = if hit { Status::Ok } else { Status::Mismatch };
                    rows.push(row.with_note(format!(
                        "candidates={};match={}",
                        cands.map(|c| c.to_string()).join("|"),
                        if hit { "yes" } else { "no" }
                    )));
                }
            }
        }
        Ok(rows)
    }
}

// ============================================================================
// lemma-bounds
// ============================================================================

/// The three displayed lower bounds on g(x, y, m) and its domination by
/// the unrestricted family maximum.
struct LemmaBoundsSuite;

impl Suite for LemmaBoundsSuite {
    fn id(&self) -> &'static str {
        "lemma-bounds"
    }

    fn description(&self) -> &'static str {
        "g(x,y,m) growth inequalities and g <= f over the sweep grid"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let mut rows = Vec::new();
        for k in spec.k_or(2, 4).iter() {
            for m in spec.m_or(2, 4).iter() {
                let lo = k + m + 2;
                let hi = spec.n.map_or(60, |r| r.hi);
                for x in lo..=hi {
                    for y in lo..=x {
                        let base = format!("k={k};m={m};x={x};y={y}");
                        let g = g_value(x, y, m, k)?.value;

                        let g_prev = g_value(x, y, m - 1, k)?.value;
                        let bound1 = g_prev + y.min(x - k) - m;
                        rows.push(ineq_row(&base, "grow-m", g, bound1));

                        let g_x = g_value(x - 1, y, m, k)?.value;
                        rows.push(ineq_row(&base, "grow-x", g, g_x + y));

                        let g_y = g_value(x, y - 1, m, k)?.value;
                        rows.push(ineq_row(&base, "grow-y", g, g_y + x));

                        let f = ex_m_odd_wheels(x + y, k, m)?.value;
                        rows.push(ineq_row(&base, "g-le-f", f, g));
                    }
                }
            }
        }
        Ok(rows)
    }
}

fn ineq_row(base: &str, check: &str, lhs: i64, rhs: i64) -> ReportRow {
    // verifies lhs >= rhs
    let observed = if lhs >= rhs {
        "holds".to_string()
    } else {
        format!("violated(lhs={lhs};rhs={rhs})")
    };
    ReportRow::new("lemma-bounds", format!("{base};check={check}"))
        .compare("holds".to_string(), observed)
        .with_note(format!("lhs={lhs};rhs={rhs}"))
}

// ============================================================================
// conjecture
// ============================================================================

/// Agreement of the conjecture's two displayed expressions, plus the
/// informational verbatim-vs-corrected star-forest table.
struct ConjectureSuite;

const CONJECTURE_LISTS: &[&[i64]] = &[&[2], &[3], &[2, 2], &[3, 2], &[3, 3]];

impl Suite for ConjectureSuite {
    fn id(&self) -> &'static str {
        "conjecture"
    }

    fn description(&self) -> &'static str {
        "two displayed conjecture forms must agree; star-forest variants compared"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let mut rows = Vec::new();
        for &list in CONJECTURE_LISTS {
            let label: String = list.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("|");
            for n in spec.n_or(10, 100).iter() {
                let r = conjecture_ex(n, list, spec.liu_variant)?;
                rows.push(
                    ReportRow::new("conjecture", format!("check=forms-agree;n={n};k_list={label}"))
                        .compare(r.form_a.value, r.form_b.value)
                        .with_note(format!(
                            "a_n0={};b_n0={};b_i={}",
                            r.form_a.optimizers["n_0"],
                            r.form_b.optimizers["n_0"],
                            r.form_b.optimizers["i"]
                        )),
                );
            }
        }
        // informational: the suspected-typo variant never fails the suite
        for &list in CONJECTURE_LISTS {
            let label: String = list.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("|");
            for n in spec.n_or(10, 100).iter() {
                let verbatim = ex_star_forest(n, list, LiuVariant::Verbatim)?.value;
                let corrected = ex_star_forest(n, list, LiuVariant::Corrected)?.value;
                rows.push(
                    ReportRow::new("conjecture", format!("check=liu-compare;n={n};degrees={label}"))
                        .with_note(format!(
                            "verbatim={verbatim};corrected={corrected};diff={}",
                            corrected - verbatim
                        )),
                );
            }
        }
        Ok(rows)
    }
}

// ============================================================================
// oracle-compare
// ============================================================================

/// Brute-force values vs the asymptotic formulas at desk scale. Engine
/// agreement is a hard check; formula comparisons are informational
/// because every formula only claims n sufficiently large.
struct OracleCompareSuite;

impl Suite for OracleCompareSuite {
    fn id(&self) -> &'static str {
        "oracle-compare"
    }

    fn description(&self) -> &'static str {
        "oracle engines against each other and against the asymptotic formulas"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let pattern_spec = spec.pattern.clone().unwrap_or_else(|| "wheel:5".into());
        let ns: Vec<i64> = spec.n_or(4, 7).iter().collect();
        let budget = spec.budget_nodes;
        let variant = spec.liu_variant;
        let rows: Vec<Vec<ReportRow>> = ns
            .par_iter()
            .map(|&n| oracle_compare_point(&pattern_spec, n as usize, budget, variant))
            .collect::<Result<_>>()?;
        Ok(rows.into_concat())
    }
}

fn oracle_compare_point(
    pattern_spec: &str,
    n: usize,
    budget_nodes: u64,
    variant: LiuVariant,
) -> Result<Vec<ReportRow>> {
    let pattern = parse_pattern(pattern_spec)?;
    let base = format!("pattern={pattern_spec};n={n}");
    let opts = OracleOptions {
        budget_nodes,
        warm_start: None,
    };
    let mut rows = Vec::new();

    let run = |engine: &str| -> Result<Option<crate::oracle::OracleResult>> {
        match brute_force_ex(n, pattern.as_ref(), engine, &opts) {
            Ok(r) => Ok(Some(r)),
            Err(Error::Capacity(_)) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let enum_res = if n <= DEFAULT_ENUM_CAP { run("enumeration")? } else { None };
    let bnb_res = if n <= DEFAULT_BNB_CAP { run("branch-and-bound")? } else { None };

    if let (Some(a), Some(b)) = (&enum_res, &bnb_res) {
        let mut row = ReportRow::new("oracle-compare", format!("{base};check=engines-agree"))
            .compare(a.value, b.value);
        if !(a.exact && b.exact) {
            row.status = Status::Budget;
        }
        rows.push(row);
    }

    if let Some(r) = bnb_res.or(enum_res) {
        let mut row = ReportRow::new("oracle-compare", format!("{base};check=formula"));
        row.observed = Some(r.value.to_string());
        if !r.exact {
            row.status = Status::Budget;
        }
        let note = formula_note(pattern_spec, n as i64, r.value as i64, variant);
        rows.push(row.with_note(note));
    }
    Ok(rows)
}

/// Formats the asymptotic-formula comparison for patterns that have one.
fn formula_note(pattern_spec: &str, n: i64, oracle: i64, variant: LiuVariant) -> String {
    let Some((kind, rest)) = pattern_spec.split_once(':') else {
        return String::new();
    };
    let parse_list = |s: &str| -> Option<Vec<i64>> {
        s.split(',').map(|t| t.trim().parse::<i64>().ok()).collect()
    };
    match kind {
        "wheel" | "wheel-forest" => {
            let orders = parse_list(rest).unwrap_or_default();
            if orders.is_empty() || orders.iter().any(|&q| q != orders[0] || q < 5 || q % 2 == 0) {
                return "formula=none".into();
            }
            let k = (orders[0] - 1) / 2;
            let m = orders.len() as i64;
            let value = if m == 1 {
                ex_odd_wheel(n, k).map(|r| r.value)
            } else {
                ex_m_odd_wheels(n, k, m).map(|r| r.value)
            };
            match value {
                Ok(v) => format!(
                    "formula={v};match={}",
                    if v == oracle { "yes" } else { "no" }
                ),
                Err(_) => "formula=out-of-range".into(),
            }
        }
        "star-forest" => {
            let Some(degrees) = parse_list(rest) else {
                return "formula=none".into();
            };
            let verbatim = ex_star_forest(n, &degrees, LiuVariant::Verbatim)
                .map(|r| r.value.to_string())
                .unwrap_or_else(|_| "err".into());
            let corrected = ex_star_forest(n, &degrees, LiuVariant::Corrected)
                .map(|r| r.value.to_string())
                .unwrap_or_else(|_| "err".into());
            let chosen = match variant {
                LiuVariant::Verbatim => &verbatim,
                LiuVariant::Corrected => &corrected,
            };
            format!(
                "verbatim={verbatim};corrected={corrected};match={}",
                if *chosen == oracle.to_string() { "yes" } else { "no" }
            )
        }
        _ => "formula=none".into(),
    }
}

// ============================================================================
// simonovits
// ============================================================================

/// Chromatic parity of wheels and the deletion hypotheses for even-wheel
/// families.
struct SimonovitsSuite;

impl Suite for SimonovitsSuite {
    fn id(&self) -> &'static str {
        "simonovits"
    }

    fn description(&self) -> &'static str {
        "wheel chromatic parity and (p, s) deletion hypotheses"
    }

    fn run(&self, spec: &SweepSpec) -> Result<Vec<ReportRow>> {
        let mut rows = Vec::new();
        for k in spec.k_or(2, 6).iter() {
            let k = k as usize;
            let even = crate::construct::named::wheel(2 * k)?;
            rows.push(
                ReportRow::new("simonovits", format!("check=chi-even;k={k}"))
                    .compare(4, chromatic_number(&even)?),
            );
            let odd = crate::construct::named::wheel(2 * k + 1)?;
            rows.push(
                ReportRow::new("simonovits", format!("check=chi-odd;k={k}"))
                    .compare(3, chromatic_number(&odd)?),
            );
        }

        let w6 = crate::construct::named::wheel(6)?;
        let r = crate::oracle::simonovits_params(std::slice::from_ref(&w6))?;
        rows.push(
            ReportRow::new("simonovits", "check=params;family=W6".into()).compare(
                "p=3;s=1;certified=true".to_string(),
                format!("p={};s={};certified={}", r.p, r.s, r.certified),
            ),
        );

        // informational: the two-copy family, value reported not presumed
        let two = crate::graph::disjoint_union([&w6, &w6]);
        let r = crate::oracle::simonovits_params(std::slice::from_ref(&two))?;
        rows.push(
            ReportRow::new("simonovits", "check=params;family=2xW6".into()).with_note(format!(
                "p={};s={};certified={}",
                r.p, r.s, r.certified
            )),
        );
        Ok(rows)
    }
}

// ============================================================================
// Single checks
// ============================================================================

/// Builds or decodes a graph, runs a freeness detector against it and
/// compares the edge count with an expectation.
pub fn run_check(
    graph_spec: &str,
    pattern_spec: &str,
    expected_edges: Option<i64>,
    budget_nodes: u64,
) -> Result<ReportRow> {
    let construction = parse_construction(graph_spec)?;
    let pattern = parse_pattern(pattern_spec)?;
    let graph = construction.graph();
    let params = format!("graph={graph_spec};pattern={pattern_spec}");
    let mut row = ReportRow::new("check", params);
    row.observed = Some(graph.edge_count().to_string());
    row.expected = expected_edges.map(|e| e.to_string());

    let mut budget = Budget::new(budget_nodes);
    let mut notes = Vec::new();
    if let Some(report) = construction.report() {
        notes.push(format!("target={};defect={}", report.target_edges, report.defect));
    }
    match pattern.contained_in(graph, &mut budget) {
        Ok(false) => {
            notes.push("free=yes".into());
            let edges_ok = expected_edges.is_none_or(|e| e == graph.edge_count() as i64);
            row.status = if edges_ok { Status::Ok } else { Status::Mismatch };
        }
        Ok(true) => {
            notes.push(format!("free=no (graph is not {}-free)", pattern.name()));
            row.status = Status::Mismatch;
        }
        Err(Error::BudgetExceeded { nodes }) => {
            notes.push(format!("budget exhausted at {nodes} nodes"));
            row.status = Status::Budget;
        }
        Err(e) => return Err(e),
    }
    Ok(row.with_note(notes.join(";")))
}

/// Report-shaped view of a construction, for the CLI.
pub fn describe_report(report: &ConstructionReport) -> String {
    format!(
        "target={};achieved={};defect={}",
        report.target_edges, report.achieved_edges, report.defect
    )
}

trait ConcatVecs<T> {
    fn into_concat(self) -> Vec<T>;
}

impl<T> ConcatVecs<T> for Vec<Vec<T>> {
    fn into_concat(self) -> Vec<T> {
        self.into_iter().flatten().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r: RangeIncl = "10..20".parse().unwrap();
        assert_eq!((r.lo, r.hi), (10, 20));
        let r: RangeIncl = "7".parse().unwrap();
        assert_eq!((r.lo, r.hi), (7, 7));
        assert!("20..10".parse::<RangeIncl>().is_err());
        assert!("x..y".parse::<RangeIncl>().is_err());
    }

    #[test]
    fn family_grid_yields_zero_defect_points() {
        for (k, m) in [(2, 1), (3, 2), (4, 3)] {
            let grid = family_grid(k, m, 40, 30);
            assert_eq!(grid.len(), 30, "k={k}, m={m}");
            for p in grid {
                let r = extremal_family_graph(p).unwrap();
                assert_eq!(r.defect, 0);
            }
        }
    }

    #[test]
    fn check_rows() {
        // a triangle is not triangle-free: mismatch with a note
        let row = run_check("g6:Bw", "clique:3", Some(3), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(row.status, Status::Mismatch);
        assert!(row.note.contains("free=no"));

        let row = run_check("turan:10,3", "clique:4", Some(33), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(row.status, Status::Ok);

        let row = run_check("family:1,5,4,3", "wheel-forest:7,7", Some(34), DEFAULT_NODE_BUDGET)
            .unwrap();
        assert_eq!(row.status, Status::Ok);
        assert!(row.note.contains("defect=1"));
    }

    #[test]
    fn csv_is_deterministic() {
        let spec = SweepSpec {
            n: Some(RangeIncl::new(10, 12)),
            ..Default::default()
        };
        let a = to_csv(&run_sweep("conjecture", &spec).unwrap());
        let b = to_csv(&run_sweep("conjecture", &spec).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
        // fixed column count on every line
        for line in a.lines() {
            assert_eq!(line.matches(',').count(), 5, "line {line:?}");
        }
    }

    #[test]
    fn summary_counts_and_json() {
        let rows = vec![
            ReportRow::new("x", "a=1".into()),
            ReportRow::new("x", "a=2".into()).compare(1, 2),
        ];
        let s = Summary::from_rows(&rows);
        assert_eq!((s.ok, s.mismatch), (1, 1));
        assert_eq!(s.to_json(), "{\"ok\":1,\"mismatch\":1,\"skipped\":0,\"budget\":0}");
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_sweep("nope", &SweepSpec::default()).is_err());
        assert_eq!(suites().len(), 6);
    }
}
