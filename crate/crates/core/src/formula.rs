//! Exact integer evaluators for the extremal edge-count formulas, each
//! max-form evaluator scanning its full integer range and reporting the
//! optimizing parameter. Closed-form optimizers are never trusted for the
//! value; they are exposed separately as cross-check candidates.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Result of a formula evaluation: the value, which parameters achieved it,
/// and whether the source statement only holds for n sufficiently large.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: i64,
    /// Optimizing parameters (`n_0`, `j`, `i`), smallest value on ties.
    pub optimizers: BTreeMap<&'static str, i64>,
    /// True when the formula is only claimed for n sufficiently large.
    pub asymptotic: bool,
    /// Range caveats, e.g. evaluation below the construction's validity.
    pub note: Option<String>,
}

impl FormulaResult {
    fn plain(value: i64, asymptotic: bool) -> Self {
        FormulaResult {
            value,
            optimizers: BTreeMap::new(),
            asymptotic,
            note: None,
        }
    }
}

/// Which reading of the star-forest formula to evaluate: the verbatim
/// `(n - i - 1)` factor, or the corrected `(n - i + 1)` that matches the
/// single-star sanity value. Both stay available so the brute-force oracle
/// can adjudicate; nothing is silently fixed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LiuVariant {
    #[default]
    Verbatim,
    Corrected,
}

impl std::str::FromStr for LiuVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verbatim" => Ok(LiuVariant::Verbatim),
            "corrected" => Ok(LiuVariant::Corrected),
            other => Err(Error::domain(format!(
                "unknown liu-variant {other:?} (expected verbatim|corrected)"
            ))),
        }
    }
}

#[inline]
pub(crate) fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Floor division, correct for negative numerators.
#[inline]
fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

// ============================================================================
// Closed forms
// ============================================================================

/// Edge count of the Turán graph T(n, p), from part sizes alone.
pub fn turan_edges(n: i64, p: i64) -> Result<i64> {
    if p < 1 {
        return Err(Error::domain(format!("turan_edges needs p >= 1, got {p}")));
    }
    if n < 0 {
        return Err(Error::domain(format!("turan_edges needs n >= 0, got {n}")));
    }
    let q = n / p;
    let r = n % p;
    Ok(choose2(n) - r * choose2(q + 1) - (p - r) * choose2(q))
}

/// Edge count of one member of the joined-bipartite family: a t-clique
/// joined to K_{n1,n2} whose larger side carries a max-edge bounded-degree
/// path-free graph and whose smaller side carries one edge.
pub fn family_edges(t: i64, n1: i64, n2: i64, k: i64) -> Result<i64> {
    if t < 0 || k < 2 {
        return Err(Error::domain(format!(
            "family_edges needs t >= 0 and k >= 2, got t={t}, k={k}"
        )));
    }
    if !(n1 >= n2 && n2 >= 2) {
        return Err(Error::domain(format!(
            "family_edges needs n1 >= n2 >= 2, got n1={n1}, n2={n2}"
        )));
    }
    Ok(choose2(t) + t * (n1 + n2) + n1 * n2 + div_floor((k - 1) * n1, 2) + 1)
}

/// Kővári–Sós–Turán upper bound on ex(n, K_{a,b}) for b >= a >= 1, as a
/// float with relative error well below 1e-9 at desk scale.
pub fn kst_upper_bound(n: i64, a: i64, b: i64) -> Result<f64> {
    if !(a >= 1 && b >= a) {
        return Err(Error::domain(format!(
            "kst_upper_bound needs b >= a >= 1, got a={a}, b={b}"
        )));
    }
    if n < 0 {
        return Err(Error::domain(format!("kst_upper_bound needs n >= 0, got {n}")));
    }
    let (n, a, b) = (n as f64, a as f64, b as f64);
    Ok(((b - 1.0).powf(1.0 / a) / 2.0) * n.powf(2.0 - 1.0 / a) + (a - 1.0) / 2.0 * n)
}

/// Maximum edges of a graph with max degree <= k-1 that avoids the long
/// path: floor((k-1) n / 2). Exact for n >= 2k; below that it is only the
/// degree bound.
pub fn star_path_free_edges(n: i64, k: i64) -> i64 {
    assert!(n >= 0 && k >= 2, "star_path_free_edges needs n >= 0, k >= 2");
    div_floor((k - 1) * n, 2)
}

// ============================================================================
// Max-form evaluators
// ============================================================================

/// ex(n, W_{2k+1}): the closed form for k = 2, a full scan over the split
/// point for k >= 3. Holds for n sufficiently large.
pub fn ex_odd_wheel(n: i64, k: i64) -> Result<FormulaResult> {
    if k < 2 {
        return Err(Error::domain(format!("ex_odd_wheel needs k >= 2, got {k}")));
    }
    if n < 0 {
        return Err(Error::domain(format!("ex_odd_wheel needs n >= 0, got {n}")));
    }
    if k == 2 {
        let value = (div_floor(n + 1, 2) + 1) * div_floor(n, 2);
        return Ok(FormulaResult::plain(value, true));
    }
    if n < 4 {
        let mut r = FormulaResult::plain(0, true);
        r.note = Some(format!(
            "n={n} is below the construction's validity (needs n >= 4); 0-edge convention"
        ));
        return Ok(r);
    }
    let mut best = i64::MIN;
    let mut best_n0 = 0;
    for n0 in 0..=n {
        let val = n0 * (n - n0) + div_floor((k - 1) * n0, 2) + 1;
        if val > best {
            best = val;
            best_n0 = n0;
        }
    }
    let mut r = FormulaResult::plain(best, true);
    r.optimizers.insert("n_0", best_n0);
    Ok(r)
}

/// ex(n, mW_{2k+1}): scan of the family edge count over every split with
/// valid part sizes. Holds for n sufficiently large.
pub fn ex_m_odd_wheels(n: i64, k: i64, m: i64) -> Result<FormulaResult> {
    if k < 2 || m < 1 {
        return Err(Error::domain(format!(
            "ex_m_odd_wheels needs k >= 2 and m >= 1, got k={k}, m={m}"
        )));
    }
    if n < m + 3 {
        return Err(Error::domain(format!(
            "ex_m_odd_wheels needs n >= m + 3 so the parts admit n1 >= n2 >= 2 \
             (got n={n}, m={m})"
        )));
    }
    let rest = n - (m - 1); // vertices outside the joined clique
    let lo = (rest + 1) / 2; // smallest n0 with n0 >= rest - n0
    let hi = rest - 2; // smaller side needs >= 2 vertices
    let mut best = i64::MIN;
    let mut best_n0 = 0;
    for n0 in lo..=hi {
        let val = family_edges(m - 1, n0, rest - n0, k)?;
        if val > best {
            best = val;
            best_n0 = n0;
        }
    }
    let mut r = FormulaResult::plain(best, true);
    r.optimizers.insert("n_0", best_n0);
    Ok(r)
}

/// f(n, t): maximum edges over the t-clique family on n vertices. Thin
/// rename of [`ex_m_odd_wheels`] with m = t + 1.
pub fn f_value(n: i64, t: i64, k: i64) -> Result<FormulaResult> {
    if t < 0 {
        return Err(Error::domain(format!("f_value needs t >= 0, got {t}")));
    }
    ex_m_odd_wheels(n, k, t + 1)
}

/// The closed-form split-point candidates for [`ex_m_odd_wheels`], after
/// integer rounding: floor and ceiling of halving either rounding of
/// (k-1)/2 plus n-m+1. The scanned argmax must land on one of these.
pub fn main1_optimizer_candidates(n: i64, k: i64, m: i64) -> [i64; 4] {
    let base = n - m + 1;
    let lo = (k - 1) / 2 + base; // floor((k-1)/2) + n - m + 1, halved below
    let hi = (k - 1 + 1) / 2 + base; // ceil((k-1)/2) + n - m + 1
    [
        div_floor(lo, 2),
        div_floor(lo + 1, 2),
        div_floor(hi, 2),
        div_floor(hi + 1, 2),
    ]
}

/// g(n1, n2, m): best family member obtainable by moving j of the m-1
/// clique vertices out of the larger part. Invalid splits are skipped.
pub fn g_value(n1: i64, n2: i64, m: i64, k: i64) -> Result<FormulaResult> {
    if m < 1 {
        return Err(Error::domain(format!("g_value needs m >= 1, got {m}")));
    }
    let mut best: Option<(i64, i64)> = None;
    for j in 0..=m - 1 {
        let a = n1 - j;
        let b = n2 - (m - 1 - j);
        if !(a >= b && b >= 2) {
            continue;
        }
        let val = family_edges(m - 1, a, b, k)?;
        if best.map_or(true, |(bv, _)| val > bv) {
            best = Some((val, j));
        }
    }
    let (value, j) = best.ok_or_else(|| {
        Error::domain(format!(
            "g_value({n1},{n2},{m},{k}): no j in [0,{}] gives valid part sizes",
            m - 1
        ))
    })?;
    let mut r = FormulaResult::plain(value, true);
    r.optimizers.insert("j", j);
    Ok(r)
}

/// ex(n, W^h) for a union of wheels with h >= 1 even ones: an (h-1)-clique
/// joined to the tripartite Turán graph. Holds for n sufficiently large.
pub fn ex_even_wheel_mix(n: i64, h: i64) -> Result<FormulaResult> {
    if h < 1 {
        return Err(Error::domain(format!("ex_even_wheel_mix needs h >= 1, got {h}")));
    }
    if n < h - 1 {
        return Err(Error::domain(format!(
            "ex_even_wheel_mix needs n >= h - 1, got n={n}, h={h}"
        )));
    }
    let rest = n - h + 1;
    let value = choose2(h - 1) + (h - 1) * rest + turan_edges(rest, 3)?;
    Ok(FormulaResult::plain(value, true))
}

fn check_degrees(degrees: &[i64]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::domain("degree sequence must be nonempty"));
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::domain(format!(
            "degree sequence must be nonincreasing, got {degrees:?}"
        )));
    }
    if *degrees.last().unwrap() < 1 {
        return Err(Error::domain(format!(
            "degrees must be >= 1, got {degrees:?}"
        )));
    }
    Ok(())
}

fn star_forest_term(n: i64, i: i64, d_i: i64, variant: LiuVariant) -> i64 {
    let w = match variant {
        LiuVariant::Verbatim => n - i - 1,
        LiuVariant::Corrected => n - i + 1,
    };
    (i - 1) * w + choose2(i - 1) + div_floor((d_i - 1) * w, 2)
}

/// ex(n, star forest) per the stated formula, evaluated literally for the
/// chosen variant; the term index i is 1-based over the sorted degrees.
pub fn ex_star_forest(n: i64, degrees: &[i64], variant: LiuVariant) -> Result<FormulaResult> {
    check_degrees(degrees)?;
    let mut best = i64::MIN;
    let mut best_i = 0;
    for (idx, &d) in degrees.iter().enumerate() {
        let i = idx as i64 + 1;
        let val = star_forest_term(n, i, d, variant);
        if val > best {
            best = val;
            best_i = i;
        }
    }
    let mut r = FormulaResult::plain(best, true);
    r.optimizers.insert("i", best_i);
    Ok(r)
}

/// Both displayed forms of the odd-wheel-union conjecture, evaluated
/// independently. Their equality is a tested property, never assumed here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureResult {
    /// max over n_0 of n_0 (n - n_0) + ex(n_0, star forest) + 1
    pub form_a: FormulaResult,
    /// the same max with the star-forest formula inlined as a double max
    pub form_b: FormulaResult,
}

/// Evaluates the conjecture's two displayed expressions for the union of
/// odd wheels with parameters `k_list` (sorted nonincreasing, each >= 1).
/// The chosen variant is applied consistently to both forms.
pub fn conjecture_ex(n: i64, k_list: &[i64], variant: LiuVariant) -> Result<ConjectureResult> {
    check_degrees(k_list)?;
    if n < 1 {
        return Err(Error::domain(format!("conjecture_ex needs n >= 1, got {n}")));
    }

    // form A: reuse the star-forest evaluator
    let mut best_a = i64::MIN;
    let mut best_a_n0 = 0;
    for n0 in 1..=n {
        let inner = ex_star_forest(n0, k_list, variant)?;
        let val = n0 * (n - n0) + inner.value + 1;
        if val > best_a {
            best_a = val;
            best_a_n0 = n0;
        }
    }
    let mut form_a = FormulaResult::plain(best_a, true);
    form_a.optimizers.insert("n_0", best_a_n0);

    // form B: independent double scan over (n_0, i)
    let mut best_b = i64::MIN;
    let mut best_b_n0 = 0;
    let mut best_b_i = 0;
    for n0 in 1..=n {
        for (idx, &ki) in k_list.iter().enumerate() {
            let i = idx as i64 + 1;
            let val = n0 * (n - n0) + star_forest_term(n0, i, ki, variant) + 1;
            if val > best_b {
                best_b = val;
                best_b_n0 = n0;
                best_b_i = i;
            }
        }
    }
    let mut form_b = FormulaResult::plain(best_b, true);
    form_b.optimizers.insert("n_0", best_b_n0);
    form_b.optimizers.insert("i", best_b_i);

    Ok(ConjectureResult { form_a, form_b })
}

// ============================================================================
// Named formula registry
// ============================================================================

/// Argument bag for evaluating a formula op selected by name.
#[derive(Clone, Debug, Default)]
pub struct FormulaArgs {
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub m: Option<i64>,
    pub h: Option<i64>,
    pub p: Option<i64>,
    pub t: Option<i64>,
    pub n1: Option<i64>,
    pub n2: Option<i64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub degrees: Option<Vec<i64>>,
    pub k_list: Option<Vec<i64>>,
    pub liu_variant: LiuVariant,
}

impl FormulaArgs {
    fn req(&self, field: Option<i64>, name: &str, op: &str) -> Result<i64> {
        field.ok_or_else(|| Error::domain(format!("{op} requires --{name}")))
    }
}

/// Evaluation output of a registered formula op.
#[derive(Clone, Debug, PartialEq)]
pub enum FormulaOutput {
    Int(i64),
    Real(f64),
    Result(FormulaResult),
    Conjecture(ConjectureResult),
}

/// One evaluator selectable by name from the CLI.
pub trait FormulaOp: Sync {
    fn name(&self) -> &'static str;
    /// Human-readable parameter list for usage messages.
    fn params(&self) -> &'static str;
    fn eval(&self, args: &FormulaArgs) -> Result<FormulaOutput>;
}

macro_rules! formula_op {
    ($ty:ident, $name:literal, $params:literal, $args:ident, $body:expr) => {
        struct $ty;
        impl FormulaOp for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn params(&self) -> &'static str {
                $params
            }
            fn eval(&self, $args: &FormulaArgs) -> Result<FormulaOutput> {
                $body
            }
        }
    };
}

formula_op!(TuranEdgesOp, "turan-edges", "--n --p", args, {
    let n = args.req(args.n, "n", "turan-edges")?;
    let p = args.req(args.p, "p", "turan-edges")?;
    Ok(FormulaOutput::Int(turan_edges(n, p)?))
});

formula_op!(FamilyEdgesOp, "family-edges", "--t --n1 --n2 --k", args, {
    let t = args.req(args.t, "t", "family-edges")?;
    let n1 = args.req(args.n1, "n1", "family-edges")?;
    let n2 = args.req(args.n2, "n2", "family-edges")?;
    let k = args.req(args.k, "k", "family-edges")?;
    Ok(FormulaOutput::Int(family_edges(t, n1, n2, k)?))
});

formula_op!(ExOddWheelOp, "ex-odd-wheel", "--n --k", args, {
    let n = args.req(args.n, "n", "ex-odd-wheel")?;
    let k = args.req(args.k, "k", "ex-odd-wheel")?;
    Ok(FormulaOutput::Result(ex_odd_wheel(n, k)?))
});

formula_op!(ExMOddWheelsOp, "ex-m-odd-wheels", "--n --k --m", args, {
    let n = args.req(args.n, "n", "ex-m-odd-wheels")?;
    let k = args.req(args.k, "k", "ex-m-odd-wheels")?;
    let m = args.req(args.m, "m", "ex-m-odd-wheels")?;
    Ok(FormulaOutput::Result(ex_m_odd_wheels(n, k, m)?))
});

formula_op!(GValueOp, "g-value", "--n1 --n2 --m --k", args, {
    let n1 = args.req(args.n1, "n1", "g-value")?;
    let n2 = args.req(args.n2, "n2", "g-value")?;
    let m = args.req(args.m, "m", "g-value")?;
    let k = args.req(args.k, "k", "g-value")?;
    Ok(FormulaOutput::Result(g_value(n1, n2, m, k)?))
});

formula_op!(ExEvenWheelMixOp, "ex-even-wheel-mix", "--n --h", args, {
    let n = args.req(args.n, "n", "ex-even-wheel-mix")?;
    let h = args.req(args.h, "h", "ex-even-wheel-mix")?;
    Ok(FormulaOutput::Result(ex_even_wheel_mix(n, h)?))
});

formula_op!(KstUpperBoundOp, "kst-upper-bound", "--n --a --b", args, {
    let n = args.req(args.n, "n", "kst-upper-bound")?;
    let a = args.req(args.a, "a", "kst-upper-bound")?;
    let b = args.req(args.b, "b", "kst-upper-bound")?;
    Ok(FormulaOutput::Real(kst_upper_bound(n, a, b)?))
});

formula_op!(StarPathFreeOp, "star-path-free-edges", "--n --k", args, {
    let n = args.req(args.n, "n", "star-path-free-edges")?;
    let k = args.req(args.k, "k", "star-path-free-edges")?;
    if n < 0 || k < 2 {
        return Err(Error::domain(format!(
            "star-path-free-edges needs n >= 0 and k >= 2, got n={n}, k={k}"
        )));
    }
    Ok(FormulaOutput::Int(star_path_free_edges(n, k)))
});

formula_op!(ExStarForestOp, "ex-star-forest", "--n --degrees [--liu-variant]", args, {
    let n = args.req(args.n, "n", "ex-star-forest")?;
    let degrees = args
        .degrees
        .as_deref()
        .ok_or_else(|| Error::domain("ex-star-forest requires --degrees"))?;
    Ok(FormulaOutput::Result(ex_star_forest(
        n,
        degrees,
        args.liu_variant,
    )?))
});

formula_op!(ConjectureExOp, "conjecture-ex", "--n --k-list [--liu-variant]", args, {
    let n = args.req(args.n, "n", "conjecture-ex")?;
    let k_list = args
        .k_list
        .as_deref()
        .ok_or_else(|| Error::domain("conjecture-ex requires --k-list"))?;
    Ok(FormulaOutput::Conjecture(conjecture_ex(
        n,
        k_list,
        args.liu_variant,
    )?))
});

static FORMULA_OPS: &[&dyn FormulaOp] = &[
    &TuranEdgesOp,
    &FamilyEdgesOp,
    &ExOddWheelOp,
    &ExMOddWheelsOp,
    &GValueOp,
    &ExEvenWheelMixOp,
    &KstUpperBoundOp,
    &StarPathFreeOp,
    &ExStarForestOp,
    &ConjectureExOp,
];

/// Every registered formula op, in stable order.
pub fn formula_ops() -> &'static [&'static dyn FormulaOp] {
    FORMULA_OPS
}

/// Looks up a formula op by its registered name.
pub fn lookup_formula_op(name: &str) -> Option<&'static dyn FormulaOp> {
    FORMULA_OPS.iter().copied().find(|op| op.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_edge_counts() {
        assert_eq!(turan_edges(6, 3).unwrap(), 12);
        assert_eq!(turan_edges(10, 3).unwrap(), 33);
        for n in 0..50 {
            assert_eq!(turan_edges(n, 1).unwrap(), 0);
        }
        assert!(turan_edges(5, 0).is_err());
    }

    #[test]
    fn family_edge_counts() {
        assert_eq!(family_edges(0, 5, 5, 3).unwrap(), 31);
        assert_eq!(family_edges(1, 5, 4, 3).unwrap(), 35);
        assert_eq!(family_edges(0, 2, 2, 2).unwrap(), 6);
        assert!(family_edges(0, 2, 3, 2).is_err());
        assert!(family_edges(0, 3, 1, 2).is_err());
    }

    #[test]
    fn family_recurrence_adds_one_joined_vertex() {
        // adding one joined vertex adds degree (total order - 1)
        for m in 2..=4 {
            for a in 4..=12 {
                for b in 2..=a {
                    for k in 2..=4 {
                        let big = family_edges(m - 1, a, b, k).unwrap();
                        let small = family_edges(m - 2, a, b, k).unwrap();
                        assert_eq!(big, small + (a + b + m - 2));
                    }
                }
            }
        }
    }

    #[test]
    fn odd_wheel_cases() {
        assert_eq!(ex_odd_wheel(10, 2).unwrap().value, 30);
        let r = ex_odd_wheel(10, 3).unwrap();
        assert_eq!(r.value, 31);
        assert_eq!(r.optimizers["n_0"], 5); // ties at {5,6}, smallest reported
        assert!(r.asymptotic);

        let degenerate = ex_odd_wheel(0, 3).unwrap();
        assert_eq!(degenerate.value, 0);
        assert!(degenerate.note.is_some());
        assert!(ex_odd_wheel(10, 1).is_err());
    }

    #[test]
    fn m_odd_wheels_cases() {
        let r = ex_m_odd_wheels(20, 3, 2).unwrap();
        assert_eq!(r.value, 120);
        assert_eq!(r.optimizers["n_0"], 10);
        assert_eq!(ex_m_odd_wheels(10, 3, 1).unwrap().value, 31);
        assert!(ex_m_odd_wheels(5, 3, 2).is_err());
    }

    #[test]
    fn m_odd_wheels_matches_displayed_expression() {
        // the displayed max-form term equals the family edge count
        for n in 10..=40 {
            for k in 2..=5 {
                for m in 1..=3 {
                    let rest = n - (m - 1);
                    for n0 in (rest + 1) / 2..=rest - 2 {
                        let displayed = choose2(m - 1)
                            + div_floor((k - 1) * n0, 2)
                            + (n0 + m - 1) * (n - m + 1)
                            - n0 * n0
                            + 1;
                        assert_eq!(displayed, family_edges(m - 1, n0, rest - n0, k).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn f_value_is_a_rename() {
        assert_eq!(
            f_value(20, 1, 3).unwrap().value,
            ex_m_odd_wheels(20, 3, 2).unwrap().value
        );
    }

    #[test]
    fn g_value_cases() {
        // m = 1 reduces to the plain family count
        assert_eq!(
            g_value(7, 5, 1, 3).unwrap().value,
            family_edges(0, 7, 5, 3).unwrap()
        );
        let r = g_value(6, 5, 2, 3).unwrap();
        assert_eq!(r.value, 41);
        assert_eq!(r.optimizers["j"], 0); // ties at j in {0,1}
        let r = g_value(5, 5, 2, 3).unwrap();
        assert_eq!(r.value, 35); // j=1 is invalid and skipped
        assert_eq!(r.optimizers["j"], 0);
        assert!(g_value(2, 2, 4, 3).is_err());
    }

    #[test]
    fn even_wheel_mix_cases() {
        assert_eq!(ex_even_wheel_mix(10, 1).unwrap().value, 33);
        assert_eq!(ex_even_wheel_mix(10, 2).unwrap().value, 36);
        assert_eq!(ex_even_wheel_mix(3, 1).unwrap().value, 3);
        assert!(ex_even_wheel_mix(1, 3).is_err());
    }

    #[test]
    fn kst_cases() {
        assert!((kst_upper_bound(4, 2, 2).unwrap() - 6.0).abs() < 1e-9);
        assert!((kst_upper_bound(9, 2, 2).unwrap() - 18.0).abs() < 1e-9);
        for n in 0..100 {
            assert_eq!(kst_upper_bound(n, 1, 1).unwrap(), 0.0);
        }
        assert!(kst_upper_bound(5, 2, 1).is_err());
    }

    #[test]
    fn star_path_free_cases() {
        assert_eq!(star_path_free_edges(6, 3), 6);
        assert_eq!(star_path_free_edges(4, 2), 2);
        assert_eq!(star_path_free_edges(7, 3), 7);
    }

    #[test]
    fn star_forest_cases() {
        assert_eq!(ex_star_forest(10, &[1], LiuVariant::Verbatim).unwrap().value, 0);
        assert_eq!(ex_star_forest(10, &[3], LiuVariant::Verbatim).unwrap().value, 8);
        assert_eq!(ex_star_forest(10, &[3], LiuVariant::Corrected).unwrap().value, 10);
        let r = ex_star_forest(12, &[2, 2], LiuVariant::Verbatim).unwrap();
        assert_eq!(r.value, 13);
        assert_eq!(r.optimizers["i"], 2);
        assert!(ex_star_forest(10, &[], LiuVariant::Verbatim).is_err());
        assert!(ex_star_forest(10, &[1, 2], LiuVariant::Verbatim).is_err());
    }

    #[test]
    fn conjecture_forms_agree_on_spot_checks() {
        for (n, list) in [(30, vec![2]), (20, vec![3, 3]), (25, vec![3, 2])] {
            for variant in [LiuVariant::Verbatim, LiuVariant::Corrected] {
                let r = conjecture_ex(n, &list, variant).unwrap();
                assert_eq!(r.form_a.value, r.form_b.value, "n={n} list={list:?}");
            }
        }
        assert!(conjecture_ex(10, &[], LiuVariant::Verbatim).is_err());
    }

    #[test]
    fn optimizer_candidates_contain_scan_argmax_spot_check() {
        let r = ex_m_odd_wheels(20, 3, 2).unwrap();
        let cands = main1_optimizer_candidates(20, 3, 2);
        assert!(cands.contains(&r.optimizers["n_0"]));
    }

    #[test]
    fn registry_lookup_and_eval() {
        let op = lookup_formula_op("ex-m-odd-wheels").unwrap();
        let args = FormulaArgs {
            n: Some(20),
            k: Some(3),
            m: Some(2),
            ..Default::default()
        };
        match op.eval(&args).unwrap() {
            FormulaOutput::Result(r) => assert_eq!(r.value, 120),
            other => panic!("unexpected output {other:?}"),
        }
        assert!(lookup_formula_op("no-such-op").is_none());
        // missing argument surfaces as a domain error
        assert!(op.eval(&FormulaArgs::default()).is_err());
        assert_eq!(formula_ops().len(), 10);
    }
}
