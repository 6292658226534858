//! Sufficient conditions for `z 3F2(a, b, c; b+1, c+1; z)` (and its image
//! under the convolution operator) to lie in `M*(λ, α)` or `N*(λ, α)`, each
//! checked three ways:
//!
//! - `condition_as_stated`: the printed inequality between gamma expressions.
//! - `condition_derived`: the closed form of the coefficient sum is at most
//!   `α - 1`.
//! - `criterion_brute`: the coefficient sum itself, summed directly with a
//!   certified remainder, is at most `α - 1` (plus the remainder bound and an
//!   absolute slack of `1e-9`).
//!
//! With `M_n` the operator multipliers and `[n]` the bracket
//! `n - (1 + nλ - λ)α`, the coefficient sums are
//!
//! | theorem | class | sum                              |
//! |---------|-------|----------------------------------|
//! | 1       | `M*`  | `Σ [n] M_n`                      |
//! | 2       | `N*`  | `Σ n [n] M_n`                    |
//! | 3       | `N*`  | `Σ n [n] M_n (A-B)|τ|/n`         |
//! | 4       | `M*`  | `Σ [n] M_n (A-B)|τ|/n`           |
//!
//! all over `n >= 2`. Theorems 3 and 4 take the coefficients of `f` at the
//! extremal bound `(A-B)|τ|/n`.
//!
//! The brute-force sum is the ground truth. For `|a| > 0` the sum of
//! theorem 2 diverges (its terms decay like `n^{|a|-1}`), so its brute-force
//! criterion fails whatever the closed form says.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::classes::{JanowskiParams, ShapeParams};
use crate::error::{Error, Result};
use crate::hyper::{clausen_terms, gauss_sum_closed, shifted_sum_closed, HyperParams};
use crate::series::{sum_certified, Outcome, RatioModel, SumValue, MAX_TERMS};
use crate::special::{checked_gamma, checked_gamma_ratio};
use crate::Complex64;

/// Absolute slack in every `<= α - 1` comparison against a brute-force sum.
pub const COMPARISON_SLACK: f64 = 1e-9;

/// Brute-force sums stop once the remainder bound is below this multiple of
/// `α - 1`, or earlier once the comparison is decided.
pub const TAIL_TARGET: f64 = 1e-12;

/// Comparison slack and remainder target for the brute-force criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute slack added to `α - 1`.
    pub slack: f64,
    /// Remainder target as a multiple of `α - 1`.
    pub tail_target: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { slack: COMPARISON_SLACK, tail_target: TAIL_TARGET }
    }
}

impl Tolerances {
    pub fn new(slack: f64, tail_target: f64) -> Result<Self> {
        if !(slack.is_finite() && slack >= 0.0) {
            return Err(Error::pre(format!("comparison slack {slack} must be finite and nonnegative")));
        }
        if !(tail_target.is_finite() && tail_target > 0.0) {
            return Err(Error::pre(format!("tail target {tail_target} must be finite and positive")));
        }
        Ok(Tolerances { slack, tail_target })
    }
}

pub const SKIP_C_EQUALS_B: &str = "c must differ from b";
pub const SKIP_DENOMINATOR: &str = "denominator nonpositive";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    One,
    Two,
    Three,
    Four,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::One, Theorem::Two, Theorem::Three, Theorem::Four];

    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
            Theorem::Three => 3,
            Theorem::Four => 4,
        }
    }

    /// Theorems 3 and 4 also take `(τ, A, B)`.
    pub fn uses_janowski(self) -> bool {
        matches!(self, Theorem::Three | Theorem::Four)
    }
}

impl TryFrom<u8> for Theorem {
    type Error = Error;

    fn try_from(k: u8) -> Result<Self> {
        match k {
            1 => Ok(Theorem::One),
            2 => Ok(Theorem::Two),
            3 => Ok(Theorem::Three),
            4 => Ok(Theorem::Four),
            _ => Err(Error::pre(format!("theorem must be 1, 2, 3 or 4, got {k}"))),
        }
    }
}

/// `bc Γ(1-|a|)/(c-b) [g(b) Γ(b)/Γ(1-|a|+b) - g(c) Γ(c)/Γ(1-|a|+c)]`
fn gamma_bracket(p: &HyperParams, g: impl Fn(f64) -> f64) -> Result<f64> {
    let (b, c) = (p.b(), p.c());
    let x = |v: f64| -> Result<f64> { Ok(g(v) * checked_gamma_ratio(v, 1.0 - p.a_abs() + v)?) };
    let pre = b * c * checked_gamma(1.0 - p.a_abs())? / (c - b);
    Ok(pre * (x(b)? - x(c)?))
}

/// `((1-α) - x(1-αλ)) Γ(x)/Γ(1-|a|+x)`, the two sides of theorem 1's condition.
fn side_one(p: &HyperParams, s: &ShapeParams, x: f64) -> Result<f64> {
    let (l, a) = (s.lambda(), s.alpha());
    Ok(((1.0 - a) - x * (1.0 - a * l)) * checked_gamma_ratio(x, 1.0 - p.a_abs() + x)?)
}

/// `(x-1)(x(1-αλ) - (1-α)) Γ(x)/Γ(1-|a|+x)`, the two sides of theorem 2's condition.
fn side_two(p: &HyperParams, s: &ShapeParams, x: f64) -> Result<f64> {
    let (l, a) = (s.lambda(), s.alpha());
    Ok((x - 1.0) * (x * (1.0 - a * l) - (1.0 - a)) * checked_gamma_ratio(x, 1.0 - p.a_abs() + x)?)
}

/// Closed form of `Σ_{n≥2} [n] M_n` minus `α - 1`: the gamma bracket
/// built from theorem 1's two sides.
pub fn s1_closed(p: &HyperParams, s: &ShapeParams) -> Result<f64> {
    let (l, a) = (s.lambda(), s.alpha());
    gamma_bracket(p, |x| (1.0 - a) - x * (1.0 - a * l))
}

/// Closed form of `Σ_{n≥2} [n] M_n`.
pub fn t1_closed(p: &HyperParams, s: &ShapeParams) -> Result<f64> {
    Ok(s1_closed(p, s)? + s.alpha() - 1.0)
}

/// Closed form of `Σ_{n≥2} n [n] M_n`, obtained by continuing the weighted
/// sums in `a`; the series itself diverges for `|a| > 0`.
pub fn t2_closed(p: &HyperParams, s: &ShapeParams) -> Result<f64> {
    let (l, a) = (s.lambda(), s.alpha());
    Ok(gamma_bracket(p, |x| (x - 1.0) * (x * (1.0 - a * l) - (1.0 - a)))? + a - 1.0)
}

/// Closed form of `Σ_{n≥2} [n] M_n / n` minus `α - 1`:
/// `(1-αλ) G - α(1-λ) Sh` with `G` the Gauss-type sum and `Sh` the shifted sum.
pub fn s4_closed(p: &HyperParams, s: &ShapeParams) -> Result<f64> {
    let (l, a) = (s.lambda(), s.alpha());
    Ok((1.0 - a * l) * gauss_sum_closed(p)? - a * (1.0 - l) * shifted_sum_closed(p)?)
}

fn janowski_scale(which: Theorem, j: Option<&JanowskiParams>) -> Result<f64> {
    if !which.uses_janowski() {
        return Ok(0.0);
    }
    let j = j.ok_or_else(|| Error::pre(format!("theorem {} needs (tau, A, B)", which.number())))?;
    let k = j.scale();
    if k < 1.0 {
        Ok(k)
    } else {
        Err(Error::pre(SKIP_DENOMINATOR))
    }
}

/// Closed form of the brute-force coefficient sum of `which`.
pub fn closed_sum(which: Theorem, p: &HyperParams, s: &ShapeParams, j: Option<&JanowskiParams>) -> Result<f64> {
    let k = janowski_scale(which, j)?;
    let am1 = s.alpha() - 1.0;
    match which {
        Theorem::One => t1_closed(p, s),
        Theorem::Two => t2_closed(p, s),
        Theorem::Three => Ok(k * (s1_closed(p, s)? + am1)),
        Theorem::Four => Ok(k * (s4_closed(p, s)? + am1)),
    }
}

/// The printed inequality of `which`.
pub fn condition_as_stated(
    which: Theorem,
    p: &HyperParams,
    s: &ShapeParams,
    j: Option<&JanowskiParams>,
) -> Result<bool> {
    let k = janowski_scale(which, j)?;
    let am1 = s.alpha() - 1.0;
    Ok(match which {
        Theorem::One => side_one(p, s, p.b())? <= side_one(p, s, p.c())?,
        Theorem::Two => side_two(p, s, p.b())? <= side_two(p, s, p.c())?,
        Theorem::Three => s1_closed(p, s)? * (k / (1.0 - k)) <= am1,
        Theorem::Four => s4_closed(p, s)? * (k / (1.0 - k)) <= am1,
    })
}

/// Term stream and ratio model of the brute-force sum, indexed by
/// `j = n - 2`.
fn brute_series(which: Theorem, p: &HyperParams, s: &ShapeParams, k: f64) -> (impl Iterator<Item = f64>, RatioModel) {
    let s = *s;
    let terms = clausen_terms(p).skip(1).enumerate().map(move |(j, m)| {
        let n = j + 2;
        let nf = n as f64;
        let bracket = s.bracket(n);
        match which {
            Theorem::One => bracket * m,
            Theorem::Two => nf * bracket * m,
            Theorem::Three => nf * bracket * (m * (k / nf)),
            Theorem::Four => bracket * (m * (k / nf)),
        }
    });

    let (a, b, c) = (p.a_abs(), p.b(), p.c());
    let mut num = alloc::vec![1.0 + a, 1.0 + b, 1.0 + c];
    let mut den = alloc::vec![2.0 + b, 2.0 + c, 2.0];
    let mut valid_from = 0usize;
    let slope = 1.0 - s.alpha() * s.lambda();
    if slope != 0.0 {
        // [n] = slope (n - r0), so [n+1]/[n] = (j + 3 - r0)/(j + 2 - r0)
        let r0 = s.alpha() * (1.0 - s.lambda()) / slope;
        num.push(3.0 - r0);
        den.push(2.0 - r0);
        if r0 >= 2.0 {
            valid_from = (r0 - 2.0).floor() as usize + 1;
        }
    }
    match which {
        Theorem::Two => {
            num.push(3.0);
            den.push(2.0);
        }
        Theorem::Four => {
            num.push(2.0);
            den.push(3.0);
        }
        Theorem::One | Theorem::Three => {}
    }
    (terms, RatioModel::real(1.0, &num, &den).valid_from(valid_from))
}

/// How a brute-force coefficient sum ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BruteSum {
    Finite(SumValue<f64>),
    /// The terms eventually keep the sign `sign` and the sum diverges.
    Divergent {
        sign: f64,
        terms: usize,
    },
}

fn brute_sum_with<F>(
    which: Theorem,
    p: &HyperParams,
    s: &ShapeParams,
    j: Option<&JanowskiParams>,
    stop: F,
) -> Result<BruteSum>
where
    F: FnMut(&SumValue<f64>) -> bool,
{
    let k = janowski_scale(which, j)?;
    let (terms, model) = brute_series(which, p, s, k);
    match sum_certified(terms, &model, MAX_TERMS, stop) {
        Outcome::Done(v) => Ok(BruteSum::Finite(v)),
        Outcome::Divergent { sign, terms } => Ok(BruteSum::Divergent { sign, terms }),
        Outcome::Capped(best) => Err(Error::IterationCap { cap: MAX_TERMS, tail_bound: best.tail_bound }),
    }
}

/// The coefficient sum of `which`, summed until the remainder bound is
/// below `tail_target`.
pub fn brute_sum(
    which: Theorem,
    p: &HyperParams,
    s: &ShapeParams,
    j: Option<&JanowskiParams>,
    tail_target: f64,
) -> Result<BruteSum> {
    brute_sum_with(which, p, s, j, |v| v.tail_bound <= tail_target)
}

/// Parameters of one sweep point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub a_abs: f64,
    pub b: f64,
    pub c: f64,
    pub lambda: f64,
    pub alpha: f64,
    /// `(A, B, |τ|)` for theorems 3 and 4.
    pub janowski: Option<(f64, f64, f64)>,
}

/// Result of checking one theorem at one point.
///
/// A point whose closed forms or sums could not be computed keeps
/// `skip_reason`; its flags are then `false` and its numbers NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremVerdict {
    pub point: SweepPoint,
    pub condition_as_stated: bool,
    pub condition_derived: bool,
    pub criterion_brute: bool,
    /// `(α - 1)` minus the brute-force sum; `-inf` when the sum diverges.
    pub deficit: f64,
    pub tail_bound: f64,
    pub terms_used: usize,
    /// Closed form of the same sum.
    pub closed_value: f64,
    pub skip_reason: Option<String>,
}

impl TheoremVerdict {
    fn failed(point: SweepPoint, reason: String) -> Self {
        TheoremVerdict {
            point,
            condition_as_stated: false,
            condition_derived: false,
            criterion_brute: false,
            deficit: f64::NAN,
            tail_bound: f64::NAN,
            terms_used: 0,
            closed_value: f64::NAN,
            skip_reason: Some(reason),
        }
    }

    /// The derived condition holds but the brute-force criterion fails.
    pub fn is_violation(&self) -> bool {
        self.skip_reason.is_none() && self.condition_derived && !self.criterion_brute
    }

    pub fn is_mismatch(&self) -> bool {
        self.skip_reason.is_none() && self.condition_as_stated != self.condition_derived
    }
}

/// Evaluate all three forms of `which` at one parameter set.
pub fn thm_condition(
    which: Theorem,
    p: &HyperParams,
    s: &ShapeParams,
    j: Option<&JanowskiParams>,
) -> Result<TheoremVerdict> {
    thm_condition_with(which, p, s, j, &Tolerances::default())
}

pub fn thm_condition_with(
    which: Theorem,
    p: &HyperParams,
    s: &ShapeParams,
    j: Option<&JanowskiParams>,
    tol: &Tolerances,
) -> Result<TheoremVerdict> {
    let point = SweepPoint {
        a_abs: p.a_abs(),
        b: p.b(),
        c: p.c(),
        lambda: s.lambda(),
        alpha: s.alpha(),
        janowski: j.filter(|_| which.uses_janowski()).map(|j| (j.a(), j.b(), j.tau().norm())),
    };
    let am1 = s.alpha() - 1.0;
    let closed = closed_sum(which, p, s, j)?;
    let stated = condition_as_stated(which, p, s, j)?;
    let threshold = am1 + tol.slack;
    let target = tol.tail_target * am1;
    let brute = brute_sum_with(which, p, s, j, |v| {
        v.tail_bound <= target || v.value + v.tail_bound <= threshold || v.value - v.tail_bound > threshold
    })?;
    let (criterion, deficit, tail, terms) = match brute {
        BruteSum::Finite(v) => (v.value <= threshold + v.tail_bound, am1 - v.value, v.tail_bound, v.terms_used),
        BruteSum::Divergent { sign, terms } => {
            let up = sign > 0.0;
            (!up, if up { f64::NEG_INFINITY } else { f64::INFINITY }, f64::INFINITY, terms)
        }
    };
    Ok(TheoremVerdict {
        point,
        condition_as_stated: stated,
        condition_derived: closed <= am1,
        criterion_brute: criterion,
        deficit,
        tail_bound: tail,
        terms_used: terms,
        closed_value: closed,
        skip_reason: None,
    })
}

/// Axes of a sweep; points run over the Cartesian product in the order
/// `a_abs, b, c, lambda, alpha, janowski`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub a_abs: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub lambda: Vec<f64>,
    pub alpha: Vec<f64>,
    /// `(A, B, |τ|)` triples, used only by theorems 3 and 4.
    pub janowski: Vec<(f64, f64, f64)>,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            a_abs: alloc::vec![0.1, 0.3, 0.5, 0.9],
            b: alloc::vec![0.5, 1.5, 2.5, 3.5],
            c: alloc::vec![0.5, 1.5, 2.5, 3.5],
            lambda: alloc::vec![0.0, 0.25, 0.5],
            alpha: alloc::vec![1.1, 1.2, 4.0 / 3.0],
            janowski: alloc::vec![(1.0, -1.0, 0.2), (0.5, 0.0, 0.5), (1.0, 0.0, 0.4)],
        }
    }
}

impl SweepGrid {
    pub fn points(&self, which: Theorem) -> Vec<SweepPoint> {
        let jan: Vec<Option<(f64, f64, f64)>> =
            if which.uses_janowski() { self.janowski.iter().copied().map(Some).collect() } else { alloc::vec![None] };
        let mut out = Vec::new();
        for &a_abs in &self.a_abs {
            for &b in &self.b {
                for &c in &self.c {
                    for &lambda in &self.lambda {
                        for &alpha in &self.alpha {
                            for &janowski in &jan {
                                out.push(SweepPoint { a_abs, b, c, lambda, alpha, janowski });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_empty(&self, which: Theorem) -> bool {
        self.points(which).is_empty()
    }
}

/// Outcome of one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub enum PointOutcome {
    Verdict(TheoremVerdict),
    /// The point violates a precondition and was not evaluated.
    Skipped {
        point: SweepPoint,
        reason: String,
    },
}

fn reason(e: Error) -> String {
    match e {
        Error::Precondition(m) => m,
        other => format!("{other}"),
    }
}

/// Validate and evaluate one point.
pub fn evaluate_point(which: Theorem, point: &SweepPoint) -> PointOutcome {
    evaluate_point_with(which, point, &Tolerances::default())
}

pub fn evaluate_point_with(which: Theorem, point: &SweepPoint, tol: &Tolerances) -> PointOutcome {
    let skip = |r: String| PointOutcome::Skipped { point: *point, reason: r };
    let p = match HyperParams::real(point.a_abs, point.b, point.c) {
        Ok(p) => p,
        Err(e) => return skip(reason(e)),
    };
    let s = match ShapeParams::new(point.lambda, point.alpha) {
        Ok(s) => s,
        Err(e) => return skip(reason(e)),
    };
    let j = match (which.uses_janowski(), point.janowski) {
        (false, _) => None,
        (true, None) => return skip(format!("theorem {} needs (A, B, |tau|)", which.number())),
        (true, Some((a, b, t))) => match JanowskiParams::new(Complex64::new(t, 0.0), a, b) {
            Ok(j) if j.scale() < 1.0 => Some(j),
            Ok(_) => return skip(SKIP_DENOMINATOR.into()),
            Err(e) => return skip(reason(e)),
        },
    };
    match thm_condition_with(which, &p, &s, j.as_ref(), tol) {
        Ok(mut v) => {
            // keep the grid values exactly as given
            v.point = *point;
            PointOutcome::Verdict(v)
        }
        Err(e) => PointOutcome::Verdict(TheoremVerdict::failed(*point, reason(e))),
    }
}

/// Counts over the evaluated points of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepSummary {
    pub evaluated: usize,
    pub skipped: usize,
    pub errored: usize,
    pub stated_true: usize,
    pub derived_true: usize,
    pub brute_true: usize,
    /// Derived condition true, brute-force criterion false.
    pub violations: usize,
    /// Brute-force criterion true, derived condition false.
    pub derived_misses: usize,
    /// Printed and derived conditions disagree.
    pub stated_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub verdicts: Vec<TheoremVerdict>,
    pub skipped: Vec<(SweepPoint, String)>,
    pub summary: SweepSummary,
}

impl SweepReport {
    /// Assemble a report from point outcomes, kept in the given order.
    pub fn from_outcomes(theorem: Theorem, outcomes: impl IntoIterator<Item = PointOutcome>) -> Self {
        let mut verdicts = Vec::new();
        let mut skipped = Vec::new();
        let mut sm = SweepSummary::default();
        for o in outcomes {
            match o {
                PointOutcome::Skipped { point, reason } => {
                    sm.skipped += 1;
                    skipped.push((point, reason));
                }
                PointOutcome::Verdict(v) => {
                    sm.evaluated += 1;
                    if v.skip_reason.is_some() {
                        sm.errored += 1;
                    } else {
                        sm.stated_true += v.condition_as_stated as usize;
                        sm.derived_true += v.condition_derived as usize;
                        sm.brute_true += v.criterion_brute as usize;
                        sm.violations += v.is_violation() as usize;
                        sm.derived_misses += (v.criterion_brute && !v.condition_derived) as usize;
                        sm.stated_mismatches += v.is_mismatch() as usize;
                    }
                    verdicts.push(v);
                }
            }
        }
        SweepReport { theorem, verdicts, skipped, summary: sm }
    }
}

/// Evaluate every point of `grid` in grid order.
pub fn run_sweep(which: Theorem, grid: &SweepGrid) -> Result<SweepReport> {
    run_sweep_with(which, grid, &Tolerances::default())
}

pub fn run_sweep_with(which: Theorem, grid: &SweepGrid, tol: &Tolerances) -> Result<SweepReport> {
    let points = grid.points(which);
    if points.is_empty() {
        return Err(Error::pre("sweep grid is empty"));
    }
    Ok(SweepReport::from_outcomes(which, points.iter().map(|pt| evaluate_point_with(which, pt, tol))))
}
