//! Direct summation of `3F2` and the closed forms of the Clausen family
//! `3F2(a, b, c; b+1, c+1; 1)` and its weighted sums.
//!
//! Every closed form and brute-force sum here uses `|a|` in place of `a`.
//! With `t_n = (|a|)_n (b)_n (c)_n / ((b+1)_n (c+1)_n n!)`:
//!
//! | sum                      | brute force               | closed form              |
//! |--------------------------|---------------------------|--------------------------|
//! | `Σ t_n`                  | [`gauss_sum_brute`]       | [`gauss_sum_closed`]     |
//! | `Σ (n+1)^k t_n`, k=1,2,3 | [`weighted_sum_brute`]    | [`weighted_sum_closed`]  |
//! | `Σ t_n / (n+1)`          | [`shifted_sum_brute`]     | [`shifted_sum_closed`]   |
//!
//! Since `t_n ~ n^{|a|-3}`, the weighted sums with `k = 2, 3` diverge for every
//! `|a| > 0`; their closed forms are the values obtained by continuing in `a`
//! from the region where they converge. The brute-force routines report the
//! divergence instead of returning a number.

use alloc::format;
use alloc::vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::series::{sum_certified, Outcome, RatioModel, SumValue, MAX_TERMS};
use crate::special::{checked_gamma, checked_gamma_ratio};

/// Smallest admissible `|c - b|`, `|b - 1|`, `|c - 1|`, `|1 - |a||` where a
/// closed form has a removable singularity.
pub const MIN_PARAM_GAP: f64 = 1e-8;

pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Parameters `(a, b, c)` of `3F2(a, b, c; b+1, c+1; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    a: Complex64,
    a_abs: f64,
    b: f64,
    c: f64,
}

impl HyperParams {
    /// Requires `a ≠ 0`, `b, c > 0`, `|c - b| >= 1e-8` and
    /// `|a| < min(1, b+1, c+1)`.
    pub fn new(a: Complex64, b: f64, c: f64) -> Result<Self> {
        if a == Complex64::new(0.0, 0.0) {
            return Err(Error::pre("a must be nonzero"));
        }
        Self::build(a, b, c)
    }

    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(Complex64::new(a, 0.0), b, c)
    }

    /// The `a = 0` limit, where every term past the first vanishes. Only
    /// useful as a degenerate input for checks.
    pub fn degenerate(b: f64, c: f64) -> Result<Self> {
        Self::build(Complex64::new(0.0, 0.0), b, c)
    }

    fn build(a: Complex64, b: f64, c: f64) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::pre("a must be finite"));
        }
        check_positive("b", b)?;
        check_positive("c", c)?;
        if (c - b).abs() < MIN_PARAM_GAP {
            return Err(Error::pre("c must differ from b"));
        }
        let a_abs = a.norm();
        let bound = 1f64.min(b + 1.0).min(c + 1.0);
        if a_abs >= bound {
            return Err(Error::pre(format!("|a| = {a_abs} must be below min(1, b+1, c+1) = {bound}")));
        }
        Ok(HyperParams { a, a_abs, b, c })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn a_abs(&self) -> f64 {
        self.a_abs
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Same parameters with `b` and `c` exchanged.
    pub fn swapped(&self) -> Self {
        HyperParams { b: self.c, c: self.b, ..*self }
    }

    /// `Γ(x) / Γ(1 - |a| + x)`
    fn gamma_quotient(&self, x: f64) -> Result<f64> {
        checked_gamma_ratio(x, 1.0 - self.a_abs + x)
    }

    fn check_lemma_range(&self) -> Result<()> {
        let floor = self.a_abs - 1.0;
        if self.b > floor && self.c > floor {
            Ok(())
        } else {
            Err(Error::pre("b and c must exceed |a| - 1"))
        }
    }
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::pre(format!("{name} must be positive, got {x}")))
    }
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Parameters of a general `3F2(a, b, c; d, e; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralHyperParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub e: Complex64,
}

impl GeneralHyperParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64, e: Complex64) -> Result<Self> {
        for (name, v) in [("d", d), ("e", e)] {
            if is_nonpositive_integer(v) {
                return Err(Error::pre(format!("{name} must not be 0, -1, -2, ...")));
            }
        }
        Ok(GeneralHyperParams { a, b, c, d, e })
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64, e: f64) -> Result<Self> {
        let r = |x| Complex64::new(x, 0.0);
        Self::new(r(a), r(b), r(c), r(d), r(e))
    }

    /// `(a, b, c; b+1, c+1)` keeping the complex `a`.
    pub fn clausen(p: &HyperParams) -> Self {
        let r = |x| Complex64::new(x, 0.0);
        GeneralHyperParams { a: p.a, b: r(p.b), c: r(p.c), d: r(p.b + 1.0), e: r(p.c + 1.0) }
    }

    /// `Re(d + e - a - b - c)`; the series converges on `|z| = 1` iff positive.
    pub fn excess(&self) -> f64 {
        (self.d + self.e - self.a - self.b - self.c).re
    }
}

pub(crate) fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if rel_tol > 1e-15 && rel_tol < 1e-3 {
        Ok(())
    } else {
        Err(Error::pre(format!("rel_tol must lie in (1e-15, 1e-3), got {rel_tol}")))
    }
}

pub(crate) fn finish<T>(out: Outcome<T>) -> Result<SumValue<T>> {
    match out {
        Outcome::Done(s) => Ok(s),
        Outcome::Divergent { sign, terms } => Err(Error::Divergent { sign, terms }),
        Outcome::Capped(best) => Err(Error::IterationCap { cap: MAX_TERMS, tail_bound: best.tail_bound }),
    }
}

fn relative<T: crate::series::Term>(rel_tol: f64) -> impl FnMut(&SumValue<T>) -> bool {
    move |s| s.tail_bound <= rel_tol * s.value.modulus()
}

/// `3F2(a, b, c; d, e; z)` by direct summation for `|z| <= 1`.
///
/// On `|z| = 1` the series must satisfy `Re(d + e - a - b - c) > 0`.
pub fn eval_3f2(p: &GeneralHyperParams, z: Complex64, rel_tol: f64) -> Result<SumValue<Complex64>> {
    check_rel_tol(rel_tol)?;
    let modulus = z.norm();
    if !modulus.is_finite() || modulus > 1.0 + 1e-14 {
        return Err(Error::pre(format!("|z| = {modulus} exceeds 1")));
    }
    if modulus >= 1.0 - 1e-14 && p.excess() <= 0.0 {
        return Err(Error::NonConvergent(format!("on |z| = 1 the series needs Re(d+e-a-b-c) > 0, got {}", p.excess())));
    }
    let one = Complex64::new(1.0, 0.0);
    let model = RatioModel::new(z, vec![p.a, p.b, p.c], vec![p.d, p.e, one]);
    finish(sum_certified(hyper_terms(p, z), &model, MAX_TERMS, relative(rel_tol)))
}

/// Terms `(a)_n (b)_n (c)_n / ((d)_n (e)_n n!) z^n`, ending at the first
/// vanishing term.
///
/// With real parameters and `z = 1` this reproduces [`clausen_terms`]
/// bit for bit.
pub fn hyper_terms(p: &GeneralHyperParams, z: Complex64) -> impl Iterator<Item = Complex64> + Clone {
    let p = *p;
    let mut t = Complex64::new(1.0, 0.0);
    let mut m = 0.0;
    core::iter::from_fn(move || {
        if t == Complex64::new(0.0, 0.0) {
            return None;
        }
        let out = t;
        let num = (p.a + m) * (p.b + m) * (p.c + m);
        let den = (p.d + m) * (p.e + m) * (m + 1.0);
        let ratio = if den.im == 0.0 { num.unscale(den.re) } else { num / den };
        t = t * z * ratio;
        m += 1.0;
        Some(out)
    })
}

/// Terms `t_n = (|a|)_n (b)_n (c)_n / ((b+1)_n (c+1)_n n!)` of the Clausen
/// series at `z = 1`, generated by the term-ratio recurrence.
///
/// The stream ends at the first vanishing term (only when `|a| = 0`).
#[derive(Debug, Clone)]
pub struct ClausenTerms {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    m: f64,
    term: f64,
}

pub fn clausen_terms(p: &HyperParams) -> ClausenTerms {
    ClausenTerms { a: p.a_abs, b: p.b, c: p.c, d: p.b + 1.0, e: p.c + 1.0, m: 0.0, term: 1.0 }
}

impl Iterator for ClausenTerms {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        if self.term == 0.0 {
            return None;
        }
        let out = self.term;
        debug_assert!(out > 0.0, "Clausen term {out} at n = {} is not positive", self.m);
        let m = self.m;
        let num = (self.a + m) * (self.b + m) * (self.c + m);
        let den = (self.d + m) * (self.e + m) * (m + 1.0);
        self.term *= num / den;
        self.m += 1.0;
        Some(out)
    }
}

impl ClausenTerms {
    fn ratio_factors(&self) -> ([f64; 3], [f64; 3]) {
        ([self.a, self.b, self.c], [self.d, self.e, 1.0])
    }
}

/// `Σ_{n≥0} t_n` by direct summation.
pub fn gauss_sum_brute(p: &HyperParams, rel_tol: f64) -> Result<SumValue<f64>> {
    check_rel_tol(rel_tol)?;
    let terms = clausen_terms(p);
    let (num, den) = terms.ratio_factors();
    let model = RatioModel::real(1.0, &num, &den);
    finish(sum_certified(terms, &model, MAX_TERMS, relative(rel_tol)))
}

/// `bc/(c-b) Γ(1-|a|) [Γ(b)/Γ(1-|a|+b) - Γ(c)/Γ(1-|a|+c)]`, the value of
/// `3F2(|a|, b, c; b+1, c+1; 1)`.
pub fn gauss_sum_closed(p: &HyperParams) -> Result<f64> {
    let (b, c) = (p.b, p.c);
    let g = checked_gamma(1.0 - p.a_abs)?;
    Ok(b * c / (c - b) * g * (p.gamma_quotient(b)? - p.gamma_quotient(c)?))
}

fn check_power(k: u32) -> Result<()> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(Error::pre(format!("weight power k must be 1, 2 or 3, got {k}")))
    }
}

/// `(n+1)^k t_n`, sharing the term stream of [`clausen_terms`].
pub fn weighted_terms(k: u32, p: &HyperParams) -> impl Iterator<Item = f64> + Clone {
    clausen_terms(p).enumerate().map(move |(n, t)| (n as f64 + 1.0).powi(k as i32) * t)
}

/// `Σ_{n≥0} (n+1)^k t_n` by direct summation, `k ∈ {1, 2, 3}`.
///
/// For `|a| > 0` this converges only for `k = 1`; `k = 2, 3` end in
/// [`Error::Divergent`].
pub fn weighted_sum_brute(k: u32, p: &HyperParams, rel_tol: f64) -> Result<SumValue<f64>> {
    check_power(k)?;
    check_rel_tol(rel_tol)?;
    p.check_lemma_range()?;
    let (num3, den3) = clausen_terms(p).ratio_factors();
    let mut num = num3.to_vec();
    let mut den = den3.to_vec();
    num.extend(core::iter::repeat_n(2.0, k as usize));
    den.extend(core::iter::repeat_n(1.0, k as usize));
    let model = RatioModel::real(1.0, &num, &den);
    finish(sum_certified(weighted_terms(k, p), &model, MAX_TERMS, relative(rel_tol)))
}

/// `bc Γ(1-|a|)/(c-b) [(1-b)^k Γ(b)/Γ(1-|a|+b) - (1-c)^k Γ(c)/Γ(1-|a|+c)]`.
pub fn weighted_sum_closed(k: u32, p: &HyperParams) -> Result<f64> {
    check_power(k)?;
    p.check_lemma_range()?;
    let (b, c) = (p.b, p.c);
    let g = checked_gamma(1.0 - p.a_abs)?;
    let kk = k as i32;
    let bracket = (1.0 - b).powi(kk) * p.gamma_quotient(b)? - (1.0 - c).powi(kk) * p.gamma_quotient(c)?;
    Ok(b * c * g / (c - b) * bracket)
}

fn check_shifted_pre(p: &HyperParams, gap: f64) -> Result<()> {
    for (name, v) in [("|a|", p.a_abs), ("b", p.b), ("c", p.c)] {
        if (v - 1.0).abs() < gap.max(f64::MIN_POSITIVE) {
            return Err(Error::pre(format!("{name} must differ from 1")));
        }
    }
    let floor = 0f64.max(p.a_abs - 1.0);
    if p.b > floor && p.c > floor {
        Ok(())
    } else {
        Err(Error::pre("b and c must exceed max(0, |a| - 1)"))
    }
}

/// `Σ_{n≥0} t_n / (n+1)` by direct summation.
pub fn shifted_sum_brute(p: &HyperParams, rel_tol: f64) -> Result<SumValue<f64>> {
    check_shifted_pre(p, 0.0)?;
    check_rel_tol(rel_tol)?;
    let (num3, den3) = clausen_terms(p).ratio_factors();
    let num = [num3[0], num3[1], num3[2], 1.0];
    let den = [den3[0], den3[1], den3[2], 2.0];
    let model = RatioModel::real(1.0, &num, &den);
    let terms = clausen_terms(p).enumerate().map(|(n, t)| t / (n as f64 + 1.0));
    finish(sum_certified(terms, &model, MAX_TERMS, relative(rel_tol)))
}

/// `bc/((|a|-1)(b-1)(c-1)) [Γ(2-|a|)/(c-b) ((c-1)Γ(b)/Γ(1-|a|+b) - (b-1)Γ(c)/Γ(1-|a|+c)) - 1]`.
pub fn shifted_sum_closed(p: &HyperParams) -> Result<f64> {
    check_shifted_pre(p, MIN_PARAM_GAP)?;
    let (a, b, c) = (p.a_abs, p.b, p.c);
    let g = checked_gamma(2.0 - a)?;
    let inner = g / (c - b) * ((c - 1.0) * p.gamma_quotient(b)? - (b - 1.0) * p.gamma_quotient(c)?) - 1.0;
    Ok(b * c / ((a - 1.0) * (b - 1.0) * (c - 1.0)) * inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(a: f64, b: f64, c: f64) -> HyperParams {
        HyperParams::real(a, b, c).unwrap()
    }

    fn close(got: f64, want: f64, rel: f64) -> bool {
        (got - want).abs() <= rel * want.abs().max(1e-300)
    }

    #[test]
    fn params_invariants() {
        assert!(HyperParams::real(0.0, 1.0, 2.0).is_err());
        assert!(HyperParams::real(0.5, 0.0, 2.0).is_err());
        assert!(HyperParams::real(0.5, 2.0, -1.0).is_err());
        let err = HyperParams::real(0.5, 2.0, 2.0).unwrap_err();
        assert_eq!(err, Error::Precondition("c must differ from b".into()));
        assert!(HyperParams::real(0.5, 2.0, 2.0 + 1e-9).is_err());
        assert!(HyperParams::real(0.5, 2.0, 2.0 + 2e-8).is_ok());
        assert!(HyperParams::real(1.0, 2.0, 3.0).is_err());
        assert!(HyperParams::new(Complex64::new(0.6, 0.8), 2.0, 3.0).is_err());
        let p = HyperParams::new(Complex64::new(0.3, 0.4), 2.0, 3.0).unwrap();
        assert!((p.a_abs() - 0.5).abs() < 1e-16);
        assert!(HyperParams::degenerate(2.0, 3.0).is_ok());
    }

    #[test]
    fn general_params_reject_nonpositive_integer_denominators() {
        assert!(GeneralHyperParams::real(0.5, 1.0, 1.0, 0.0, 2.0).is_err());
        assert!(GeneralHyperParams::real(0.5, 1.0, 1.0, 2.0, -3.0).is_err());
        assert!(GeneralHyperParams::real(0.5, 1.0, 1.0, 2.0, -3.5).is_ok());
    }

    #[test]
    fn eval_trivial_cases() {
        let p = GeneralHyperParams::real(0.0, 1.5, 2.5, 3.0, 4.0).unwrap();
        let s = eval_3f2(&p, Complex64::new(0.7, 0.0), DEFAULT_REL_TOL).unwrap();
        assert_eq!(s.value, Complex64::new(1.0, 0.0));
        assert_eq!(s.terms_used, 1);

        let p = GeneralHyperParams::real(0.5, 2.0, 3.0, 3.0, 4.0).unwrap();
        let s = eval_3f2(&p, Complex64::new(0.0, 0.0), DEFAULT_REL_TOL).unwrap();
        assert_eq!(s.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn eval_at_unit_argument_matches_independent_reference() {
        // (0.5, 2, 3; 3, 4; 1) = 1.6 (arbitrary-precision hypergeometric evaluator)
        let p = GeneralHyperParams::real(0.5, 2.0, 3.0, 3.0, 4.0).unwrap();
        let s = eval_3f2(&p, Complex64::new(1.0, 0.0), DEFAULT_REL_TOL).unwrap();
        assert!((s.value.re - 1.6).abs() <= s.tail_bound + 1e-15, "{s:?}");
        assert!(s.tail_bound <= 1e-12 * 1.6);
        assert_eq!(s.value.im, 0.0);
    }

    #[test]
    fn eval_inside_disc_and_on_boundary() {
        let p = GeneralHyperParams::real(0.5, 1.5, 2.5, 2.5, 3.5).unwrap();
        let s = eval_3f2(&p, Complex64::new(0.7, 0.0), DEFAULT_REL_TOL).unwrap();
        assert!(close(s.value.re, 1.2233884253604145868, 2e-12));
        let s = eval_3f2(&p, Complex64::new(-1.0, 0.0), 1e-10).unwrap();
        assert!(close(s.value.re, 0.84511190880813193817, 2e-10), "{s:?}");

        let p = GeneralHyperParams::new(
            Complex64::new(0.3, 0.4),
            Complex64::new(1.5, 0.0),
            Complex64::new(2.5, 0.0),
            Complex64::new(2.5, 0.0),
            Complex64::new(3.5, 0.0),
        )
        .unwrap();
        let s = eval_3f2(&p, Complex64::new(0.6, -0.5), DEFAULT_REL_TOL).unwrap();
        let want = Complex64::new(1.2243571954555951742, 0.0058165093495816590546);
        assert!((s.value - want).norm() <= 2e-12);
    }

    #[test]
    fn eval_errors() {
        let p = GeneralHyperParams::real(0.5, 2.0, 3.0, 3.0, 4.0).unwrap();
        assert!(matches!(eval_3f2(&p, Complex64::new(1.1, 0.0), 1e-10), Err(Error::Precondition(_))));
        assert!(matches!(eval_3f2(&p, Complex64::new(0.5, 0.0), 0.0), Err(Error::Precondition(_))));
        assert!(matches!(eval_3f2(&p, Complex64::new(0.5, 0.0), 1e-2), Err(Error::Precondition(_))));
        let q = GeneralHyperParams::real(1.0, 2.0, 3.0, 2.0, 3.0).unwrap();
        assert!(matches!(eval_3f2(&q, Complex64::new(1.0, 0.0), 1e-10), Err(Error::NonConvergent(_))));
    }

    #[test]
    fn gauss_closed_examples() {
        let z = HyperParams::degenerate(2.0, 3.0).unwrap();
        let g0 = gauss_sum_closed(&z).unwrap();
        assert!(close(g0, 1.0, 1e-13), "{g0}");
        let p = hp(0.5, 2.0, 3.0);
        let closed = gauss_sum_closed(&p).unwrap();
        let brute = eval_3f2(&GeneralHyperParams::clausen(&p), Complex64::new(1.0, 0.0), 1e-12).unwrap();
        assert!((closed - brute.value.re).abs() <= brute.tail_bound + 1e-9 * closed.abs());
        assert!(close(closed, gauss_sum_closed(&p.swapped()).unwrap(), 1e-15));
    }

    #[test]
    fn weighted_examples() {
        for (b, c) in [(2.0, 3.0), (0.5, 3.5), (1.5, 0.5)] {
            let z = HyperParams::degenerate(b, c).unwrap();
            let w0 = weighted_sum_closed(1, &z).unwrap();
            assert!(close(w0, 1.0, 1e-13), "{w0}");
            let s = weighted_sum_brute(1, &z, 1e-12).unwrap();
            assert_eq!(s.value, 1.0);
        }
        let p = hp(0.5, 2.0, 3.0);
        let s = weighted_sum_brute(1, &p, 1e-11).unwrap();
        let closed = weighted_sum_closed(1, &p).unwrap();
        assert!(close(closed, 4.8, 1e-13), "{closed}");
        assert!((closed - s.value).abs() <= s.tail_bound + 1e-9 * closed.abs(), "{s:?}");
        assert!(matches!(weighted_sum_brute(4, &p, 1e-10), Err(Error::Precondition(_))));
        assert!(weighted_sum_closed(0, &p).is_err());
    }

    #[test]
    fn weighted_higher_powers_diverge() {
        let p = hp(0.5, 2.0, 3.0);
        for k in [2, 3] {
            let err = weighted_sum_brute(k, &p, 1e-10).unwrap_err();
            assert!(matches!(err, Error::Divergent { sign, .. } if sign > 0.0), "k={k}: {err:?}");
        }
    }

    #[test]
    fn shifted_examples() {
        let z = HyperParams::degenerate(2.0, 3.0).unwrap();
        let s0 = shifted_sum_closed(&z).unwrap();
        assert!(close(s0, 1.0, 1e-13), "{s0}");
        assert_eq!(shifted_sum_brute(&z, 1e-12).unwrap().value, 1.0);
        // references: arbitrary-precision 4F3(|a|, b, c, 1; b+1, c+1, 2; 1)
        for (a, b, c, want) in
            [(0.5, 2.0, 3.0, 1.2), (0.5, 0.5, 2.5, 1.0845313357773134083), (0.3, 1.7, 0.6, 1.0468333689011076619)]
        {
            let p = hp(a, b, c);
            let s = shifted_sum_brute(&p, 1e-12).unwrap();
            let closed = shifted_sum_closed(&p).unwrap();
            assert!(close(closed, want, 1e-13), "{closed} vs {want}");
            assert!((closed - s.value).abs() <= s.tail_bound + 1e-9 * closed.abs());
            assert!((want - s.value).abs() <= s.tail_bound + 1e-15);
        }
        assert!(shifted_sum_closed(&hp(0.5, 1.0, 2.0)).is_err());
        assert!(shifted_sum_closed(&hp(0.5, 1.0 + 1e-9, 2.0)).is_err());
        assert!(shifted_sum_brute(&hp(0.5, 1.0, 2.0), 1e-10).is_err());
    }

    #[test]
    fn weighted_terms_share_the_term_stream() {
        let p = hp(0.3, 1.5, 2.5);
        let base: alloc::vec::Vec<f64> = clausen_terms(&p).take(500).collect();
        let w: alloc::vec::Vec<f64> = weighted_terms(1, &p).take(500).collect();
        for (n, (t, wt)) in base.iter().zip(&w).enumerate() {
            assert_eq!((n as f64 + 1.0) * t, *wt);
        }
    }

    #[test]
    fn clausen_terms_are_positive_and_decreasing_eventually() {
        let p = hp(0.9, 0.5, 3.5);
        let ts: alloc::vec::Vec<f64> = clausen_terms(&p).take(2000).collect();
        assert!(ts.iter().all(|&t| t > 0.0));
        assert!(ts.windows(2).skip(10).all(|w| w[1] < w[0]));
    }
}
