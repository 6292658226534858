//! Summation of hypergeometric-type series with a certified remainder.
//!
//! A series `Σ t_m` is described by its term stream and a [`RatioModel`]
//! giving `t_{m+1}/t_m = z · Π(m + p_i) / Π(m + q_j)` for large `m`. At
//! checkpoints the engine proves an enclosure of the remainder
//! `Σ_{m≥n} t_m` from that model:
//!
//! - `|lim ratio| < 1`: a geometric majorant `|t_n| / (1 - r)` once
//!   `|ratio| <= r` is proven on `[n, ∞)`.
//! - `|z| = 1`, decay exponent `σ > 1` (terms behave like `m^{-σ}`): the
//!   term modulus is compared with `Γ(m+p)/Γ(m+p+σ)`, whose remainder
//!   telescopes exactly to `Γ(n+p)/((σ-1)Γ(n+p+σ-1))`. If `|t_m|` divided by
//!   that comparison sequence is proven nonincreasing (nondecreasing) from
//!   `n` on, the remainder is at most (at least) `|t_n|(n+p+σ-1)/(σ-1)`.
//!   Choosing `p` on either side of the asymptotically matching value gives
//!   a two-sided bracket whose width shrinks like `|t_n|/n`.
//! - `z = -1` with real parameters: alternating-series bracket.
//! - `z = 1`, `σ <= 1`, real parameters: divergence is proven via
//!   `m(1 - ratio) <= 1` (Raabe).
//!
//! Each "proven on `[n, ∞)`" reduces to nonnegativity of a polynomial in `m`,
//! checked by shifting it to `n` and inspecting the signs of the shifted
//! coefficients. The proofs hold up to floating-point rounding in forming
//! those coefficients.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::poly::Poly;

/// Hard limit on the number of terms any summation may use.
pub const MAX_TERMS: usize = 1_000_000;

/// A truncated sum with a bound on `|value - true sum|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumValue<T> {
    pub value: T,
    /// Number of terms added explicitly.
    pub terms_used: usize,
    /// Bound on the omitted remainder (after centring) plus a summation
    /// rounding allowance.
    pub tail_bound: f64,
}

/// Scalar a series can be summed in.
pub(crate) trait Term: Copy + core::fmt::Debug {
    fn modulus(self) -> f64;
    fn parts(self) -> (f64, f64);
    fn from_parts(re: f64, im: f64) -> Self;
    fn scale(self, k: f64) -> Self;
}

impl Term for f64 {
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn parts(self) -> (f64, f64) {
        (self, 0.0)
    }
    fn from_parts(re: f64, _im: f64) -> Self {
        re
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
}

impl Term for Complex64 {
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn parts(self) -> (f64, f64) {
        (self.re, self.im)
    }
    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
}

/// Term ratio `t_{m+1}/t_m = z · Π(m + num_i) / Π(m + den_j)`, exact for
/// every `m >= valid_from`.
#[derive(Debug, Clone)]
pub(crate) struct RatioModel {
    z: Complex64,
    num: Vec<Complex64>,
    den: Vec<Complex64>,
    valid_from: usize,
}

/// What was proven about the remainder `Σ_{m≥n} t_m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum TailCert {
    /// Remainder equals `t_n · x` for some real `x ∈ [lo, hi]`.
    Scaled { lo: f64, hi: f64 },
    /// `|remainder| <= factor · |t_n|`.
    Modulus { factor: f64 },
    /// Terms eventually have one sign and the series diverges.
    Divergent,
    /// Nothing provable at this index.
    Unknown,
}

const UNIT_CIRCLE_SLACK: f64 = 1e-14;

impl RatioModel {
    pub fn new(z: Complex64, num: Vec<Complex64>, den: Vec<Complex64>) -> Self {
        RatioModel { z, num, den, valid_from: 0 }
    }

    pub fn real(z: f64, num: &[f64], den: &[f64]) -> Self {
        RatioModel::new(
            Complex64::new(z, 0.0),
            num.iter().map(|&p| Complex64::new(p, 0.0)).collect(),
            den.iter().map(|&q| Complex64::new(q, 0.0)).collect(),
        )
    }

    /// The model only describes ratios from index `m0` on.
    pub fn valid_from(mut self, m0: usize) -> Self {
        self.valid_from = m0;
        self
    }

    pub fn ratio_modulus(&self, m: f64) -> f64 {
        let num: f64 = self.num.iter().map(|p| (p + m).norm()).product();
        let den: f64 = self.den.iter().map(|q| (q + m).norm()).product();
        self.z.norm() * num / den
    }

    fn on_unit_circle(&self) -> bool {
        self.num.len() == self.den.len() && (self.z.norm() - 1.0).abs() <= UNIT_CIRCLE_SLACK
    }

    /// Decay exponent `σ` with `|t_m| ~ m^{-σ}` on the unit circle.
    pub fn decay_exponent(&self) -> f64 {
        self.den.iter().map(|q| q.re).sum::<f64>() - self.num.iter().map(|p| p.re).sum::<f64>()
    }

    /// `Some(sign of every ratio on [m0, ∞))` when all parameters are real
    /// and every linear factor is positive there.
    fn real_ratio_sign(&self, m0: f64) -> Option<f64> {
        if self.z.im != 0.0 || self.z.re == 0.0 {
            return None;
        }
        let all_pos = self.num.iter().chain(self.den.iter()).all(|s| s.im == 0.0 && m0 + s.re > 0.0);
        all_pos.then(|| self.z.re.signum())
    }

    /// `|z|^2 Π|m + p|^2` and `Π|m + q|^2`.
    fn squared_polys(&self, unit: bool) -> (Poly, Poly) {
        let zz = if unit { 1.0 } else { self.z.norm_sqr() };
        let nm = self.num.iter().fold(Poly::constant(zz), |acc, &p| acc.mul(&Poly::modulus_sq(p)));
        let dn = self.den.iter().fold(Poly::constant(1.0), |acc, &q| acc.mul(&Poly::modulus_sq(q)));
        (nm, dn)
    }

    pub(crate) fn certify(&self, n: usize) -> TailCert {
        if n < self.valid_from {
            return TailCert::Unknown;
        }
        let m0 = n as f64;
        if self.den.iter().any(|q| (q + m0).norm() == 0.0) {
            return TailCert::Unknown;
        }
        if self.on_unit_circle() {
            self.certify_unit(m0)
        } else {
            self.certify_geometric(m0)
        }
    }

    fn certify_geometric(&self, m0: f64) -> TailCert {
        let limit = if self.num.len() == self.den.len() {
            self.z.norm()
        } else if self.num.len() < self.den.len() {
            0.0
        } else {
            return TailCert::Unknown;
        };
        let s = self.ratio_modulus(m0).max(limit);
        if s >= 1.0 {
            return TailCert::Unknown;
        }
        let r = s + 0.25 * (1.0 - s);
        let (nm, dn) = self.squared_polys(false);
        if dn.scale(r * r).sub(&nm).nonneg_from(m0) {
            TailCert::Modulus { factor: 1.0 / (1.0 - r) }
        } else {
            TailCert::Unknown
        }
    }

    fn certify_unit(&self, m0: f64) -> TailCert {
        let sigma = self.decay_exponent();
        let (nm, dn) = self.squared_polys(true);
        let deg = dn.degree();
        let sign = self.real_ratio_sign(m0);

        if sigma <= 1.0 {
            if sign == Some(1.0) {
                // m^2 |t_{m+1}|^2 >= (m-1)^2 |t_m|^2, i.e. m(1 - ratio) <= 1.
                let lhs = Poly::linear_sq(0.0).mul(&nm);
                let rhs = Poly::linear_sq(-1.0).mul(&dn);
                if m0 > 1.0 && lhs.sub(&rhs).truncated(deg + 1).nonneg_from(m0) {
                    return TailCert::Divergent;
                }
            }
            if sign == Some(-1.0) && sigma > 0.0 {
                return self.alternating(m0, &nm, &dn);
            }
            return TailCert::Unknown;
        }

        if sign == Some(-1.0) {
            return self.alternating(m0, &nm, &dn);
        }

        let hi = match kummer_factor(m0, &nm, &dn, sigma, Side::Upper) {
            Some(hi) => hi,
            None => return TailCert::Unknown,
        };
        if sign == Some(1.0) {
            if let Some(lo) = kummer_factor(m0, &nm, &dn, sigma, Side::Lower) {
                return TailCert::Scaled { lo, hi };
            }
        }
        TailCert::Modulus { factor: hi }
    }

    fn alternating(&self, m0: f64, nm: &Poly, dn: &Poly) -> TailCert {
        // |ratio| <= 1 from m0 on: remainder lies between t_n(1 - |ratio(n)|) and t_n.
        let deg = dn.degree();
        if dn.sub(nm).truncated(deg).nonneg_from(m0) {
            let u = self.ratio_modulus(m0).min(1.0);
            TailCert::Scaled { lo: 1.0 - u, hi: 1.0 }
        } else {
            TailCert::Unknown
        }
    }
}

#[derive(Clone, Copy)]
enum Side {
    Upper,
    Lower,
}

/// Factor `(n + p + σ - 1)/(σ - 1)` bounding `Σ_{m≥n}|t_m| / |t_n|` from the
/// requested side, or `None` if no shift `p` could be certified.
fn kummer_factor(m0: f64, nm: &Poly, dn: &Poly, sigma: f64, side: Side) -> Option<f64> {
    let deg = dn.degree();
    let top = |p: &Poly, k: usize| if deg >= k { p.coeff(deg - k) } else { 0.0 };
    let (n1, n2) = (top(nm, 1), top(nm, 2));
    let d2 = top(dn, 2);
    // Coefficient of m^deg in (m+p)^2 Dn - (m+p+σ)^2 Nm is 2σ(p - p_match).
    let k = d2 - n2 - sigma * sigma - 2.0 * sigma * n1;
    let p_match = -k / (2.0 * sigma);

    let mut delta = 1.0 / (1024.0 * (m0 + 1.0));
    for _ in 0..48 {
        let p = match side {
            Side::Upper => p_match + delta,
            Side::Lower => p_match - delta,
        };
        let q = p + sigma;
        if m0 + p > 0.0 && m0 + q - 1.0 > 0.0 {
            let lp = Poly::linear_sq(p);
            let lq = Poly::linear_sq(q);
            let poly = match side {
                Side::Upper => lp.mul(dn).sub(&lq.mul(nm)),
                Side::Lower => lq.mul(nm).sub(&lp.mul(dn)),
            };
            if poly.truncated(deg).nonneg_from(m0) {
                return Some((m0 + q - 1.0) / (sigma - 1.0));
            }
        } else if matches!(side, Side::Lower) {
            return None;
        }
        delta *= 2.0;
    }
    None
}

/// Neumaier-compensated accumulator over real and imaginary parts.
#[derive(Default, Clone, Copy)]
struct Accumulator {
    sum: [f64; 2],
    comp: [f64; 2],
    abs_sum: f64,
}

impl Accumulator {
    fn add<T: Term>(&mut self, t: T) {
        let (re, im) = t.parts();
        for (i, x) in [re, im].into_iter().enumerate() {
            let s = self.sum[i] + x;
            if self.sum[i].abs() >= x.abs() {
                self.comp[i] += (self.sum[i] - s) + x;
            } else {
                self.comp[i] += (x - s) + self.sum[i];
            }
            self.sum[i] = s;
        }
        self.abs_sum += t.modulus();
    }

    fn value<T: Term>(&self) -> T {
        T::from_parts(self.sum[0] + self.comp[0], self.sum[1] + self.comp[1])
    }

    fn rounding_allowance(&self) -> f64 {
        4.0 * f64::EPSILON * self.abs_sum
    }
}

/// Result of a certified summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Outcome<T> {
    /// The stop predicate accepted this estimate, or the term stream ended.
    Done(SumValue<T>),
    /// Proven divergent; `sign` of the eventual terms.
    Divergent { sign: f64, terms: usize },
    /// Term cap reached; best available estimate (tail bound may be infinite).
    Capped(SumValue<T>),
}

fn next_checkpoint(n: usize) -> usize {
    n + (n / 16).max(4)
}

/// Sum `terms` until `stop` accepts a certified estimate.
///
/// A term stream that ends is taken to mean every later term is zero.
pub(crate) fn sum_certified<T, I, F>(terms: I, model: &RatioModel, cap: usize, mut stop: F) -> Outcome<T>
where
    T: Term,
    I: IntoIterator<Item = T>,
    F: FnMut(&SumValue<T>) -> bool,
{
    let mut acc = Accumulator::default();
    let mut checkpoint = model.valid_from.max(1);
    let mut best = SumValue { value: T::from_parts(0.0, 0.0), terms_used: 0, tail_bound: f64::INFINITY };
    let mut count = 0usize;

    for (n, t) in terms.into_iter().enumerate() {
        if n >= checkpoint {
            checkpoint = next_checkpoint(n);
            let tm = t.modulus();
            if tm > 0.0 && tm.is_finite() {
                let estimate = match model.certify(n) {
                    TailCert::Scaled { lo, hi } => Some((t.scale(0.5 * (lo + hi)), 0.5 * (hi - lo) * tm)),
                    TailCert::Modulus { factor } => Some((T::from_parts(0.0, 0.0), factor * tm)),
                    TailCert::Divergent => {
                        let sign = t.parts().0.signum();
                        return Outcome::Divergent { sign, terms: n };
                    }
                    TailCert::Unknown => None,
                };
                if let Some((centre, radius)) = estimate {
                    let (pr, pi) = acc.value::<T>().parts();
                    let (cr, ci) = centre.parts();
                    let est = SumValue {
                        value: T::from_parts(pr + cr, pi + ci),
                        terms_used: n,
                        tail_bound: radius + acc.rounding_allowance() + 2.0 * f64::EPSILON * centre.modulus(),
                    };
                    best = est;
                    if stop(&est) {
                        return Outcome::Done(est);
                    }
                }
            }
        }
        if n >= cap {
            return Outcome::Capped(best);
        }
        acc.add(t);
        count = n + 1;
    }
    // Stream ended: the sum is exact up to rounding.
    Outcome::Done(SumValue { value: acc.value(), terms_used: count, tail_bound: acc.rounding_allowance() })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Terms of Σ z^m Π(m+p)/Π(m+q) style series from a model and first term.
    fn stream(model: &RatioModel, first: Complex64) -> impl Iterator<Item = Complex64> + '_ {
        let mut t = first;
        let mut m = 0.0;
        core::iter::from_fn(move || {
            let out = t;
            let num: Complex64 = model.num.iter().map(|p| p + m).product();
            let den: Complex64 = model.den.iter().map(|q| q + m).product();
            t = t * model.z * num / den;
            m += 1.0;
            Some(out)
        })
    }

    fn rel(tol: f64) -> impl FnMut(&SumValue<Complex64>) -> bool {
        move |s| s.tail_bound <= tol * s.value.norm()
    }

    fn done(o: Outcome<Complex64>) -> SumValue<Complex64> {
        match o {
            Outcome::Done(s) => s,
            other => panic!("expected convergence, got {other:?}"),
        }
    }

    #[test]
    fn geometric_series() {
        let model = RatioModel::real(0.5, &[], &[]);
        let s = done(sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, MAX_TERMS, rel(1e-13)));
        assert!((s.value.re - 2.0).abs() <= s.tail_bound);
        assert!(s.tail_bound <= 2e-13 * 2.0);
        assert!(s.terms_used < 80);
    }

    #[test]
    fn telescoping_series_at_unit_argument() {
        // Σ 1/((m+1)(m+2)) = 1, ratio (m+1)/(m+3).
        let model = RatioModel::real(1.0, &[1.0], &[3.0]);
        let s = done(sum_certified(stream(&model, Complex64::new(0.5, 0.0)), &model, MAX_TERMS, rel(1e-12)));
        assert!((s.value.re - 1.0).abs() <= s.tail_bound, "{s:?}");
        assert!(s.tail_bound <= 1e-12);
    }

    #[test]
    fn basel_sum() {
        let model = RatioModel::real(1.0, &[1.0, 1.0], &[2.0, 2.0]);
        let s = done(sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, MAX_TERMS, rel(1e-12)));
        let want = core::f64::consts::PI * core::f64::consts::PI / 6.0;
        assert!((s.value.re - want).abs() <= s.tail_bound, "{s:?}");
    }

    #[test]
    fn slowly_decaying_series_is_bracketed() {
        // Σ (m+1)^{-1.1} style decay: (1/2)_m/(m+1)! · (m+1)^... use
        // ratio (m+0.9)/(m+2) with σ = 1.1: t_m = Γ(m+0.9)/Γ(m+2) · Γ(2)/Γ(0.9).
        // Remainder from 0 telescopes: Σ Γ(m+p)/Γ(m+p+σ) = Γ(p)/((σ-1)Γ(p+σ-1)).
        let model = RatioModel::real(1.0, &[0.9], &[2.0]);
        let first = Complex64::new(1.0, 0.0);
        let s = done(sum_certified(stream(&model, first), &model, MAX_TERMS, rel(1e-8)));
        // t_0 = 1 = Γ(0.9)/Γ(2) · C  ⇒  sum = C Γ(0.9)/(0.1 Γ(1.0)) with C = Γ(2)/Γ(0.9)
        let want = 1.0 / 0.1;
        assert!((s.value.re - want).abs() <= s.tail_bound, "{s:?}");
    }

    #[test]
    fn harmonic_series_is_proven_divergent() {
        let model = RatioModel::real(1.0, &[1.0], &[2.0]);
        let out = sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, MAX_TERMS, rel(1e-12));
        assert!(matches!(out, Outcome::Divergent { sign, .. } if sign > 0.0), "{out:?}");
    }

    #[test]
    fn alternating_harmonic_series() {
        let model = RatioModel::real(-1.0, &[1.0], &[2.0]);
        let s = done(sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, MAX_TERMS, rel(1e-6)));
        assert!((s.value.re - core::f64::consts::LN_2).abs() <= s.tail_bound, "{s:?}");
    }

    #[test]
    fn complex_argument_on_unit_circle() {
        // Σ i^m/(m+1)^2 = Catalan + i π²/48
        let model = RatioModel::new(
            Complex64::new(0.0, 1.0),
            alloc::vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
            alloc::vec![Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0)],
        );
        let s = done(sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, MAX_TERMS, rel(1e-4)));
        let want = Complex64::new(0.915_965_594_177_219, core::f64::consts::PI.powi(2) / 48.0);
        assert!((s.value - want).norm() <= s.tail_bound, "{s:?}");
    }

    #[test]
    fn terminating_stream_is_exact() {
        let model = RatioModel::real(1.0, &[1.0], &[3.0]);
        let terms = [1.0f64, 2.0, 3.0];
        let out = sum_certified(terms, &model, MAX_TERMS, |_| false);
        assert_eq!(out, Outcome::Done(SumValue { value: 6.0, terms_used: 3, tail_bound: 4.0 * f64::EPSILON * 6.0 }));
    }

    #[test]
    fn cap_is_reported() {
        let model = RatioModel::real(1.0, &[0.9], &[2.0]);
        let out = sum_certified(stream(&model, Complex64::new(1.0, 0.0)), &model, 1000, rel(1e-14));
        assert!(matches!(out, Outcome::Capped(_)));
    }
}
