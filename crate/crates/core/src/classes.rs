//! Truncated series `f(z) = z + Σ_{n=2}^{N} a_n z^n` with `a_n >= 0`, the
//! coefficient criteria for `M*(λ, α)`, `N*(λ, α)` and the `R^τ(A, B)`
//! coefficient bound, and grid probes of the defining inequalities.
//!
//! Every check is for the stored polynomial. The probes sample a polar grid
//! on `|z| <= radius`, so they can refute the defining inequality but never
//! prove it.

use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Denominators below this modulus are reported as [`Error::Singular`].
pub const SINGULAR_THRESHOLD: f64 = 1e-12;
pub const DEFAULT_PROBE_RADIUS: f64 = 0.99;
pub const DEFAULT_PROBE_GRID: usize = 300;

/// Coefficients `a_2, …, a_N` of `f(z) = z + Σ a_n z^n`; `a_1 = 1` is implicit.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CoeffSeries {
    coeffs: Vec<f64>,
}

impl CoeffSeries {
    /// `coeffs[k]` is `a_{k+2}`. Every entry must be finite and `>= 0`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if let Some((k, &x)) = coeffs.iter().enumerate().find(|(_, x)| !(x.is_finite() && **x >= 0.0)) {
            return Err(Error::pre(format!("coefficient a_{} = {x} must be finite and nonnegative", k + 2)));
        }
        Ok(CoeffSeries { coeffs })
    }

    /// `f(z) = z`.
    pub fn identity() -> Self {
        CoeffSeries::default()
    }

    /// `z + z^2 + … + z^N`, the truncation of `z/(1-z)`.
    pub fn geometric(degree: usize) -> Self {
        CoeffSeries { coeffs: alloc::vec![1.0; degree.saturating_sub(1)] }
    }

    /// `a_2, …, a_N`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// `N`, the highest stored power (1 for `f = z`).
    pub fn degree(&self) -> usize {
        self.coeffs.len() + 1
    }

    /// `a_n`; `a_1 = 1` and zero beyond the stored range.
    pub fn coeff(&self, n: usize) -> f64 {
        match n {
            0 => 0.0,
            1 => 1.0,
            _ => self.coeffs.get(n - 2).copied().unwrap_or(0.0),
        }
    }

    /// `(n, a_n)` for the stored `n >= 2`.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs.iter().enumerate().map(|(k, &a)| (k + 2, a))
    }

    /// Coefficients `n a_n` of `z f'(z)`.
    pub fn z_derivative(&self) -> CoeffSeries {
        CoeffSeries { coeffs: self.indexed().map(|(n, a)| n as f64 * a).collect() }
    }

    /// `(f(z)/z, f'(z), z f''(z))`.
    fn eval_reduced(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        let (mut f, mut d1, mut d2) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (n, a) in self.indexed().collect::<Vec<_>>().into_iter().rev() {
            let nf = n as f64;
            f = f * z + a;
            d1 = d1 * z + nf * a;
            d2 = d2 * z + nf * (nf - 1.0) * a;
        }
        (one + f * z, one + d1 * z, d2 * z)
    }
}

/// `(λ, α)` with `0 <= λ < 1` and `1 < α <= 4/3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeParams {
    lambda: f64,
    alpha: f64,
}

impl ShapeParams {
    pub fn new(lambda: f64, alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&lambda) {
            return Err(Error::pre(format!("lambda = {lambda} must lie in [0, 1)")));
        }
        if !(alpha > 1.0 && alpha <= 4.0 / 3.0) {
            return Err(Error::pre(format!("alpha = {alpha} must lie in (1, 4/3]")));
        }
        Ok(ShapeParams { lambda, alpha })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `n - (1 + nλ - λ)α`.
    ///
    /// Nonnegative for every `n >= 2` iff `α(1 + λ) <= 2`; larger `λ` makes
    /// the first brackets (or all of them once `αλ > 1`) negative.
    pub fn bracket(&self, n: usize) -> f64 {
        let n = n as f64;
        n - (1.0 + n * self.lambda - self.lambda) * self.alpha
    }

    /// The real root `α(1-λ)/(1-αλ)` of the bracket as a function of `n`,
    /// or `None` when `αλ >= 1`.
    pub fn bracket_root(&self) -> Option<f64> {
        let slope = 1.0 - self.alpha * self.lambda;
        (slope > 0.0).then(|| self.alpha * (1.0 - self.lambda) / slope)
    }
}

/// `(τ, A, B)` with `τ ≠ 0` and `-1 <= B <= A <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    tau: Complex64,
    a: f64,
    b: f64,
}

impl JanowskiParams {
    pub fn new(tau: Complex64, a: f64, b: f64) -> Result<Self> {
        if !(tau.re.is_finite() && tau.im.is_finite()) || tau == Complex64::new(0.0, 0.0) {
            return Err(Error::pre("tau must be finite and nonzero"));
        }
        if !(-1.0 <= b && b <= a && a <= 1.0) {
            return Err(Error::pre(format!("need -1 <= B <= A <= 1, got A = {a}, B = {b}")));
        }
        Ok(JanowskiParams { tau, a, b })
    }

    /// `τ = 1, A = β, B = -β`, for `0 < β <= 1`.
    pub fn padmanabhan(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::pre(format!("beta = {beta} must lie in (0, 1]")));
        }
        Self::new(Complex64::new(1.0, 0.0), beta, -beta)
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `(A - B)|τ|`, the scale of the coefficient bound.
    pub fn scale(&self) -> f64 {
        (self.a - self.b) * self.tau.norm()
    }

    /// `(A - B)|τ|/n`.
    pub fn coeff_bound(&self, n: usize) -> f64 {
        self.scale() / n as f64
    }
}

/// Largest sampled value of a functional and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeResult {
    pub sup_value: f64,
    pub argmax_z: Complex64,
    pub grid_size: usize,
    pub radius: f64,
}

/// `(α - 1) - Σ [n - (1 + nλ - λ)α] a_n`; the truncated series lies in
/// `M*(λ, α)` iff this is `>= 0`.
pub fn m_star_deficit(f: &CoeffSeries, s: &ShapeParams) -> f64 {
    let sum: f64 = f.indexed().map(|(n, a)| s.bracket(n) * a).sum();
    (s.alpha - 1.0) - sum
}

/// `(α - 1) - Σ n [n - (1 + nλ - λ)α] a_n`; membership in `N*(λ, α)` iff `>= 0`.
pub fn n_star_deficit(f: &CoeffSeries, s: &ShapeParams) -> f64 {
    let sum: f64 = f.indexed().map(|(n, a)| s.bracket(n) * (n as f64 * a)).sum();
    (s.alpha - 1.0) - sum
}

/// `a_n <= (A - B)|τ|/n` for every stored `n`.
///
/// Members of `R^τ(A, B)` satisfy this bound; passing it does not imply
/// membership.
pub fn rtau_bound_check(f: &CoeffSeries, j: &JanowskiParams) -> bool {
    f.indexed().all(|(n, a)| a <= j.coeff_bound(n))
}

fn check_grid(radius: f64, grid_size: usize) -> Result<()> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::pre(format!("probe radius {radius} must lie in (0, 1)")));
    }
    if grid_size == 0 {
        return Err(Error::pre("probe grid size must be positive"));
    }
    Ok(())
}

/// Max of `value(z)` over radii `radius·i/g` (`i = 1..=g`) and angles
/// `2πk/g` (`k = 0..g`).
fn polar_sup<F>(radius: f64, grid_size: usize, mut value: F) -> Result<ProbeResult>
where
    F: FnMut(Complex64) -> Result<f64>,
{
    check_grid(radius, grid_size)?;
    let g = grid_size as f64;
    let mut best = ProbeResult { sup_value: f64::NEG_INFINITY, argmax_z: Complex64::new(0.0, 0.0), grid_size, radius };
    for i in 1..=grid_size {
        let r = radius * i as f64 / g;
        for k in 0..grid_size {
            let z = Complex64::from_polar(r, core::f64::consts::TAU * k as f64 / g);
            let v = value(z)?;
            if v > best.sup_value {
                best.sup_value = v;
                best.argmax_z = z;
            }
        }
    }
    Ok(best)
}

fn quotient(num: Complex64, den: Complex64, z: Complex64) -> Result<Complex64> {
    if den.norm() < SINGULAR_THRESHOLD {
        return Err(Error::Singular { z });
    }
    Ok(num / den)
}

/// Sup of `Re(z f'(z) / ((1-λ) f(z) + λ z f'(z)))` over the polar grid.
///
/// The common factor `z` is cancelled before evaluating.
pub fn probe_m(f: &CoeffSeries, s: &ShapeParams, radius: f64, grid_size: usize) -> Result<ProbeResult> {
    let lam = s.lambda;
    polar_sup(radius, grid_size, |z| {
        let (fz, d1, _) = f.eval_reduced(z);
        Ok(quotient(d1, fz * (1.0 - lam) + d1 * lam, z)?.re)
    })
}

/// Sup of `Re((f'(z) + z f''(z)) / (f'(z) + λ z f''(z)))` over the polar grid.
pub fn probe_n(f: &CoeffSeries, s: &ShapeParams, radius: f64, grid_size: usize) -> Result<ProbeResult> {
    let lam = s.lambda;
    polar_sup(radius, grid_size, |z| {
        let (_, d1, d2) = f.eval_reduced(z);
        Ok(quotient(d1 + d2, d1 + d2 * lam, z)?.re)
    })
}

/// Sup of `|(f'(z) - 1) / ((A - B)τ - B(f'(z) - 1))|` over the polar grid.
/// Values below 1 are consistent with membership in `R^τ(A, B)`.
pub fn probe_rtau(f: &CoeffSeries, j: &JanowskiParams, radius: f64, grid_size: usize) -> Result<f64> {
    let lead = j.tau * (j.a - j.b);
    Ok(polar_sup(radius, grid_size, |z| {
        let (_, d1, _) = f.eval_reduced(z);
        let w = d1 - 1.0;
        Ok(quotient(w, lead - w * j.b, z)?.norm())
    })?
    .sup_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn series(c: &[f64]) -> CoeffSeries {
        CoeffSeries::new(c.to_vec()).unwrap()
    }

    fn shape(l: f64, a: f64) -> ShapeParams {
        ShapeParams::new(l, a).unwrap()
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(CoeffSeries::new(vec![0.1, -0.1]).is_err());
        assert!(CoeffSeries::new(vec![f64::NAN]).is_err());
        assert!(ShapeParams::new(1.0, 1.2).is_err());
        assert!(ShapeParams::new(-0.1, 1.2).is_err());
        assert!(ShapeParams::new(0.0, 1.0).is_err());
        assert!(ShapeParams::new(0.0, 1.34).is_err());
        assert!(ShapeParams::new(0.0, 4.0 / 3.0).is_ok());
        assert!(JanowskiParams::new(Complex64::new(0.0, 0.0), 1.0, 0.0).is_err());
        assert!(JanowskiParams::new(Complex64::new(1.0, 0.0), 0.0, 0.5).is_err());
        assert!(JanowskiParams::new(Complex64::new(1.0, 0.0), 1.0, -1.5).is_err());
        assert!(JanowskiParams::padmanabhan(0.0).is_err());
    }

    #[test]
    fn series_accessors() {
        let f = series(&[0.5, 0.25]);
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(1), 1.0);
        assert_eq!(f.coeff(3), 0.25);
        assert_eq!(f.coeff(7), 0.0);
        assert_eq!(f.z_derivative().coeffs(), &[1.0, 0.75]);
        assert_eq!(CoeffSeries::geometric(4).coeffs(), &[1.0, 1.0, 1.0]);
        assert_eq!(CoeffSeries::identity().degree(), 1);
    }

    #[test]
    fn deficits_of_identity() {
        let s = shape(0.25, 1.2);
        let f = CoeffSeries::identity();
        assert_eq!(m_star_deficit(&f, &s), 1.2 - 1.0);
        assert_eq!(n_star_deficit(&f, &s), 1.2 - 1.0);
    }

    #[test]
    fn deficit_zero_crossings() {
        let s = shape(0.0, 4.0 / 3.0);
        assert!(m_star_deficit(&series(&[0.5]), &s).abs() <= 1e-15);
        assert!(n_star_deficit(&series(&[0.25]), &s).abs() <= 1e-15);
        let a2 = 0.3;
        let want = 1.0 / 3.0 - (2.0 / 3.0) * a2;
        assert!((m_star_deficit(&series(&[a2]), &s) - want).abs() <= 1e-15);
        let want = 1.0 / 3.0 - (4.0 / 3.0) * a2;
        assert!((n_star_deficit(&series(&[a2]), &s) - want).abs() <= 1e-15);
    }

    #[test]
    fn deficit_with_lambda() {
        // bracket(2) = 2 - 1.5 * 1.25 = 0.125
        let d = m_star_deficit(&series(&[0.1]), &shape(0.5, 1.25));
        assert!((d - (0.25 - 0.0125)).abs() <= 1e-16);
    }

    #[test]
    fn bracket_sign_depends_on_lambda() {
        assert!(shape(0.5, 4.0 / 3.0).bracket(2).abs() < 1e-15);
        assert!(shape(0.7, 4.0 / 3.0).bracket(2) < 0.0);
        assert!(shape(0.8, 4.0 / 3.0).bracket(50) < 0.0);
        assert_eq!(shape(0.8, 4.0 / 3.0).bracket_root(), None);
        let s = shape(0.25, 1.2);
        let r = s.bracket_root().unwrap();
        assert!(((1.0 - 1.2 * 0.25) * r - 1.2 * 0.75).abs() < 1e-15);
    }

    #[test]
    fn rtau_bound_examples() {
        let one = Complex64::new(1.0, 0.0);
        assert!(rtau_bound_check(&CoeffSeries::identity(), &JanowskiParams::new(one, 1.0, -1.0).unwrap()));
        assert!(!rtau_bound_check(&series(&[1.0001]), &JanowskiParams::new(one, 1.0, -1.0).unwrap()));
        assert!(rtau_bound_check(&series(&[1.0]), &JanowskiParams::new(one, 1.0, -1.0).unwrap()));
        let j = JanowskiParams::new(Complex64::new(0.5, 0.0), 0.5, 0.0).unwrap();
        assert!(rtau_bound_check(&series(&[0.0, 0.05]), &j));
        assert!(!rtau_bound_check(&series(&[0.0, 0.09]), &j));
    }

    #[test]
    fn probes_of_identity() {
        let f = CoeffSeries::identity();
        for lam in [0.0, 0.3, 0.9] {
            let s = shape(lam, 1.2);
            let m = probe_m(&f, &s, 0.99, 40).unwrap();
            let n = probe_n(&f, &s, 0.99, 40).unwrap();
            assert!((m.sup_value - 1.0).abs() < 1e-15);
            assert!((n.sup_value - 1.0).abs() < 1e-15);
            assert!(m.argmax_z.norm() <= 0.99);
        }
        let j = JanowskiParams::new(Complex64::new(0.3, 0.4), 1.0, 0.0).unwrap();
        assert_eq!(probe_rtau(&f, &j, 0.99, 40).unwrap(), 0.0);
    }

    #[test]
    fn probe_m_respects_deficit() {
        let s = shape(0.0, 4.0 / 3.0);
        let f = series(&[0.4]);
        assert!(m_star_deficit(&f, &s) >= 0.0);
        let p = probe_m(&f, &s, 0.99, 300).unwrap();
        // z f'/f for z + 0.4 z^2 peaks on the positive axis
        let r: f64 = 0.99;
        let want = (1.0 + 0.8 * r) / (1.0 + 0.4 * r);
        assert!((p.sup_value - want).abs() < 1e-12 && p.sup_value < 4.0 / 3.0);
        assert_eq!(p.grid_size, 300);
        assert_eq!(p.radius, 0.99);
    }

    #[test]
    fn probe_m_exceeds_alpha_past_the_criterion() {
        let s = shape(0.0, 4.0 / 3.0);
        let f = series(&[0.6]);
        assert!(m_star_deficit(&f, &s) < 0.0);
        let p = probe_m(&f, &s, 0.99, 300).unwrap();
        let r: f64 = 0.99;
        assert!((p.sup_value - (1.0 + 1.2 * r) / (1.0 + 0.6 * r)).abs() < 1e-12);
    }

    #[test]
    fn probe_n_reduces_to_probe_m_of_z_derivative() {
        let s = shape(0.0, 1.25);
        for f in [series(&[0.2]), series(&[0.1, 0.05, 0.01])] {
            let n = probe_n(&f, &s, 0.99, 120).unwrap();
            let m = probe_m(&f.z_derivative(), &s, 0.99, 120).unwrap();
            assert!((n.sup_value - m.sup_value).abs() <= 1e-10);
        }
    }

    #[test]
    fn probe_rtau_matches_padmanabhan_functional() {
        let f = series(&[0.1]);
        let beta = 0.5;
        let j = JanowskiParams::padmanabhan(beta).unwrap();
        let got = probe_rtau(&f, &j, 0.99, 100).unwrap();
        let want = polar_sup(0.99, 100, |z| {
            let (_, d1, _) = f.eval_reduced(z);
            Ok(((d1 - 1.0) / (d1 + 1.0)).norm() / beta)
        })
        .unwrap()
        .sup_value;
        assert!((got - want).abs() <= 1e-14);
        // |0.2 z| / (β |2 + 0.2 z|), largest at z = -0.99
        assert!((got - 0.198 / (0.5 * 1.802)).abs() <= 1e-14);
    }

    #[test]
    fn probe_rtau_value() {
        let j = JanowskiParams::new(Complex64::new(1.0, 0.0), 1.0, -1.0).unwrap();
        let got = probe_rtau(&series(&[0.3]), &j, 0.99, 300).unwrap();
        // |0.6 z| / |2 + 0.6 z| peaks at z = -0.99
        assert!((got - 0.594 / 1.406).abs() <= 1e-14);
    }

    #[test]
    fn singular_denominators_are_reported() {
        // A = B puts the denominator at -B(f' - 1), zero for f = z
        let j = JanowskiParams::new(Complex64::new(1.0, 0.0), 0.5, 0.5).unwrap();
        assert!(matches!(probe_rtau(&CoeffSeries::identity(), &j, 0.5, 4), Err(Error::Singular { .. })));
        // f(z)/z = 1 + 2z vanishes at z = -1/2, on the sampled ring
        let f = series(&[2.0]);
        assert!(matches!(probe_m(&f, &shape(0.0, 1.2), 0.5, 4), Err(Error::Singular { .. })));
    }

    #[test]
    fn probe_grid_preconditions() {
        let f = CoeffSeries::identity();
        let s = shape(0.0, 1.2);
        assert!(probe_m(&f, &s, 1.0, 10).is_err());
        assert!(probe_m(&f, &s, 0.0, 10).is_err());
        assert!(probe_n(&f, &s, 0.5, 0).is_err());
    }
}
