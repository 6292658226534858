//! Hadamard products of normalized series and the operator
//! `I(f)(z) = z 3F2(a, b, c; b+1, c+1; z) * f(z) = z + Σ A_n z^n`, with
//! `A_n = (|a|)_{n-1}(b)_{n-1}(c)_{n-1} / ((b+1)_{n-1}(c+1)_{n-1}(1)_{n-1}) · a_n`.
//!
//! Coefficient sequences here always start at `a_2`; series of different
//! length are truncated to the shorter one.

use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::classes::CoeffSeries;
use crate::error::{Error, Result};
use crate::hyper::HyperParams;

/// Coefficient-wise product, truncated to the shorter input.
pub fn hadamard<T>(f: &[T], g: &[T]) -> Vec<T>
where
    T: Clone + Mul<Output = T>,
{
    f.iter().zip(g).map(|(x, y)| x.clone() * y.clone()).collect()
}

/// `(f * g)(z) = z + Σ a_n b_n z^n`.
pub fn convolve(f: &CoeffSeries, g: &CoeffSeries) -> CoeffSeries {
    CoeffSeries::new(hadamard(f.coeffs(), g.coeffs())).expect("products of nonnegative coefficients are nonnegative")
}

/// Multipliers for `n = 2..=degree` built from the running product
/// `m_{n+1} = m_n (x + n - 1)(b + n - 1)(c + n - 1) / ((b + n)(c + n) n)`,
/// `m_1 = 1`, in any field-like scalar type.
pub fn multiplier_sequence<T>(x: T, b: T, c: T, degree: usize) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let mut out = Vec::with_capacity(degree.saturating_sub(1));
    let mut m = T::one();
    let mut k = T::zero();
    for _ in 2..=degree {
        // k = n - 2 here, so the factor takes the step from n - 1 to n
        let num = (x.clone() + k.clone()) * (b.clone() + k.clone()) * (c.clone() + k.clone());
        let kp1 = k.clone() + T::one();
        let den = (b.clone() + kp1.clone()) * (c.clone() + kp1.clone()) * kp1.clone();
        m = m * num / den;
        out.push(m.clone());
        k = kp1;
    }
    out
}

/// `(|a|)_{n-1}(b)_{n-1}(c)_{n-1} / ((b+1)_{n-1}(c+1)_{n-1}(1)_{n-1})`.
pub fn clausen_multiplier(p: &HyperParams, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::pre(format!("multiplier index n = {n} must be at least 2")));
    }
    let m = multiplier_sequence(p.a_abs(), p.b(), p.c(), n).pop().unwrap_or(1.0);
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::Overflow(format!("multiplier at n = {n} is not finite")))
    }
}

/// Same multipliers with the complex `(a)_{n-1}` kept in the numerator.
pub fn complex_multipliers(p: &HyperParams, degree: usize) -> Vec<Complex64> {
    let r = |x: f64| Complex64::new(x, 0.0);
    multiplier_sequence(p.a(), r(p.b()), r(p.c()), degree)
}

/// The multipliers `A_n / a_n` for `n = 2..=N` of a fixed operator.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorCoeffs {
    mods: Vec<f64>,
    params: HyperParams,
}

impl OperatorCoeffs {
    pub fn new(p: &HyperParams, degree: usize) -> Self {
        OperatorCoeffs { mods: multiplier_sequence(p.a_abs(), p.b(), p.c(), degree), params: *p }
    }

    /// Multipliers for `n = 2, 3, …`.
    pub fn mods(&self) -> &[f64] {
        &self.mods
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    /// `z + Σ_{n=2}^{N} multiplier_n z^n`, the truncation of `z 3F2(|a|, b, c; b+1, c+1; z)`.
    pub fn as_series(&self) -> CoeffSeries {
        CoeffSeries::new(self.mods.clone()).expect("multipliers are nonnegative")
    }
}

/// `I(f)`, with coefficients `A_n = multiplier_n · a_n`.
pub fn apply_operator(p: &HyperParams, f: &CoeffSeries) -> CoeffSeries {
    let ops = OperatorCoeffs::new(p, f.degree());
    convolve(&ops.as_series(), f)
}
