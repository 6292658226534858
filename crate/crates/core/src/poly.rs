//! Dense real polynomials in ascending-coefficient order, just enough to
//! certify `P(m) >= 0` for every `m >= m0`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly(pub Vec<f64>);

impl Poly {
    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    /// `(m + s)^2` with `s` real.
    pub fn linear_sq(s: f64) -> Self {
        Poly(vec![s * s, 2.0 * s, 1.0])
    }

    /// `|m + s|^2 = (m + Re s)^2 + (Im s)^2`.
    pub fn modulus_sq(s: Complex64) -> Self {
        Poly(vec![s.re * s.re + s.im * s.im, 2.0 * s.re, 1.0])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.0.get(k).copied().unwrap_or(0.0)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly(self.0.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// Drop every coefficient above `degree`. Used where the leading terms
    /// cancel identically and only rounding noise would remain.
    pub fn truncated(mut self, degree: usize) -> Poly {
        self.0.truncate(degree + 1);
        self
    }

    #[cfg(test)]
    pub fn eval(&self, m: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * m + c)
    }

    /// Coefficients of `x -> P(x + s)`.
    pub fn shifted(&self, s: f64) -> Poly {
        let mut c = self.0.clone();
        let n = c.len();
        // Repeated synthetic division by (x - s).
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] += s * c[j + 1];
            }
        }
        Poly(c)
    }

    /// `true` when every coefficient of `P(m0 + x)` is nonnegative, which
    /// proves `P(m) >= 0` on `[m0, ∞)`.
    pub fn nonneg_from(&self, m0: f64) -> bool {
        self.shifted(m0).0.iter().all(|&c| c >= 0.0)
    }
}
