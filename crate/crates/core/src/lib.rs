#![no_std]
#![allow(clippy::excessive_precision)]

//! Numerics for the Clausen hypergeometric family
//! `3F2(a, b, c; b+1, c+1; z)` and the coefficient classes it is checked
//! against.
//!
//! The crate is `no_std` and needs only `alloc`. It provides:
//!
//! - [`special`]: log-gamma, gamma ratios and Pochhammer symbols.
//! - [`series`]: a summation engine that returns a certified bracket for the
//!   truncated remainder of a hypergeometric-type series.
//! - [`hyper`]: direct summation of `3F2` and the closed forms of its
//!   weighted sums at `z = 1`.
//! - [`classes`]: truncated power series with nonnegative coefficients, the
//!   coefficient criteria for the `M*(λ, α)` / `N*(λ, α)` classes, and grid
//!   probes of the defining inequalities on the unit disc.
//! - [`operator`]: Hadamard products and the Clausen convolution operator.
//! - [`verify`]: theorem predicates in printed and derived form, checked
//!   against brute-force coefficient sums over parameter grids.

extern crate alloc;

pub mod classes;
mod error;
pub mod hyper;
pub mod operator;
mod poly;
pub mod series;
pub mod special;
pub mod verify;

pub use crate::classes::{CoeffSeries, JanowskiParams, ProbeResult, ShapeParams};
pub use crate::error::{Error, Result};
pub use crate::hyper::{GeneralHyperParams, HyperParams};
pub use crate::series::SumValue;
pub use crate::special::PositiveReal;
pub use crate::verify::{SweepGrid, SweepPoint, SweepReport, Theorem, TheoremVerdict, Tolerances};

pub use num_complex::Complex64;
