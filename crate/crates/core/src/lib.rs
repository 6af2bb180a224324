//! Eisenstein series, Hilbert–Eisenstein series, the complete Omega function
//! and conjugate Bernoulli numbers, each computed by several independent
//! representations so that the identities linking them can be checked
//! numerically.
//!
//! Module map:
//!
//! - [`numkern`]: Gamma, digamma/polygamma, ζ, η, λ, Bernoulli numbers and
//!   polynomials, Pochhammer symbol.
//! - [`eisenstein`]: ε_r(z) by symmetric summation, trigonometric closed
//!   forms, polygamma combination and a Laplace-type integral.
//! - [`hilbert_eisenstein`]: 𝔥_r(z) and the Mathieu series.
//! - [`omega`]: Ω(z) by quadrature, digamma form, partial fractions and two
//!   Taylor expansions, plus moments, bounds and the first-order ODE.
//! - [`conj_bernoulli`]: conjugate Bernoulli numbers/functions, fractional
//!   Bernoulli functions and ζ-value representations.
//!
//! [`accel`] and [`quad`] hold the summation and quadrature machinery shared
//! by all of the above.

pub mod accel;
pub mod conj_bernoulli;
pub mod eisenstein;
mod error;
pub mod hilbert_eisenstein;
pub mod numkern;
pub mod omega;
pub mod quad;
mod types;

pub use error::{Error, Result};
pub use types::{
    c, ComplexValue, Evaluation, QuadControl, Route, SumControl, EULER_GAMMA, LN_2, PI,
};
