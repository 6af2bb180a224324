//! Kernel special functions: Γ, ψ, ψ_r, ζ, η, λ, Hurwitz ζ, Bernoulli
//! numbers/polynomials and the Pochhammer symbol.

mod bernoulli;
mod gamma;
mod series;
mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_number_exact, bernoulli_poly, BERNOULLI_CACHE};
pub use gamma::{cot_pi, csc2_pi, digamma, gamma, polygamma, sin_pi};
pub use series::{digamma_realpart_integral, zeta_odd_series, OddZetaVariant, ZetaOddSeries};
pub use zeta::{dirichlet_eta, dirichlet_lambda, hurwitz_zeta, riemann_zeta, riemann_zeta_series};

pub(crate) use zeta::power_tail;

use crate::error::{Error, Result};
use crate::types::ComplexValue;
use num_complex::Complex64;

/// Arguments closer than this to a pole are rejected.
pub const POLE_GUARD: f64 = 1e-12;

pub(crate) fn check_nonpositive_pole(z: ComplexValue, what: &'static str) -> Result<()> {
    let n = z.re.round();
    if n <= 0.0 {
        let d = (z - n).norm();
        if d < POLE_GUARD {
            return Err(Error::Pole { what, distance: d });
        }
    }
    Ok(())
}

/// n! as a double (exact through 22!).
pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Pochhammer symbol (ρ)_σ = ρ(ρ+1)…(ρ+σ−1), with (ρ)_0 = 1.
pub fn pochhammer(rho: ComplexValue, sigma: u32) -> ComplexValue {
    (0..sigma).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (rho + k as f64))
}
