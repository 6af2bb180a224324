use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gamma::digamma;
use super::zeta::{power_tail, riemann_zeta};
use crate::error::{Error, Result};
use crate::quad;
use crate::types::{
    c, ensure_finite, ensure_finite_real, ComplexValue, QuadControl, SumControl, EULER_GAMMA, PI,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OddZetaVariant {
    /// Σ ζ(2k+1) z^{2k} = −½[ψ(1+z) + ψ(1−z)] − γ, |z| < 1.
    Plain,
    /// Σ (−1)^{k−1} ζ(2k+1) z^{2k} = ½[ψ(1+iz) + ψ(1−iz)] + γ, |z| < 1.
    Alternating,
    /// Σ (−1)^{k−1} ζ(2k+1) x^{2k} = γ + Re ψ(1+ix), x real.
    RealPart,
}

/// Both sides of a ζ(2k+1) generating-series identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaOddSeries {
    /// digamma form (returned value)
    pub value: ComplexValue,
    /// truncated series
    pub series: ComplexValue,
    pub series_err: f64,
    pub discrepancy: f64,
    pub terms: usize,
}

fn power_series(
    z: Complex64,
    alternating: bool,
    ctl: &SumControl,
) -> Result<(Complex64, f64, usize)> {
    let z2 = z * z;
    let q = z2.norm();
    let mut pow = z2;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=ctl.max_terms {
        let sign = if alternating && k % 2 == 0 { -1.0 } else { 1.0 };
        let t = sign * riemann_zeta((2 * k + 1) as f64)? * pow;
        acc += t;
        // ζ(2k+1) decreases to 1, so the tail is below |t| q/(1−q)
        let err = t.norm() * q / (1.0 - q);
        if err <= ctl.rel_tol * acc.norm() || t.norm() == 0.0 {
            return Ok((acc, err, k));
        }
        pow *= z2;
    }
    Err(Error::NonConvergence {
        terms: ctl.max_terms,
        estimate: f64::NAN,
        target: ctl.rel_tol,
    })
}

/// Σ_{n≥1} x²/(n(n² + x²)), the Dirichlet-resummed left side for |x| ≥ 1.
fn resummed(x: f64) -> Result<(f64, f64, usize)> {
    let n = (2.0 * x.abs()).ceil() as usize + 32;
    let x2 = x * x;
    let head: f64 = (1..=n)
        .map(|k| {
            let k = k as f64;
            x2 / (k * (k * k + x2))
        })
        .sum();
    let tail = x2 * power_tail(n, 3.0, 1.0, x)?;
    Ok((head + tail, 1e-16 * (head + tail).abs() * n as f64, n))
}

/// Evaluate a ζ(2k+1) generating series both by truncation and in digamma
/// form; returns the digamma form with the pair discrepancy attached.
pub fn zeta_odd_series(
    z: ComplexValue,
    variant: OddZetaVariant,
    ctl: &SumControl,
) -> Result<ZetaOddSeries> {
    ensure_finite(z, "zeta_odd_series")?;
    ctl.validate()?;
    let i = Complex64::i();
    let one = c(1.0, 0.0);
    let (value, (series, series_err, terms)) = match variant {
        OddZetaVariant::Plain => {
            if z.norm() >= 1.0 {
                return Err(Error::domain(format!(
                    "plain ζ(2k+1) series requires |z| < 1, got |z| = {}",
                    z.norm()
                )));
            }
            let v = -0.5 * (digamma(one + z)? + digamma(one - z)?) - EULER_GAMMA;
            (v, power_series(z, false, ctl)?)
        }
        OddZetaVariant::Alternating => {
            if z.norm() >= 1.0 {
                return Err(Error::domain(format!(
                    "alternating ζ(2k+1) series requires |z| < 1, got |z| = {}",
                    z.norm()
                )));
            }
            let v = 0.5 * (digamma(one + i * z)? + digamma(one - i * z)?) + EULER_GAMMA;
            (v, power_series(z, true, ctl)?)
        }
        OddZetaVariant::RealPart => {
            if z.im != 0.0 {
                return Err(Error::domain("real-part ζ(2k+1) series requires real z"));
            }
            let x = z.re;
            let v = c(EULER_GAMMA + digamma(c(1.0, x))?.re, 0.0);
            let lhs = if x.abs() < 1.0 {
                power_series(z, true, ctl)?
            } else {
                let (s, e, n) = resummed(x)?;
                (c(s, 0.0), e, n)
            };
            (v, lhs)
        }
    };
    Ok(ZetaOddSeries {
        value,
        series,
        series_err,
        discrepancy: (value - series).norm(),
        terms,
    })
}

/// −γ + 2∫₀^∞ e^{−u} sin²(tu/(2π))/sinh(u) du, which equals Re ψ(1 + it/(2π)).
pub fn digamma_realpart_integral(t: f64, ctl: &QuadControl) -> Result<f64> {
    ensure_finite_real(t, "digamma_realpart_integral")?;
    let a = t / (2.0 * PI);
    // e^{−u}/sinh u = 2/(e^{2u} − 1); the integrand is below 2e^{−2u}
    let f = |u: f64| {
        let s = (a * u).sin();
        2.0 * s * s / (2.0 * u).exp_m1()
    };
    let upper = 40.0;
    let r = quad::integrate(|u| c(f(u), 0.0), 0.0, upper, ctl)?;
    Ok(-EULER_GAMMA + 2.0 * r.value.re)
}
