//! Eisenstein series ε_r(z) = Σ_{k∈ℤ} (z+k)^{−r}, with symmetric
//! (Eisenstein) summation for r = 1.
//!
//! Four independent routes are implemented: symmetric summation with
//! Richardson extrapolation, the trigonometric closed forms for r ≤ 3, the
//! polygamma combination and a Laplace-type integral over (0, ∞).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel::{self, Neumaier};
use crate::error::{Error, Result};
use crate::numkern::{cot_pi, csc2_pi, factorial, gamma, polygamma, POLE_GUARD};
use crate::quad;
use crate::types::{
    c, ensure_finite, ComplexValue, Evaluation, QuadControl, Route, SumControl, PI,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EisensteinRoute {
    Direct,
    Closed,
    Polygamma,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralForm {
    /// e^{−ζt} + (−1)^r e^{ζt}
    Exponential,
    /// 2cosh(ζt) for even r, −2sinh(ζt) for odd r
    Hyperbolic,
}

/// Rejects r = 0, non-finite z and z within the pole guard of ℤ.
fn check(r: u32, z: ComplexValue) -> Result<()> {
    ensure_finite(z, "eisenstein")?;
    if r == 0 {
        return Err(Error::domain("eisenstein order must be >= 1"));
    }
    let d = (z - z.re.round()).norm();
    if d < POLE_GUARD {
        return Err(Error::Pole {
            what: "eisenstein",
            distance: d,
        });
    }
    Ok(())
}

fn plain_partial_sums(r: u32, z: Complex64, ctl: &SumControl) -> Result<Evaluation> {
    let e = -(r as i32);
    let mut acc = Neumaier::new();
    acc.add(z.powi(e));
    let mut n = 0usize;
    let mut block = 64usize;
    loop {
        let hi = (n + block).min(ctl.max_terms);
        for k in n + 1..=hi {
            let kf = k as f64;
            if r == 1 {
                acc.add(2.0 * z / (z * z - kf * kf));
            } else {
                acc.add((z + kf).powi(e) + (z - kf).powi(e));
            }
        }
        n = hi;
        let nf = n as f64;
        // tail of the paired terms
        let tail = if r == 1 {
            2.0 * z.norm() / nf
        } else {
            2.0 / ((r - 1) as f64 * (nf - z.norm()).max(1.0).powi(r as i32 - 1))
        };
        let v = acc.value();
        if tail <= ctl.rel_tol * v.norm().max(z.norm().powi(e)) {
            return Ok(Evaluation {
                value: v,
                err_estimate: tail,
                terms_used: 2 * n + 1,
                route: Route::Direct,
            });
        }
        if n >= ctl.max_terms {
            return Err(Error::NonConvergence {
                terms: 2 * n + 1,
                estimate: tail,
                target: ctl.rel_tol,
            });
        }
        block *= 2;
    }
}

/// ε_r(z) by symmetric partial sums; Richardson-extrapolated when
/// `ctl.accelerate` is set.
pub fn eisenstein_direct(r: u32, z: ComplexValue, ctl: &SumControl) -> Result<Evaluation> {
    check(r, z)?;
    ctl.validate()?;
    if !ctl.accelerate {
        return plain_partial_sums(r, z, ctl);
    }
    let e = -(r as i32);
    let term = |k: i64| (z + k as f64).powi(e);
    let mut n0 = (8.0 * z.norm()).ceil().max(16.0) as usize;
    let levels = 10;
    loop {
        let s = accel::richardson_symmetric(n0, levels, term);
        let scale = s.value.norm().max(z.norm().powi(e)).max(1.0);
        if s.err <= ctl.rel_tol * scale {
            return Ok(Evaluation {
                value: s.value,
                err_estimate: s.err,
                terms_used: s.terms,
                route: Route::Direct,
            });
        }
        n0 *= 4;
        if (n0 << (levels - 1)) * 2 > ctl.max_terms {
            return Err(Error::NonConvergence {
                terms: s.terms,
                estimate: s.err / scale,
                target: ctl.rel_tol,
            });
        }
    }
}

/// ε_1 = π cot πz, ε_2 = π²/sin²πz, ε_3 = π³ cot πz / sin²πz.
pub fn eisenstein_closed(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    if !(1..=3).contains(&r) {
        return Err(Error::UnsupportedOrder(r));
    }
    check(r, z)?;
    Ok(match r {
        1 => PI * cot_pi(z),
        2 => PI * PI * csc2_pi(z),
        _ => PI * PI * PI * cot_pi(z) * csc2_pi(z),
    })
}

/// ε_r(z) = [ψ_{r−1}(1−z) + (−1)^r ψ_{r−1}(z)] / Γ(r).
pub fn eisenstein_polygamma(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check(r, z)?;
    let a = polygamma(r - 1, 1.0 - z)?;
    let b = polygamma(r - 1, z)?;
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    Ok((a + sign * b) / factorial(r - 1))
}

/// ∫₁^∞ t^n e^{−at} dt = e^{−a} n! Σ_{j=0}^{n} 1/(j! a^{n−j+1}), Re a > 0.
fn exp_moment_tail(n: u32, a: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        acc += 1.0 / (factorial(j) * a.powi((n - j + 1) as i32));
    }
    (-a).exp() * factorial(n) * acc
}

/// Upper cut-off for the remainder integrand, which decays like t^{r−1}e^{−t}.
fn cutoff(r: u32) -> f64 {
    45.0 + 7.0 * r as f64
}

/// ε_r(z) = ζ^{−r} + (1/Γ(r)) ∫₀^∞ t^{r−1}/(e^t−1) (e^{−ζt} + (−1)^r e^{ζt}) dt
/// with ζ = z − ⌊Re z⌋.
///
/// The forms differ on [0, 1] only. On [1, ∞) the slowly decaying part
/// (−1)^r t^{r−1} e^{−(1−ζ)t} is integrated in closed form; the remainder
/// decays like e^{−t} and is cut at 45 + 7r.
pub fn eisenstein_integral(
    r: u32,
    z: ComplexValue,
    ctl: &QuadControl,
    form: IntegralForm,
) -> Result<Evaluation> {
    ensure_finite(z, "eisenstein_integral")?;
    let zeta = Complex64::new(z.re - z.re.floor(), z.im);
    if zeta.re == 0.0 && zeta.im == 0.0 {
        return Err(Error::Strip(format!("{z}")));
    }
    check(r, z)?;
    ctl.validate()?;
    let n = r as i32 - 1;
    let odd = r % 2 == 1;
    let sign = if odd { -1.0 } else { 1.0 };
    let kernel = |t: f64| -> Complex64 {
        match form {
            IntegralForm::Exponential if !(odd && t < 1e-3) => {
                (-zeta * t).exp() + sign * (zeta * t).exp()
            }
            _ => {
                if odd {
                    -2.0 * (zeta * t).sinh()
                } else {
                    2.0 * (zeta * t).cosh()
                }
            }
        }
    };
    let head = quad::integrate(|t| kernel(t) * (t.powi(n) / t.exp_m1()), 0.0, 1.0, ctl)?;
    // both forms coincide on [1, ∞); the remainder after removing
    // (−1)^r t^{r−1} e^{−(1−ζ)t} uses 1/(e^t−1) − e^{−t} = e^{−t}/(e^t−1)
    let rest = |t: f64| -> Complex64 {
        (t.powi(n) / t.exp_m1()) * ((-zeta * t).exp() + sign * ((zeta - 1.0) * t).exp())
    };
    let tail = quad::integrate(rest, 1.0, cutoff(r), ctl)?;
    let closed_tail = sign * exp_moment_tail(r - 1, 1.0 - zeta);
    let g = gamma(c(r as f64, 0.0))?.re;
    let value = zeta.powi(-(r as i32)) + (head.value + tail.value + closed_tail) / g;
    Ok(Evaluation {
        value,
        err_estimate: (head.err + tail.err) / g,
        terms_used: head.evals + tail.evals,
        route: match form {
            IntegralForm::Exponential => Route::Integral,
            IntegralForm::Hyperbolic => Route::IntegralHyperbolic,
        },
    })
}

/// ε_r(z) by the best-conditioned route: closed form for r ≤ 3, otherwise
/// the polygamma combination.
pub fn eisenstein(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    if r <= 3 {
        eisenstein_closed(r, z)
    } else {
        eisenstein_polygamma(r, z)
    }
}

/// Dispatch on an explicit route.
pub fn eisenstein_route(
    r: u32,
    z: ComplexValue,
    route: EisensteinRoute,
    sum: &SumControl,
    quad: &QuadControl,
) -> Result<Evaluation> {
    match route {
        EisensteinRoute::Direct => eisenstein_direct(r, z, sum),
        EisensteinRoute::Closed => Ok(Evaluation::exact(eisenstein_closed(r, z)?, Route::Closed)),
        EisensteinRoute::Polygamma => Ok(Evaluation::exact(
            eisenstein_polygamma(r, z)?,
            Route::Polygamma,
        )),
        EisensteinRoute::Integral => eisenstein_integral(r, z, quad, IntegralForm::Exponential),
    }
}

/// ε_{r+2}(z) − ε_{r+1}(z)·ε_r(z); vanishes identically only for r = 1.
pub fn product_identity_residual(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check(r, z)?;
    Ok(eisenstein(r + 2, z)? - eisenstein(r + 1, z)? * eisenstein(r, z)?)
}
