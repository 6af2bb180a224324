//! The complete Omega function Ω(z) = 2∫₀^{1/2} sinh(zu) cot(πu) du.
//!
//! Ω is entire and odd. Relation to the Hilbert–Eisenstein series:
//! Ω(z) = −(i/π) sinh(z/2) 𝔥₁(z/2π).

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel;
use crate::error::{Error, Result};
use crate::hilbert_eisenstein::mathieu_e;
use crate::numkern::{bernoulli_number, digamma, dirichlet_eta, factorial, riemann_zeta};
use crate::quad;
use crate::types::{
    c, ensure_finite, ensure_finite_real, ComplexValue, Evaluation, QuadControl, Route, SumControl,
    LN_2, PI,
};

const TWO_PI: f64 = 2.0 * PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaRoute {
    Quadrature,
    Digamma,
    PartialFraction,
    TaylorMoments,
    TaylorEta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaylorVariant {
    /// Σ Ω_{2k+1} z^{2k+1}/(2k+1)!
    Moments,
    /// Cauchy product of sinh(z/2) with the η-series of 𝔥₁(z/2π)
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentRoute {
    /// finite η-sum
    Closed,
    Quadrature,
    /// Bernoulli-number series
    Series,
}

/// Odd moments Ω₁, Ω₃, …, Ω_{2k_max+1}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaMomentTable {
    pub k_max: usize,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaEnvelope {
    /// (1/2π) log(ζ(3)/3)
    pub lo_coef: f64,
    /// (1/2π) log(3/ζ(3))
    pub hi_coef: f64,
    /// Ω(x)/e^{x/2}
    pub ratio: f64,
}

/// Which forcing term to use in the first-order ODE for Ω.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OdeForm {
    /// Ω′ = ½coth(x/2)Ω − (x/(2π³)) sinh(x/2) S̃₂(x/2π), the form obtained by
    /// differentiating Ω(2πx) = −(i/π) sinh(πx) 𝔥₁(x)
    Derived,
    /// Ω′ = ½coth(x/2)Ω − (x/π³) sinh(x/2) S̃₂(x); does not hold
    AsPrinted,
}

/// u cot(πu) = (1/π) Σ (−1)^n B_{2n} (2πu)^{2n}/(2n)!, coefficients of u^{2n}.
fn ucot_coefficients(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    let mut p = 1.0; // (2π)^{2j}/(2j)!
    for j in 0..n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        out.push(sign * bernoulli_number(2 * j) * p / PI);
        p *= TWO_PI * TWO_PI / (((2 * j + 1) * (2 * j + 2)) as f64);
    }
    out
}

/// 2∫₀^δ sinh(zu) cot(πu) du from the product of the two power series.
fn small_u_panel(z: Complex64, delta: f64) -> Complex64 {
    const J: usize = 14;
    let cot = ucot_coefficients(J);
    // sinh(zu)/u = Σ z^{2i+1} u^{2i}/(2i+1)!
    let mut sh = Vec::with_capacity(J);
    let mut t = z;
    for i in 0..J {
        sh.push(t);
        t *= z * z / (((2 * i + 2) * (2 * i + 3)) as f64);
    }
    let mut acc = c(0.0, 0.0);
    let mut dpow = delta;
    for j in 0..J {
        let d: Complex64 = (0..=j).map(|i| sh[i] * cot[j - i]).sum();
        acc += d * dpow / (2 * j + 1) as f64;
        dpow *= delta * delta;
    }
    2.0 * acc
}

/// Ω(z) by adaptive quadrature of the defining integral; the removable
/// singularity at u = 0 is integrated from the series on a short first panel.
pub fn omega_quadrature(z: ComplexValue, ctl: &QuadControl) -> Result<Evaluation> {
    ensure_finite(z, "omega_quadrature")?;
    if z == c(0.0, 0.0) {
        return Ok(Evaluation::exact(z, Route::Quadrature));
    }
    let delta = (0.5 / z.norm()).min(1e-3);
    let head = small_u_panel(z, delta);
    let r = quad::integrate(|u| 2.0 * (z * u).sinh() / (PI * u).tan(), delta, 0.5, ctl)?;
    Ok(Evaluation {
        value: head + r.value,
        err_estimate: r.err,
        terms_used: r.evals,
        route: Route::Quadrature,
    })
}

/// Digamma bracket 2 log 2 + ψ(1+iz/4π) + ψ(1−iz/4π) − ψ(1+iz/2π) − ψ(1−iz/2π).
fn digamma_bracket(z: Complex64) -> Result<Complex64> {
    let one = c(1.0, 0.0);
    let i = Complex64::i();
    let a = i * z / (2.0 * TWO_PI);
    let b = i * z / TWO_PI;
    if z.im == 0.0 {
        // the bracket is real on the real axis
        let v = 2.0 * LN_2 + 2.0 * digamma(one + a)?.re - 2.0 * digamma(one + b)?.re;
        return Ok(c(v, 0.0));
    }
    Ok(2.0 * LN_2 + digamma(one + a)? + digamma(one - a)? - digamma(one + b)? - digamma(one - b)?)
}

/// Ω(z) = (1/π) sinh(z/2){2 log 2 + ψ(1+iz/4π) + ψ(1−iz/4π) − ψ(1+iz/2π) − ψ(1−iz/2π)}.
///
/// Any real z; complex z needs |z| < 2π.
pub fn omega_digamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "omega_digamma")?;
    if z.im != 0.0 && z.norm() >= TWO_PI {
        return Err(Error::domain(format!(
            "digamma route for complex z requires |z| < 2π, got |z| = {}",
            z.norm()
        )));
    }
    let v = (z / 2.0).sinh() * digamma_bracket(z)? / PI;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::domain(format!("Ω({z}) overflows double precision")));
    }
    Ok(v)
}

/// Ω(x)·e^{−|x|/2} for real x, without overflow.
pub fn omega_scaled(x: f64) -> Result<f64> {
    ensure_finite_real(x, "omega_scaled")?;
    let b = digamma_bracket(c(x, 0.0))?.re;
    // sinh(x/2) e^{−|x|/2} = sgn(x)(1 − e^{−|x|})/2
    Ok(x.signum() * -(-x.abs()).exp_m1() / 2.0 * b / PI)
}

fn pole_check_2pi_i(z: Complex64) -> Result<()> {
    let zeta = z / TWO_PI;
    let k = zeta.im.round();
    if k != 0.0 {
        let d = (zeta - c(0.0, k)).norm();
        if d < 1e-10 {
            return Err(Error::Pole {
                what: "omega_partial_fraction",
                distance: d,
            });
        }
    }
    Ok(())
}

/// Ω(2πζ) = −(2/π) sinh(πζ) Σ_{k≥1} (−1)^k k/(ζ² + k²).
pub fn omega_partial_fraction(z: ComplexValue, ctl: &SumControl) -> Result<Evaluation> {
    ensure_finite(z, "omega_partial_fraction")?;
    pole_check_2pi_i(z)?;
    if z == c(0.0, 0.0) {
        return Ok(Evaluation::exact(z, Route::PartialFraction));
    }
    let zeta = z / TWO_PI;
    let z2 = zeta * zeta;
    let n0 = (8.0 * zeta.norm()).ceil().max(64.0) as usize;
    let s = accel::alternating(
        1,
        n0,
        |k| {
            let k = k as f64;
            k / (z2 + k * k)
        },
        ctl,
    )?;
    let pre = -(2.0 / PI) * (PI * zeta).sinh();
    Ok(Evaluation {
        value: pre * s.value,
        err_estimate: pre.norm() * s.err,
        terms_used: s.terms,
        route: Route::PartialFraction,
    })
}

/// Number of moments in the shared quadrature table.
pub const MOMENT_TABLE_LEN: usize = 64;

fn moment_quadrature_raw(k: usize) -> Result<f64> {
    let p = (2 * k + 1) as i32;
    // absolute tolerance far below the smallest tabulated moment (~2^{−127})
    let ctl = QuadControl {
        abs_tol: 1e-300,
        ..QuadControl::default()
    };
    let (v, _) = quad::integrate_real(|u| 2.0 * u.powi(p) / (PI * u).tan(), 0.0, 0.5, &ctl)?;
    Ok(v)
}

fn moment_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..MOMENT_TABLE_LEN)
            .map(|k| moment_quadrature_raw(k).unwrap_or(f64::NAN))
            .collect()
    })
}

/// Ω_{2k+1} = 2∫₀^{1/2} u^{2k+1} cot(πu) du.
pub fn omega_moment(k: usize, route: MomentRoute) -> Result<f64> {
    match route {
        MomentRoute::Quadrature => {
            if k < MOMENT_TABLE_LEN {
                let v = moment_table()[k];
                if v.is_finite() {
                    return Ok(v);
                }
            }
            moment_quadrature_raw(k)
        }
        MomentRoute::Closed => {
            // (2k+1)!/4^k Σ_{n≤k} (−1)^n η(2n+1)/(π^{2n+1}(2(k−n)+1)!)
            if k > 80 {
                return Err(Error::domain(
                    "closed moment form loses all digits beyond k = 80",
                ));
            }
            let mut acc = 0.0;
            for n in 0..=k {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let ratio = factorial(2 * k as u32 + 1) / factorial(2 * (k - n) as u32 + 1);
                acc +=
                    sign * dirichlet_eta((2 * n + 1) as f64)? * ratio / PI.powi(2 * n as i32 + 1);
            }
            Ok(acc / 4f64.powi(k as i32))
        }
        MomentRoute::Series => {
            // (1/(4^k π)) Σ_{n≥0} (−1)^n B_{2n} π^{2n}/((2n)!(2k+2n+1)); terms fall like 4^{−n}
            let mut acc = 0.0;
            let mut p = 1.0; // π^{2n}/(2n)!
            for n in 0..200 {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let t = sign * bernoulli_number(2 * n) * p / (2 * k + 2 * n + 1) as f64;
                acc += t;
                if n > 2 && t.abs() <= 1e-18 * acc.abs() {
                    return Ok(acc / (4f64.powi(k as i32) * PI));
                }
                p *= PI * PI / (((2 * n + 1) * (2 * n + 2)) as f64);
            }
            Err(Error::NonConvergence {
                terms: 200,
                estimate: f64::NAN,
                target: 1e-18,
            })
        }
    }
}

pub fn omega_moment_table(k_max: usize, route: MomentRoute) -> Result<OmegaMomentTable> {
    let values = (0..=k_max)
        .map(|k| omega_moment(k, route))
        .collect::<Result<Vec<_>>>()?;
    Ok(OmegaMomentTable { k_max, values })
}

/// Taylor expansions about 0, |z| < 2π.
pub fn omega_taylor(
    z: ComplexValue,
    variant: TaylorVariant,
    ctl: &SumControl,
) -> Result<Evaluation> {
    ensure_finite(z, "omega_taylor")?;
    ctl.validate()?;
    if z.norm() >= TWO_PI {
        return Err(Error::domain(format!(
            "Taylor routes require |z| < 2π, got |z| = {}",
            z.norm()
        )));
    }
    match variant {
        TaylorVariant::Moments => taylor_moments(z, ctl),
        TaylorVariant::Eta => taylor_eta(z, ctl),
    }
}

fn taylor_moments(z: Complex64, ctl: &SumControl) -> Result<Evaluation> {
    let table = moment_table();
    let mut acc = c(0.0, 0.0);
    let mut pow = z; // z^{2k+1}/(2k+1)!
    for (k, &m) in table.iter().enumerate().take(ctl.max_terms) {
        if !m.is_finite() {
            return Err(Error::QuadratureFailure {
                a: 0.0,
                b: 0.5,
                estimate: f64::NAN,
            });
        }
        let t = m * pow;
        acc += t;
        pow *= z * z / (((2 * k + 2) * (2 * k + 3)) as f64);
        // moments decrease, so the next factorial term bounds the tail
        let err = m * pow.norm() * 2.0;
        if err <= ctl.rel_tol * acc.norm() || acc.norm() == 0.0 && err == 0.0 {
            return Ok(Evaluation {
                value: acc,
                err_estimate: err,
                terms_used: k + 1,
                route: Route::TaylorMoments,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: table.len().min(ctl.max_terms),
        estimate: pow.norm(),
        target: ctl.rel_tol,
    })
}

fn taylor_eta(z: Complex64, ctl: &SumControl) -> Result<Evaluation> {
    if z == c(0.0, 0.0) {
        return Ok(Evaluation::exact(z, Route::TaylorEta));
    }
    // coefficient of z^{2k+1} is Σ_{n+m=k} A_n B_m with
    // A_n = (−1)^n η(2n+1)(z/2π)^{2n}/π, B_m = 2(z/2)^{2m+1}/(2m+1)!
    let q = (z / TWO_PI).norm_sqr();
    let w = (z / TWO_PI) * (z / TWO_PI);
    let mut a: Vec<Complex64> = Vec::new();
    let mut b: Vec<Complex64> = Vec::new();
    let mut apow = c(1.0, 0.0);
    let mut bpow = z / 2.0;
    let mut acc = c(0.0, 0.0);
    for k in 0..ctl.max_terms {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        a.push(sign * dirichlet_eta((2 * k + 1) as f64)? * apow / PI);
        b.push(2.0 * bpow);
        apow *= w;
        bpow *= z * z / (4.0 * ((2 * k + 2) * (2 * k + 3)) as f64);
        let t: Complex64 = (0..=k).map(|n| a[n] * b[k - n]).sum();
        acc += t;
        // |A_n| ≤ q^n/π and Σ|B_m| ≤ 2 sinh(|z|/2): tail ≤ q^{k+1}/(1−q)·2sinh(|z|/2)/π
        let err = q.powi(k as i32 + 1) / (1.0 - q) * 2.0 * (z.norm() / 2.0).sinh() / PI;
        if k > 2 && err <= ctl.rel_tol * acc.norm() {
            return Ok(Evaluation {
                value: acc,
                err_estimate: err,
                terms_used: k + 1,
                route: Route::TaylorEta,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: ctl.max_terms,
        estimate: f64::NAN,
        target: ctl.rel_tol,
    })
}

/// Evaluate through an explicit route.
pub fn omega_route(
    z: ComplexValue,
    route: OmegaRoute,
    sum: &SumControl,
    quad_ctl: &QuadControl,
) -> Result<Evaluation> {
    match route {
        OmegaRoute::Quadrature => omega_quadrature(z, quad_ctl),
        OmegaRoute::Digamma => Ok(Evaluation::exact(omega_digamma(z)?, Route::Digamma)),
        OmegaRoute::PartialFraction => omega_partial_fraction(z, sum),
        OmegaRoute::TaylorMoments => omega_taylor(z, TaylorVariant::Moments, sum),
        OmegaRoute::TaylorEta => omega_taylor(z, TaylorVariant::Eta, sum),
    }
}

/// Default dispatch: digamma form on ℝ and for |z| < 0.9·2π, quadrature elsewhere.
pub fn omega(z: ComplexValue) -> Result<Evaluation> {
    if z.im == 0.0 || z.norm() < 0.9 * TWO_PI {
        Ok(Evaluation::exact(omega_digamma(z)?, Route::Digamma))
    } else {
        omega_quadrature(z, &QuadControl::default())
    }
}

/// Two-sided bounds (lower, upper) with lower ≤ Ω(x) ≤ upper.
///
/// For x ≥ 0: (1/π)sinh(x/2) log((ζ(3)x²+8π²)/(3x²+2π²)) and
/// (1/π)sinh(x/2) log((3x²+8π²)/(ζ(3)x²+2π²)); for x < 0 these swap roles.
pub fn omega_bounds(x: f64) -> (f64, f64) {
    let (lo, hi) = omega_bound_formulas(x);
    if x < 0.0 {
        (hi, lo)
    } else {
        (lo, hi)
    }
}

fn bound_logs(x: f64) -> (f64, f64) {
    let z3 = zeta3();
    let x2 = x * x;
    let p2 = PI * PI;
    (
        ((z3 * x2 + 8.0 * p2) / (3.0 * x2 + 2.0 * p2)).ln(),
        ((3.0 * x2 + 8.0 * p2) / (z3 * x2 + 2.0 * p2)).ln(),
    )
}

/// The two bound expressions as written for x ≥ 0, without the swap for x < 0.
pub fn omega_bound_formulas(x: f64) -> (f64, f64) {
    let (l, u) = bound_logs(x);
    let s = (x / 2.0).sinh() / PI;
    (s * l, s * u)
}

fn zeta3() -> f64 {
    static Z3: OnceLock<f64> = OnceLock::new();
    *Z3.get_or_init(|| riemann_zeta(3.0).unwrap_or(1.2020569031595942))
}

/// Log-space view of a real quantity: value = sign · e^{log_abs}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    pub log_abs: f64,
    pub sign: f64,
}

impl LogValue {
    fn new(v: f64, log_scale: f64) -> Self {
        LogValue {
            log_abs: v.abs().ln() + log_scale,
            sign: if v == 0.0 { 0.0 } else { v.signum() },
        }
    }
}

/// Ω(x), lower and upper bound and the approximant (1/2π)log(3/ζ(3))sinh(x/2)
/// in log space, for x > 0 large.
pub fn omega_log_space(x: f64) -> Result<[LogValue; 4]> {
    ensure_finite_real(x, "omega_log_space")?;
    if x <= 0.0 {
        return Err(Error::domain("log-space evaluation needs x > 0"));
    }
    // sinh(x/2) = e^{x/2}(1 − e^{−x})/2
    let log_sinh = x / 2.0 + (-(-x).exp_m1() / 2.0).ln();
    let (l, u) = bound_logs(x);
    let coef = (3.0 / zeta3()).ln() / TWO_PI;
    let scaled = omega_scaled(x)?;
    Ok([
        LogValue::new(scaled, x / 2.0),
        LogValue::new(l / PI, log_sinh),
        LogValue::new(u / PI, log_sinh),
        LogValue::new(coef, log_sinh),
    ])
}

/// Envelope coefficients and the measured ratio Ω(x)/e^{x/2}, x ≥ 10.
pub fn omega_asymptotic_envelope(x: f64) -> Result<OmegaEnvelope> {
    ensure_finite_real(x, "omega_asymptotic_envelope")?;
    if x < 10.0 {
        return Err(Error::domain(format!(
            "envelope check requires x >= 10, got {x}"
        )));
    }
    let hi = (3.0 / zeta3()).ln() / TWO_PI;
    Ok(OmegaEnvelope {
        lo_coef: -hi,
        hi_coef: hi,
        ratio: omega_scaled(x)?,
    })
}

/// |Ω′(x) − ½coth(x/2)Ω(x) + forcing(x)| with Ω′ from a central difference
/// of the digamma form.
pub fn omega_ode_residual_form(x: f64, h: f64, form: OdeForm) -> Result<f64> {
    ensure_finite_real(x, "omega_ode_residual")?;
    if !(1e-7..=1e-3).contains(&h) {
        return Err(Error::Step(h));
    }
    let om = |t: f64| omega_digamma(c(t, 0.0)).map(|v| v.re);
    let d = (om(x + h)? - om(x - h)?) / (2.0 * h);
    let qc = QuadControl::default();
    // ½coth(x/2)Ω(x) → Ω′(0) = Ω₁ = log 2/π; mathieu_e switches to E(0) = 2η(3)
    let lin = if x.abs() < 1e-8 {
        LN_2 / PI
    } else {
        0.5 / (x / 2.0).tanh() * om(x)?
    };
    let forcing = match form {
        OdeForm::Derived => {
            x / (2.0 * PI.powi(3)) * (x / 2.0).sinh() * mathieu_e(x / TWO_PI, &qc)?.value.re
        }
        OdeForm::AsPrinted => x / PI.powi(3) * (x / 2.0).sinh() * mathieu_e(x, &qc)?.value.re,
    };
    Ok((d - lin + forcing).abs())
}

/// ODE residual with the derived forcing term.
pub fn omega_ode_residual(x: f64, h: f64) -> Result<f64> {
    omega_ode_residual_form(x, h, OdeForm::Derived)
}

/// PV∫_{−1/2}^{1/2} e^{zu} cot(πu) du, folded onto (0, ½] as
/// ∫₀^{1/2} (e^{zu} − e^{−zu}) cot(πu) du.
pub fn omega_hilbert_pv(z: ComplexValue, ctl: &QuadControl) -> Result<Evaluation> {
    ensure_finite(z, "omega_hilbert_pv")?;
    let r = quad::integrate(
        |u| {
            if u == 0.0 {
                return z / PI;
            }
            ((z * u).exp() - (-z * u).exp()) / (PI * u).tan()
        },
        0.0,
        0.5,
        ctl,
    )?;
    Ok(Evaluation {
        value: r.value,
        err_estimate: r.err,
        terms_used: r.evals,
        route: Route::Quadrature,
    })
}

/// 𝔥₁(z) = iπ Ω(2πz)/sinh(πz) for z ∉ iℤ.
pub fn he1_via_omega(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "he1_via_omega")?;
    let s = (PI * z).sinh();
    if s.norm() < 1e-12 {
        return Err(Error::Pole {
            what: "he1_via_omega",
            distance: s.norm() / PI,
        });
    }
    Ok(Complex64::i() * PI * omega(TWO_PI * z)?.value / s)
}
