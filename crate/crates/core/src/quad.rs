//! Adaptive Gauss–Legendre quadrature on finite intervals.
//!
//! Each panel is integrated once whole and once as two halves with the same
//! rule; the difference of the two levels is the panel error estimate.
//! Panels that miss their share of the tolerance are bisected.

use crate::error::{Error, Result};
use crate::types::{ComplexValue, QuadControl};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: ComplexValue,
    pub err: f64,
    pub evals: usize,
}

/// Gauss–Legendre nodes and weights on [−1, 1], computed by Newton iteration
/// on the three-term recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() <= 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

struct Rule {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Rule {
    /// Returns (∫f, ∫|f|) over [a, b].
    fn apply<F: Fn(f64) -> Complex64>(&self, f: &F, a: f64, b: f64) -> (Complex64, f64) {
        let h = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut s = Complex64::new(0.0, 0.0);
        let mut abs = 0.0;
        for (xi, wi) in self.x.iter().zip(&self.w) {
            let v = f(mid + h * xi);
            s += v * *wi;
            abs += v.norm() * wi;
        }
        (s * h, abs * h.abs())
    }
}

struct Adaptive<'a, F> {
    f: &'a F,
    rule: Rule,
    ctl: QuadControl,
    evals: usize,
    /// total tolerance per unit length
    density: f64,
}

impl<F: Fn(f64) -> Complex64> Adaptive<'_, F> {
    fn panel(
        &mut self,
        a: f64,
        b: f64,
        whole: Complex64,
        depth: usize,
    ) -> std::result::Result<(Complex64, f64), (f64, f64, f64)> {
        let m = 0.5 * (a + b);
        let (l, labs) = self.rule.apply(self.f, a, m);
        let (r, rabs) = self.rule.apply(self.f, m, b);
        self.evals += 2 * self.rule.x.len();
        let halves = l + r;
        let err = (halves - whole).norm();
        // below 64 ulp of ∫|f| the difference is rounding noise
        let allowed = (self.density * (b - a).abs()).max(64.0 * f64::EPSILON * (labs + rabs));
        if err <= allowed || (b - a).abs() <= 1e-14 * (a.abs() + b.abs()).max(1e-300) {
            return Ok((halves, err));
        }
        if depth >= self.ctl.max_depth {
            return Err((a, b, err));
        }
        let (lv, le) = self.panel(a, m, l, depth + 1)?;
        let (rv, re) = self.panel(m, b, r, depth + 1)?;
        Ok((lv + rv, le + re))
    }
}

/// Integrate a complex-valued `f` over the finite interval [a, b].
pub fn integrate<F>(f: F, a: f64, b: f64, ctl: &QuadControl) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    ctl.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("quadrature interval must be finite"));
    }
    if a == b {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            err: 0.0,
            evals: 0,
        });
    }
    let (x, w) = gauss_legendre(ctl.panel_nodes);
    let rule = Rule { x, w };
    // coarse pass over 8 sub-panels to size the tolerance
    let pieces = 8;
    let h = (b - a) / pieces as f64;
    let mut whole = Vec::with_capacity(pieces);
    let mut total = Complex64::new(0.0, 0.0);
    let mut total_abs = 0.0;
    for i in 0..pieces {
        let lo = a + h * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + h };
        let (v, abs) = rule.apply(&f, lo, hi);
        total += v;
        total_abs += abs;
        whole.push((lo, hi, v));
    }
    let tol = ctl
        .abs_tol
        .max(ctl.rel_tol * total.norm())
        .max(64.0 * f64::EPSILON * total_abs);
    let mut state = Adaptive {
        f: &f,
        evals: pieces * rule.x.len(),
        rule,
        ctl: *ctl,
        density: tol / (b - a).abs(),
    };
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for (lo, hi, v) in whole {
        match state.panel(lo, hi, v, 1) {
            Ok((pv, pe)) => {
                value += pv;
                err += pe;
            }
            Err((pa, pb, pe)) => {
                return Err(Error::QuadratureFailure {
                    a: pa,
                    b: pb,
                    estimate: pe,
                })
            }
        }
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::QuadratureFailure {
            a,
            b,
            estimate: f64::NAN,
        });
    }
    Ok(QuadResult {
        value,
        err,
        evals: state.evals,
    })
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, ctl: &QuadControl) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let r = integrate(|t| Complex64::new(f(t), 0.0), a, b, ctl)?;
    Ok((r.value.re, r.err))
}
