//! Hilbert–Eisenstein series
//! 𝔥_r(z) = Σ_{k∈ℤ} (−1)^k sgn(k) (z+ik)^{−r} = Σ_{k≥1} (−1)^k [(z+ik)^{−r} − (z−ik)^{−r}]
//! (symmetric summation for r = 1), and the Mathieu series S_r, S̃_r.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::accel;
use crate::eisenstein::eisenstein;
use crate::error::{Error, Result};
use crate::numkern::{digamma, dirichlet_eta, factorial, polygamma, power_tail};
use crate::quad;
use crate::types::{
    c, ensure_finite, ensure_finite_real, ComplexValue, Evaluation, QuadControl, Route, SumControl,
    LN_2, PI,
};

/// Library-level pole guard around iℤ∖{0}.
pub const HE_POLE_GUARD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeRoute {
    Direct,
    Closed,
    Taylor,
    RealAxis,
    ViaEisenstein,
}

fn check(r: u32, z: ComplexValue) -> Result<()> {
    ensure_finite(z, "hilbert_eisenstein")?;
    if r == 0 {
        return Err(Error::domain("Hilbert–Eisenstein order must be >= 1"));
    }
    let k = z.im.round();
    if k != 0.0 {
        let d = (z - Complex64::new(0.0, k)).norm();
        if d < HE_POLE_GUARD {
            return Err(Error::Pole {
                what: "hilbert_eisenstein",
                distance: d,
            });
        }
    }
    Ok(())
}

fn two_i_log2() -> Complex64 {
    c(0.0, 2.0 * LN_2)
}

/// 𝔥_r(z) by accelerated summation of the paired alternating series.
pub fn he_direct(r: u32, z: ComplexValue, ctl: &SumControl) -> Result<Evaluation> {
    check(r, z)?;
    ctl.validate()?;
    if r == 1 && z == c(0.0, 0.0) {
        return Ok(Evaluation::exact(two_i_log2(), Route::Direct));
    }
    let e = -(r as i32);
    let n0 = (8.0 * z.norm()).ceil().max(64.0) as usize;
    let s = accel::alternating(
        1,
        n0,
        |k| {
            let ik = c(0.0, k as f64);
            (z + ik).powi(e) - (z - ik).powi(e)
        },
        ctl,
    )?;
    Ok(Evaluation {
        value: s.value,
        err_estimate: s.err,
        terms_used: s.terms,
        route: Route::Direct,
    })
}

/// Digamma/polygamma closed form, valid on (ℂ ∖ iℤ) ∪ {0}.
///
/// r = 1: 2i log 2 + i{ψ(1+iz/2) + ψ(1−iz/2) − ψ(1+iz) − ψ(1−iz)}.
/// r ≥ 2: (i^r/Γ(r)){2^{1−r}ψ_{r−1}(1−iz/2) + (−2)^{1−r}ψ_{r−1}(1+iz/2)
///        − ψ_{r−1}(1−iz) − (−1)^{r−1}ψ_{r−1}(1+iz)}.
pub fn he_closed(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check(r, z)?;
    let i = Complex64::i();
    let one = c(1.0, 0.0);
    let iz = i * z;
    if r == 1 {
        let s = digamma(one + iz / 2.0)? + digamma(one - iz / 2.0)?
            - digamma(one + iz)?
            - digamma(one - iz)?;
        return Ok(two_i_log2() + i * s);
    }
    let m = r - 1;
    let half = 2f64.powi(1 - r as i32);
    let sgn = if m % 2 == 0 { 1.0 } else { -1.0 };
    let s = half * polygamma(m, one - iz / 2.0)? + sgn * half * polygamma(m, one + iz / 2.0)?
        - polygamma(m, one - iz)?
        - sgn * polygamma(m, one + iz)?;
    Ok(i.powi(r as i32) * s / factorial(m))
}

/// 2i Σ_{n≥0} (−1)^n η(2n+1) z^{2n} for |z| < 1.
pub fn he_taylor(z: ComplexValue, ctl: &SumControl) -> Result<Evaluation> {
    ensure_finite(z, "he_taylor")?;
    ctl.validate()?;
    let q = z.norm_sqr();
    if q >= 1.0 {
        return Err(Error::domain(format!(
            "he_taylor requires |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let z2 = z * z;
    let mut pow = c(1.0, 0.0);
    let mut acc = c(0.0, 0.0);
    for n in 0..ctl.max_terms {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * dirichlet_eta((2 * n + 1) as f64)? * pow;
        pow *= z2;
        // 0 < η ≤ 1, so the tail is at most Σ_{m>n} |z|^{2m}
        let tail = pow.norm() / (1.0 - q);
        if tail <= ctl.rel_tol * acc.norm() {
            return Ok(Evaluation {
                value: 2.0 * Complex64::i() * acc,
                err_estimate: 2.0 * tail,
                terms_used: n + 1,
                route: Route::Taylor,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: ctl.max_terms,
        estimate: pow.norm() / (1.0 - q),
        target: ctl.rel_tol,
    })
}

/// Real-axis form; the value is purely imaginary by construction.
///
/// With P = 2^{1−r}ψ_{r−1}(1+ix/2) − ψ_{r−1}(1+ix):
/// odd r: 2i(−1)^{(r−1)/2} Re P / Γ(r); even r: 2i(−1)^{r/2−1} Im P / Γ(r);
/// r = 1 adds 2i log 2.
pub fn he_real(r: u32, x: f64) -> Result<ComplexValue> {
    ensure_finite_real(x, "he_real")?;
    check(r, c(x, 0.0))?;
    let one = c(1.0, 0.0);
    let ix = c(0.0, x);
    if r == 1 {
        let p = digamma(one + ix / 2.0)? - digamma(one + ix)?;
        return Ok(c(0.0, 2.0 * LN_2 + 2.0 * p.re));
    }
    let m = r - 1;
    let p = 2f64.powi(1 - r as i32) * polygamma(m, one + ix / 2.0)? - polygamma(m, one + ix)?;
    let v = if r % 2 == 1 {
        let s = if (r - 1) / 2 % 2 == 0 { 1.0 } else { -1.0 };
        s * p.re
    } else {
        let s = if (r / 2 - 1) % 2 == 0 { 1.0 } else { -1.0 };
        s * p.im
    };
    Ok(c(0.0, 2.0 * v / factorial(m)))
}

/// Real-axis representation through Eisenstein series at imaginary points.
///
/// r = 1: 2i log 2 + 2i Re{ε₁(ix/2) − ε₁(ix) + ψ(ix/2) − ψ(ix)}.
/// r ≥ 2: i^r{2^{1−r}(ε_r(ix/2) + (−1)^{r−1}ε_r(−ix/2)) − ε_r(ix) − (−1)^{r−1}ε_r(−ix)}
///        + ((−1)^{r−1} i^r/Γ(r)){2^{1−r}(ψ_{r−1}(ix/2) + (−1)^{r−1}ψ_{r−1}(−ix/2))
///        − ψ_{r−1}(ix) − (−1)^{r−1}ψ_{r−1}(−ix)}.
pub fn he_via_eisenstein(r: u32, x: f64) -> Result<ComplexValue> {
    ensure_finite_real(x, "he_via_eisenstein")?;
    if x == 0.0 {
        return Err(Error::domain("he_via_eisenstein requires x != 0"));
    }
    check(r, c(x, 0.0))?;
    let i = Complex64::i();
    let h = c(0.0, x / 2.0);
    let f = c(0.0, x);
    if r == 1 {
        let s = eisenstein(1, h)? - eisenstein(1, f)? + digamma(h)? - digamma(f)?;
        return Ok(two_i_log2() + 2.0 * i * s.re);
    }
    let m = r - 1;
    let half = 2f64.powi(1 - r as i32);
    let sgn = if m % 2 == 0 { 1.0 } else { -1.0 };
    let ir = i.powi(r as i32);
    let eis = half * (eisenstein(r, h)? + sgn * eisenstein(r, -h)?)
        - eisenstein(r, f)?
        - sgn * eisenstein(r, -f)?;
    let psi = half * (polygamma(m, h)? + sgn * polygamma(m, -h)?)
        - polygamma(m, f)?
        - sgn * polygamma(m, -f)?;
    Ok(ir * eis + sgn * ir * psi / factorial(m))
}

/// r = 1 real-axis form with ε₁(iy) = −iπ coth(πy):
/// 2i log 2 + 2i Re{−iπ coth(πx/2) + iπ coth(πx) + ψ(ix/2) − ψ(ix)}.
pub fn he_via_coth(x: f64) -> Result<ComplexValue> {
    ensure_finite_real(x, "he_via_coth")?;
    if x == 0.0 {
        return Err(Error::domain("he_via_coth requires x != 0"));
    }
    let i = Complex64::i();
    let coth = |y: f64| 1.0 / y.tanh();
    let s = -i * PI * coth(PI * x / 2.0) + i * PI * coth(PI * x) + digamma(c(0.0, x / 2.0))?
        - digamma(c(0.0, x))?;
    Ok(two_i_log2() + 2.0 * i * s.re)
}

/// Dispatch on an explicit route (real-axis routes need Im z = 0).
pub fn he_route(r: u32, z: ComplexValue, route: HeRoute, ctl: &SumControl) -> Result<Evaluation> {
    let real = || {
        if z.im != 0.0 {
            Err(Error::domain("real-axis route requires real z"))
        } else {
            Ok(z.re)
        }
    };
    match route {
        HeRoute::Direct => he_direct(r, z, ctl),
        HeRoute::Closed => Ok(Evaluation::exact(he_closed(r, z)?, Route::Closed)),
        HeRoute::Taylor => {
            if r != 1 {
                return Err(Error::domain("Taylor route is defined for r = 1 only"));
            }
            he_taylor(z, ctl)
        }
        HeRoute::RealAxis => Ok(Evaluation::exact(he_real(r, real()?)?, Route::RealAxis)),
        HeRoute::ViaEisenstein => Ok(Evaluation::exact(
            he_via_eisenstein(r, real()?)?,
            Route::ViaEisenstein,
        )),
    }
}

/// Σ_{|k|≤n} (−1)^k/(z+ik), whose limit is π/sinh(πz).
pub fn pi_over_sinh_partial(z: ComplexValue, n: usize) -> ComplexValue {
    let mut acc = accel::Neumaier::new();
    acc.add(1.0 / z);
    for k in 1..=n {
        let kf = k as f64;
        let t = 2.0 * z / (z * z + kf * kf);
        acc.add(if k % 2 == 0 { t } else { -t });
    }
    acc.value()
}

/// S_r(x) = Σ 2k/(k²+x²)^r (r > 1) or S̃_r(x) = Σ (−1)^{k−1} 2k/(k²+x²)^r (r > 0).
pub fn mathieu(r: f64, x: f64, alternating: bool, ctl: &SumControl) -> Result<Evaluation> {
    ensure_finite_real(x, "mathieu")?;
    ensure_finite_real(r, "mathieu")?;
    ctl.validate()?;
    let term = |k: usize| {
        let kf = k as f64;
        2.0 * kf / (kf * kf + x * x).powf(r)
    };
    if alternating {
        if r <= 0.0 {
            return Err(Error::domain(format!(
                "alternating Mathieu series requires r > 0, got {r}"
            )));
        }
        let n0 = (8.0 * x.abs()).ceil().max(64.0) as usize;
        let s = accel::alternating(1, n0, |k| c(term(k), 0.0), ctl)?;
        return Ok(Evaluation {
            value: c(-s.value.re, 0.0),
            err_estimate: s.err,
            terms_used: s.terms,
            route: Route::Series,
        });
    }
    if r <= 1.0 {
        return Err(Error::domain(format!(
            "Mathieu series requires r > 1, got {r}"
        )));
    }
    let n = (2.0 * x.abs()).ceil() as usize + 64;
    let head: f64 = (1..=n).map(term).sum();
    // 2k/(k²+x²)^r = 2 k^{1−2r} (1 + x²/k²)^{−r}
    let tail = 2.0 * power_tail(n, 2.0 * r - 1.0, r, x)?;
    let value = head + tail;
    Ok(Evaluation {
        value: c(value, 0.0),
        err_estimate: 4.0 * f64::EPSILON * n as f64 * value.abs(),
        terms_used: n,
        route: Route::Series,
    })
}

/// S̃₂(x) through (1/x)∫₀^∞ u sin(xu)/(e^u+1) du, with E(0) = 2η(3).
pub fn mathieu_e(x: f64, ctl: &QuadControl) -> Result<Evaluation> {
    ensure_finite_real(x, "mathieu_E")?;
    if x.abs() < 1e-8 {
        return Ok(Evaluation::exact(
            c(2.0 * dirichlet_eta(3.0)?, 0.0),
            Route::Closed,
        ));
    }
    // u e^{−u} < 1e−19 beyond u = 50
    let f = |u: f64| {
        let s = if (x * u).abs() < 1e-300 {
            u
        } else {
            (x * u).sin() / x
        };
        c(u * s * (-u).exp() / (1.0 + (-u).exp()), 0.0)
    };
    let r = quad::integrate(f, 0.0, 50.0, ctl)?;
    Ok(Evaluation {
        value: r.value,
        err_estimate: r.err,
        terms_used: r.evals,
        route: Route::Integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkern::riemann_zeta;
    use proptest::prelude::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn value_at_zero() {
        let s = SumControl::default();
        assert_eq!(he_direct(1, c(0.0, 0.0), &s).unwrap().value, two_i_log2());
        assert!(rel(he_closed(1, c(0.0, 0.0)).unwrap(), two_i_log2()) < 1e-15);
        assert!(rel(he_taylor(c(0.0, 0.0), &s).unwrap().value, two_i_log2()) < 1e-15);
        assert!(rel(he_real(1, 0.0).unwrap(), two_i_log2()) < 1e-15);
    }

    #[test]
    fn reference_values() {
        let s = SumControl::default();
        let cases = [
            (
                1,
                c(3.0, 0.5),
                c(0.020211385736494662507, 0.054054054054054054054),
            ),
            (2, c(0.7, 0.0), c(0.0, 1.0492619967148095883)),
            (3, c(0.8, 0.0), c(0.0, 0.46885354560880918048)),
            (2, c(1.2, 0.0), c(0.0, 0.57254332024633600375)),
            (
                4,
                c(0.3, 0.6),
                c(-13.718691994623842709, -8.5238576818352804732),
            ),
            (1, c(0.5, 0.0), c(0.0, 1.0322554358396621704)),
            (
                1,
                c(0.3, 0.3),
                c(0.31334362089919214429, 1.3253306375556260553),
            ),
            (1, c(1.0, 0.0), c(0.0, 0.539221005416017963603)),
        ];
        for (r, z, v) in cases {
            assert!(
                rel(he_direct(r, z, &s).unwrap().value, v) < 1e-12,
                "direct {r} {z}"
            );
            assert!(rel(he_closed(r, z).unwrap(), v) < 1e-13, "closed {r} {z}");
            if z.im == 0.0 {
                assert!(rel(he_real(r, z.re).unwrap(), v) < 1e-13, "real {r} {z}");
                assert!(
                    rel(he_via_eisenstein(r, z.re).unwrap(), v) < 1e-12,
                    "via {r} {z}"
                );
            }
            if r == 1 && z.norm() < 1.0 {
                assert!(
                    rel(he_taylor(z, &s).unwrap().value, v) < 1e-12,
                    "taylor {z}"
                );
            }
        }
        let a = he_via_coth(1.0).unwrap();
        let b = he_via_eisenstein(1, 1.0).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn trigamma_step() {
        let z = c(0.7, 0.0);
        let one = c(1.0, 0.0);
        let i = Complex64::i();
        let v = 0.5
            * (polygamma(1, one + i * z / 2.0).unwrap() - polygamma(1, one - i * z / 2.0).unwrap())
            - polygamma(1, one + i * z).unwrap()
            + polygamma(1, one - i * z).unwrap();
        assert!(rel(v, he_closed(2, z).unwrap()) < 1e-14);
    }

    #[test]
    fn mathieu_values() {
        let s = SumControl::default();
        let z3 = riemann_zeta(3.0).unwrap();
        assert!((mathieu(2.0, 0.0, false, &s).unwrap().value.re - 2.0 * z3).abs() < 1e-14);
        let e3 = dirichlet_eta(3.0).unwrap();
        assert!((mathieu(2.0, 0.0, true, &s).unwrap().value.re - 2.0 * e3).abs() < 1e-14);
        assert!(
            (mathieu(2.0, 1.5, false, &s).unwrap().value.re - 0.40720037194722934635).abs() < 1e-14
        );
        assert!(
            (mathieu(1.5, 0.7, true, &s).unwrap().value.re - 0.81112562893876393241).abs() < 1e-14
        );
        assert!(
            (mathieu(3.0, 2.0, false, &s).unwrap().value.re - 0.028371070570454025037).abs()
                < 1e-15
        );
        let st1 = mathieu(2.0, 1.0, true, &s).unwrap().value.re;
        assert!((st1 - 0.38171255654242344).abs() < 1e-14);
        assert!(mathieu(1.0, 1.0, false, &s).is_err());
    }

    #[test]
    fn mathieu_integral_form() {
        let q = QuadControl::default();
        let s = SumControl::default();
        assert!((mathieu_e(0.0, &q).unwrap().value.re - 1.8030853547393914).abs() < 1e-14);
        for x in [1.0, -1.0, 0.3, 3.0] {
            let a = mathieu_e(x, &q).unwrap().value.re;
            let b = mathieu(2.0, x, true, &s).unwrap().value.re;
            assert!((a - b).abs() < 1e-12, "x = {x}: {a} vs {b}");
        }
    }

    #[test]
    fn sinh_partial_fractions() {
        let z = c(0.4, 0.3);
        let v = pi_over_sinh_partial(z, 10_000);
        assert!((v - PI / (PI * z).sinh()).norm() < 1e-8);
    }

    #[test]
    fn poles_rejected() {
        assert!(matches!(he_closed(2, c(0.0, 1.0)), Err(Error::Pole { .. })));
        assert!(he_direct(1, c(1e-12, -2.0), &SumControl::default()).is_err());
    }

    fn he_point() -> impl Strategy<Value = ComplexValue> {
        (-2.0f64..2.0, -2.0f64..2.0)
            .prop_map(|(x, y)| c(x, y))
            .prop_filter("away from iℤ", |z| {
                let k = z.im.round();
                (z - c(0.0, k)).norm() >= 0.05
                    && (z + c(0.0, 1.0) - c(0.0, (z.im + 1.0).round())).norm() >= 0.05
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn difference_equation(r in 1u32..4, z in he_point()) {
            let i = Complex64::i();
            let lhs = he_closed(r, z).unwrap() + he_closed(r, z + i).unwrap();
            let e = -(r as i32);
            let rhs = z.powi(e) - (z + i).powi(e);
            prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0));
        }

        #[test]
        fn symmetry(r in 1u32..6, z in he_point()) {
            let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
            let a = he_closed(r, -z).unwrap();
            let b = he_closed(r, z).unwrap();
            prop_assert!((a - sign * b).norm() <= 1e-10 * b.norm().max(1.0));
        }

        #[test]
        fn purely_imaginary_on_real_axis(r in 1u32..6, x in -4.0f64..4.0) {
            prop_assert_eq!(he_real(r, x).unwrap().re, 0.0);
            prop_assert!(he_closed(r, c(x, 0.0)).unwrap().re.abs() <= 1e-12);
        }
    }
}
