//! Public-API checks against oracles computed independently in this file:
//! brute-force sums, composite Simpson quadrature and tabulated constants.

use eiskern::conj_bernoulli::{conj_bernoulli_periodic, fractional_bernoulli};
use eiskern::eisenstein::{eisenstein, eisenstein_route, EisensteinRoute};
use eiskern::hilbert_eisenstein::{he_closed, mathieu};
use eiskern::numkern::{dirichlet_eta, riemann_zeta};
use eiskern::omega::{omega, omega_bounds, omega_moment, MomentRoute};
use eiskern::{c, ComplexValue, QuadControl, SumControl, PI};

const ZETA3: f64 = 1.202_056_903_159_594_285_4;

/// Composite Simpson on [a, b] with n (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + k as f64 * h);
    }
    s * h / 3.0
}

/// Ω(x) for real x straight from the definition; the integrand tends to 2x/π at u = 0.
fn omega_simpson(x: f64) -> f64 {
    let f = |u: f64| {
        if u == 0.0 {
            2.0 * x / PI
        } else {
            2.0 * (x * u).sinh() / (PI * u).tan()
        }
    };
    simpson(f, 0.0, 0.5, 20_000)
}

#[test]
fn omega_matches_simpson_of_the_definition() {
    for x in [0.3, 1.0, 2.5, 6.0] {
        let v = omega(c(x, 0.0)).unwrap().value;
        let o = omega_simpson(x);
        assert!(
            (v.re - o).abs() < 1e-12 * o.abs().max(1.0),
            "x={x}: {} vs {o}",
            v.re
        );
        assert_eq!(v.im, 0.0);
        let (lo, hi) = omega_bounds(x);
        assert!(lo < o && o < hi);
    }
}

#[test]
fn first_moment_by_simpson() {
    let f = |u: f64| {
        if u == 0.0 {
            2.0 / PI
        } else {
            2.0 * u / (PI * u).tan()
        }
    };
    let o1 = simpson(f, 0.0, 0.5, 20_000);
    assert!((omega_moment(0, MomentRoute::Closed).unwrap() - o1).abs() < 1e-13);
}

#[test]
fn eisenstein_against_brute_force_sum() {
    // ε₂(z) = Σ (z+n)^{−2}; the tail beyond |n| = N is ≈ 2/N
    let z = c(0.3, 0.4);
    let n = 200_000i64;
    let mut s = ComplexValue::new(0.0, 0.0);
    for k in -n..=n {
        s += (z + k as f64).powi(-2);
    }
    s += 2.0 / n as f64;
    let v = eisenstein(2, z).unwrap();
    assert!((v - s).norm() < 1e-9 * v.norm(), "{v} vs {s}");
    let d = eisenstein_route(
        2,
        z,
        EisensteinRoute::Direct,
        &SumControl::default(),
        &QuadControl::default(),
    )
    .unwrap();
    assert!((d.value - v).norm() < 1e-10 * v.norm());
}

#[test]
fn hilbert_eisenstein_against_paired_sum() {
    // Σ_{k≥1} (−1)^k [(z+ik)^{−r} − (z−ik)^{−r}]; averaging two consecutive
    // partial sums removes the leading oscillating tail
    let i = c(0.0, 1.0);
    let partial = |r: i32, z: ComplexValue, n: u32| -> ComplexValue {
        let mut s = ComplexValue::new(0.0, 0.0);
        for k in 1..=n {
            let sg = if k % 2 == 0 { 1.0 } else { -1.0 };
            let ik = i * k as f64;
            s += sg * ((z + ik).powi(-r) - (z - ik).powi(-r));
        }
        s
    };
    for z in [c(0.7, 0.2), c(-1.3, 0.4), c(0.0, 0.5)] {
        for r in [1, 2, 3] {
            let n = 100_000;
            let avg = (partial(r, z, n) + partial(r, z, n + 1)) / 2.0;
            let v = he_closed(r as u32, z).unwrap();
            assert!(
                (avg - v).norm() < 1e-9 * v.norm().max(1.0),
                "r={r} z={z}: {avg} vs {v}"
            );
        }
    }
}

#[test]
fn zeta_and_eta_constants() {
    assert!((riemann_zeta(3.0).unwrap() - ZETA3).abs() < 1e-15);
    assert!((dirichlet_eta(3.0).unwrap() - 0.75 * ZETA3).abs() < 1e-15);
    assert!((riemann_zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
}

#[test]
fn mathieu_at_zero_and_brute_force() {
    let s = SumControl::default();
    assert!((mathieu(2.0, 0.0, false, &s).unwrap().value.re - 2.0 * ZETA3).abs() < 1e-13);
    // S₂(x) = Σ 2n/(n²+x²)²
    let x = 0.9;
    let n = 400_000;
    let mut b = 0.0;
    for k in (1..=n).rev() {
        let k = k as f64;
        b += 2.0 * k / (k * k + x * x).powi(2);
    }
    b += 1.0 / (n as f64).powi(2); // ∫_N^∞ 2t/t⁴ dt
    let v = mathieu(2.0, x, false, &s).unwrap().value.re;
    assert!((v - b).abs() < 1e-12, "{v} vs {b}");
}

#[test]
fn conjugate_and_fractional_values_from_polylog() {
    // values of the Fourier series computed with Li_s(e^{2πix}) at 30 digits
    let s = SumControl::default();
    let b3 = conj_bernoulli_periodic(1, 0.25, &s).unwrap().value.re;
    assert!((b3 - 0.005_451_775_256_660_174_851).abs() < 1e-14);
    let f = fractional_bernoulli(1.5, 0.3, &s).unwrap().value.re;
    assert!((f + 0.140_038_222_627_372_980_76).abs() < 1e-12);
}
