use num_complex::Complex64;

use super::bernoulli::bernoulli_number;
use crate::accel;
use crate::error::{Error, Result};
use crate::types::{ensure_finite_real, SumControl, LN_2, PI};

/// Above this exponent the Dirichlet series is summed directly.
const DIRECT_EXPONENT: f64 = 30.0;

fn inner_control() -> SumControl {
    SumControl {
        max_terms: 1 << 20,
        rel_tol: 4e-15,
        accelerate: true,
    }
}

fn direct_dirichlet(s: f64, alternating: bool) -> f64 {
    let mut acc = 0.0;
    let mut n = 1u32;
    loop {
        let t = (n as f64).powf(-s);
        if t < 1e-20 {
            break;
        }
        if alternating && n % 2 == 0 {
            acc -= t;
        } else {
            acc += t;
        }
        n += 1;
    }
    acc
}

/// η(s) = Σ_{n≥1} (−1)^{n−1} n^{−s}; η(1) = log 2.
pub fn dirichlet_eta(s: f64) -> Result<f64> {
    ensure_finite_real(s, "dirichlet_eta")?;
    if s <= 0.0 {
        return Err(Error::domain(format!(
            "dirichlet_eta requires s > 0, got {s}"
        )));
    }
    if s == 1.0 {
        return Ok(LN_2);
    }
    if s >= DIRECT_EXPONENT {
        return Ok(direct_dirichlet(s, true));
    }
    let sum = accel::alternating(
        1,
        64,
        |k| Complex64::new((k as f64).powf(-s), 0.0),
        &inner_control(),
    )?;
    Ok(-sum.value.re)
}

/// ζ(2m) = (−1)^{m+1} B_{2m} (2π)^{2m} / (2 (2m)!).
pub(crate) fn zeta_even_closed(m: u32) -> f64 {
    let n = 2 * m as usize;
    let mut scale = 1.0;
    for j in 1..=n {
        scale *= 2.0 * PI / j as f64;
    }
    let v = bernoulli_number(n) * scale / 2.0;
    if m % 2 == 1 {
        v
    } else {
        -v
    }
}

/// ζ(s) through the accelerated alternating series, η(s)/(1 − 2^{1−s}),
/// with no special treatment of even integers.
pub fn riemann_zeta_series(s: f64) -> Result<f64> {
    ensure_finite_real(s, "riemann_zeta")?;
    if s <= 1.0 {
        return Err(Error::domain(format!(
            "riemann_zeta requires s > 1, got {s}"
        )));
    }
    if s >= DIRECT_EXPONENT {
        return Ok(direct_dirichlet(s, false));
    }
    let eta = dirichlet_eta(s)?;
    // 1 − 2^{1−s}, accurate near s = 1
    let factor = -((1.0 - s) * LN_2).exp_m1();
    Ok(eta / factor)
}

/// ζ(s) for real s > 1; exact Euler form at even integers.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    ensure_finite_real(s, "riemann_zeta")?;
    if s <= 1.0 {
        return Err(Error::domain(format!(
            "riemann_zeta requires s > 1, got {s}"
        )));
    }
    if s < DIRECT_EXPONENT && s == s.round() && (s as u32) % 2 == 0 {
        return Ok(zeta_even_closed(s as u32 / 2));
    }
    riemann_zeta_series(s)
}

/// λ(r) = Σ_{k≥0} (2k+1)^{−r} = (1 − 2^{−r}) ζ(r).
pub fn dirichlet_lambda(r: f64) -> Result<f64> {
    ensure_finite_real(r, "dirichlet_lambda")?;
    if r <= 1.0 {
        return Err(Error::domain(format!(
            "dirichlet_lambda requires r > 1, got {r}"
        )));
    }
    Ok(-(-r * LN_2).exp_m1() * riemann_zeta(r)?)
}

/// Hurwitz ζ(s, a) = Σ_{k≥0} (a+k)^{−s} for real s > 1, a > 0, by direct
/// summation up to a shifted base followed by Euler–Maclaurin.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !(a > 0.0) || !s.is_finite() || !a.is_finite() {
        return Err(Error::domain(format!(
            "hurwitz_zeta requires s > 1, a > 0 (got s = {s}, a = {a})"
        )));
    }
    let base = 20.0_f64.max(s);
    let mut b = a;
    let mut head = 0.0;
    while b < base {
        head += b.powf(-s);
        b += 1.0;
    }
    let bs = b.powf(-s);
    let mut tail = b * bs / (s - 1.0) + 0.5 * bs;
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · b^{−s−2j+1}
    let mut poch = s;
    let mut fact = 2.0;
    let mut pow = bs / b;
    let mut prev = f64::INFINITY;
    for j in 1..=30usize {
        let t = bernoulli_number(2 * j) / fact * poch * pow;
        if t.abs() > prev {
            break;
        }
        tail += t;
        if t.abs() < 1e-18 * tail.abs() {
            break;
        }
        prev = t.abs();
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
        pow /= b * b;
    }
    Ok(head + tail)
}

/// Σ_{n>N} n^{−p} (1 + x²/n²)^{−r} by binomial expansion in Hurwitz ζ values.
/// Requires N + 1 ≥ 2|x| so that the expansion ratio is at most ¼.
pub(crate) fn power_tail(n: usize, p: f64, r: f64, x: f64) -> Result<f64> {
    let a = (n + 1) as f64;
    if a < 2.0 * x.abs() {
        return Err(Error::domain("power_tail: cut-off too small"));
    }
    let x2 = x * x;
    let mut coef = 1.0;
    let mut acc = 0.0;
    for j in 0..200usize {
        let z = hurwitz_zeta(p + 2.0 * j as f64, a)?;
        let t = coef * z;
        acc += t;
        if t.abs() <= 1e-18 * acc.abs() || coef == 0.0 {
            break;
        }
        // binom(−r, j+1) x^{2j+2}
        coef *= -(r + j as f64) / (j + 1) as f64 * x2;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zeta_values() {
        assert_relative_eq!(
            riemann_zeta(2.0).unwrap(),
            PI * PI / 6.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            riemann_zeta(4.0).unwrap(),
            PI.powi(4) / 90.0,
            max_relative = 1e-15
        );
        for (s, v) in [
            (3.0, 1.2020569031595942854),
            (1.5, 2.6123753486854883433),
            (2.5, 1.3414872572509171798),
            (3.2, 1.1667733709844669926),
            (5.0, 1.0369277551433699263),
            (7.0, 1.0083492773819228268),
        ] {
            assert_relative_eq!(riemann_zeta(s).unwrap(), v, max_relative = 2e-15);
        }
        assert_relative_eq!(
            riemann_zeta_series(2.0).unwrap(),
            PI * PI / 6.0,
            max_relative = 1e-14
        );
        assert!(riemann_zeta(1.0).is_err());
    }

    #[test]
    fn eta_and_lambda() {
        assert_eq!(dirichlet_eta(1.0).unwrap(), LN_2);
        assert_relative_eq!(
            dirichlet_eta(2.0).unwrap(),
            PI * PI / 12.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            dirichlet_eta(3.0).unwrap(),
            0.90154267736969571405,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            dirichlet_eta(0.5).unwrap(),
            0.60489864342163037025,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            dirichlet_lambda(2.0).unwrap(),
            PI * PI / 8.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            dirichlet_lambda(4.0).unwrap(),
            PI.powi(4) / 96.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            dirichlet_lambda(3.0).unwrap(),
            1.0517997902646449997,
            max_relative = 1e-15
        );
        assert!(dirichlet_eta(0.0).is_err());
        assert!(dirichlet_lambda(1.0).is_err());
    }

    #[test]
    fn hurwitz_reduces_to_riemann() {
        assert_relative_eq!(
            hurwitz_zeta(3.0, 1.0).unwrap(),
            1.2020569031595942854,
            max_relative = 1e-15
        );
        // ζ(2, ½) = π²/2
        assert_relative_eq!(
            hurwitz_zeta(2.0, 0.5).unwrap(),
            PI * PI / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn tail_matches_brute_force() {
        let (p, r, x, n) = (3.0, 1.5, 2.0, 10usize);
        let brute: f64 = (n + 1..200_000)
            .map(|k| {
                let k = k as f64;
                k.powf(-p) * (1.0 + x * x / (k * k)).powf(-r)
            })
            .sum();
        let rest = 0.5 / (200_000f64).powi(2);
        assert_relative_eq!(
            power_tail(n, p, r, x).unwrap(),
            brute + rest,
            max_relative = 1e-9
        );
    }
}
