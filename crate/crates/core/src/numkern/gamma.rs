use num_complex::Complex64;

use super::bernoulli::bernoulli_number;
use super::{check_nonpositive_pole, factorial};
use crate::accel::Neumaier;
use crate::error::{Error, Result};
use crate::types::{ensure_finite, ComplexValue, PI};

/// Stirling terms used once Re w ≥ 10; B_24/(24·23·10^23) < 1e−20.
const STIRLING_TERMS: usize = 12;

fn reduce_integer(z: Complex64) -> (Complex64, f64) {
    let n = z.re.round();
    (Complex64::new(z.re - n, z.im), n)
}

/// cot(πz), via q = e^{±2πiz} with |q| ≤ 1 so that large |Im z| is stable.
pub fn cot_pi(z: ComplexValue) -> ComplexValue {
    let (r, _) = reduce_integer(z);
    if r.im == 0.0 {
        let a = PI * r.re;
        return Complex64::new(a.cos() / a.sin(), 0.0);
    }
    let i = Complex64::i();
    if r.im > 0.0 {
        let q = (2.0 * PI * i * r).exp();
        i * (q + 1.0) / (q - 1.0)
    } else {
        let p = (-2.0 * PI * i * r).exp();
        i * (1.0 + p) / (1.0 - p)
    }
}

/// 1/sin²(πz), stable for large |Im z|.
pub fn csc2_pi(z: ComplexValue) -> ComplexValue {
    let (r, _) = reduce_integer(z);
    if r.im == 0.0 {
        let s = (PI * r.re).sin();
        return Complex64::new(1.0 / (s * s), 0.0);
    }
    let i = Complex64::i();
    let q = if r.im > 0.0 {
        (2.0 * PI * i * r).exp()
    } else {
        (-2.0 * PI * i * r).exp()
    };
    let d = 1.0 - q;
    -4.0 * q / (d * d)
}

/// sin(πz) with the integer part removed exactly before scaling by π.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let (r, n) = reduce_integer(z);
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.re < 10.0 {
        prod *= w;
        w += 1.0;
    }
    let mut series = Complex64::new(0.0, 0.0);
    let w2 = w * w;
    let mut wpow = w;
    for k in 1..=STIRLING_TERMS {
        let b = bernoulli_number(2 * k);
        series += b / ((2 * k * (2 * k - 1)) as f64 * wpow);
        wpow *= w2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - prod.ln()
}

/// Γ(z), principal branch.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "gamma")?;
    check_nonpositive_pole(z, "gamma")?;
    if z.im == 0.0 && z.re == z.re.round() && (1.0..=171.0).contains(&z.re) {
        return Ok(Complex64::new(factorial(z.re as u32 - 1), 0.0));
    }
    if z.re < 0.5 {
        let g = gamma(1.0 - z)?;
        let v = PI / (sin_pi(z) * g);
        return Ok(if z.im == 0.0 {
            Complex64::new(v.re, 0.0)
        } else {
            v
        });
    }
    let v = ln_gamma_right(z).exp();
    Ok(if z.im == 0.0 {
        Complex64::new(v.re, 0.0)
    } else {
        v
    })
}

fn digamma_asymptotic(w: Complex64) -> Complex64 {
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut acc = w.ln() - 0.5 * inv;
    let mut p = inv2;
    for k in 1..=STIRLING_TERMS {
        acc -= bernoulli_number(2 * k) / (2 * k) as f64 * p;
        p *= inv2;
    }
    acc
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma(z: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(z, "digamma")?;
    check_nonpositive_pole(z, "digamma")?;
    if z.re < 0.0 {
        // ψ(z) = ψ(1−z) − π cot(πz)
        return Ok(digamma(1.0 - z)? - PI * cot_pi(z));
    }
    let mut w = z;
    let mut acc = Neumaier::new();
    while w.re < 10.0 {
        acc.add(1.0 / w);
        w += 1.0;
    }
    let v = digamma_asymptotic(w) - acc.value();
    Ok(if z.im == 0.0 {
        Complex64::new(v.re, 0.0)
    } else {
        v
    })
}

fn polygamma_asymptotic(r: u32, w: Complex64) -> Complex64 {
    let ru = r as usize;
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let inv_r = inv.powi(r as i32);
    let mut acc = factorial(r - 1) * inv_r + factorial(r) * 0.5 * inv_r * inv;
    let mut p = inv_r * inv2;
    // (2k+r−1)!/(2k)!
    let mut ratio = 1.0;
    for j in 1..ru {
        ratio *= (2 + j) as f64;
    }
    for k in 1..=40usize {
        if k > 1 {
            // advance (2k+r−1)!/(2k)! from k−1 to k
            let a = (2 * k + ru - 2) as f64 * (2 * k + ru - 1) as f64;
            let b = (2 * k - 1) as f64 * (2 * k) as f64;
            ratio *= a / b;
        }
        let t = bernoulli_number(2 * k) * ratio * p;
        acc += t;
        if t.norm() <= 1e-18 * acc.norm() {
            break;
        }
        p *= inv2;
    }
    if r % 2 == 1 {
        acc
    } else {
        -acc
    }
}

/// ψ_r(z), the r-th derivative of ψ; r = 0 returns ψ itself.
pub fn polygamma(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    if r == 0 {
        return digamma(z);
    }
    if r > 100 {
        return Err(Error::domain(format!("polygamma order {r} too large")));
    }
    ensure_finite(z, "polygamma")?;
    check_nonpositive_pole(z, "polygamma")?;
    let threshold = 20.0 + 2.0 * r as f64;
    let mut w = z;
    let mut acc = Neumaier::new();
    let e = -(r as i32 + 1);
    while w.re < threshold {
        acc.add(w.powi(e));
        w += 1.0;
    }
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    let v = sign * factorial(r) * acc.value() + polygamma_asymptotic(r, w);
    Ok(if z.im == 0.0 {
        Complex64::new(v.re, 0.0)
    } else {
        v
    })
}
