use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::zeta::riemann_zeta;

/// Largest index held in the exact cache.
pub const BERNOULLI_CACHE: usize = 64;

struct Cache {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| {
        let exact = bernoulli_table(BERNOULLI_CACHE);
        let float = exact
            .iter()
            .map(|b| b.to_f64().unwrap_or(f64::NAN))
            .collect();
        Cache { exact, float }
    })
}

/// B_0..=B_n from `Σ_{k=0}^{n} C(n+1, k) B_k = 0` (convention B_1 = −½).
fn bernoulli_table(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        // binomials C(m+1, k), k = 0..m
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * bk;
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Exact Bernoulli number B_n as a rational.
pub fn bernoulli_number_exact(n: usize) -> BigRational {
    if n <= BERNOULLI_CACHE {
        cache().exact[n].clone()
    } else if n % 2 == 1 {
        BigRational::zero()
    } else {
        bernoulli_table(n).pop().expect("table has n+1 entries")
    }
}

/// Bernoulli number B_n as a double (B_1 = −½, B_{2m+1} = 0 for m ≥ 1).
pub fn bernoulli_number(n: usize) -> f64 {
    if n <= BERNOULLI_CACHE {
        return cache().float[n];
    }
    if n % 2 == 1 {
        return 0.0;
    }
    // |B_n| = 2 n! ζ(n) / (2π)^n, accumulated as a product to delay overflow
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut mag = 2.0 * riemann_zeta(n as f64).unwrap_or(1.0);
    for j in 1..=n {
        mag *= j as f64 / two_pi;
    }
    if (n / 2) % 2 == 1 {
        mag
    } else {
        -mag
    }
}

/// Bernoulli polynomial B_n(x) = Σ_k C(n,k) B_k x^{n−k}.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        let bk = bernoulli_number(k);
        if bk != 0.0 {
            acc += binom * bk * x.powi((n - k) as i32);
        }
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number_exact(0), rat(1, 1));
        assert_eq!(bernoulli_number_exact(1), rat(-1, 2));
        assert_eq!(bernoulli_number_exact(2), rat(1, 6));
        assert_eq!(bernoulli_number_exact(4), rat(-1, 30));
        assert_eq!(bernoulli_number_exact(7), rat(0, 1));
        assert_eq!(bernoulli_number_exact(12), rat(-691, 2730));
        assert_eq!(bernoulli_number(7), 0.0);
    }

    #[test]
    fn recurrence_closure_exact() {
        for n in 2..=20usize {
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += BigRational::from_integer(binom.clone()) * bernoulli_number_exact(k);
                binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn beyond_cache_matches_zeta_formula() {
        let exact = bernoulli_number_exact(70).to_f64().unwrap();
        let approx = bernoulli_number(70);
        assert!(((approx - exact) / exact).abs() < 1e-13);
        assert_eq!(bernoulli_number_exact(71), rat(0, 1));
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_poly(0, 0.3), 1.0);
        assert!((bernoulli_poly(1, 0.25) + 0.25).abs() < 1e-16);
        assert!((bernoulli_poly(2, 0.0) - 1.0 / 6.0).abs() < 1e-16);
        // B_3(x) = x³ − 3x²/2 + x/2
        let x: f64 = 0.25;
        let b3 = x.powi(3) - 1.5 * x * x + 0.5 * x;
        assert!((bernoulli_poly(3, x) - b3).abs() < 1e-16);
        assert!((b3 - 0.046875).abs() < 1e-17);
    }
}
