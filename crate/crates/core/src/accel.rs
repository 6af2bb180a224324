//! Series summation with convergence acceleration.
//!
//! Two accelerators are provided:
//!
//! - [`weighted_euler`] sums `Σ_{k≥start} t_k` where `t_k = w^k a_k` with `a_k`
//!   smooth in `k` and `|w| = 1, w ≠ 1`. Repeated application of
//!   `T_n = (S_{n+1} − w S_n)/(1 − w)` to the partial sums is the classical Euler
//!   transformation (plain averaging for `w = −1`).
//! - [`richardson_symmetric`] extrapolates symmetric partial sums
//!   `Σ_{|k|≤N} t_k`, whose error has an asymptotic expansion in powers of `1/N`.

use crate::error::{Error, Result};
use crate::types::{ComplexValue, SumControl};
use num_complex::Complex64;

/// Maximum number of transform stages applied to one window of partial sums.
pub const EULER_STAGES: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: ComplexValue,
    pub err: f64,
    pub terms: usize,
}

/// Compensated (Neumaier) accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: Complex64,
    comp: Complex64,
}

#[inline]
fn two_sum(acc: &mut f64, comp: &mut f64, x: f64) {
    let t = *acc + x;
    if acc.abs() >= x.abs() {
        *comp += (*acc - t) + x;
    } else {
        *comp += (x - t) + *acc;
    }
    *acc = t;
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        two_sum(&mut self.sum.re, &mut self.comp.re, x.re);
        two_sum(&mut self.sum.im, &mut self.comp.im, x.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

/// Outcome of applying transform stages to one window of partial sums.
struct Transformed {
    value: Complex64,
    err: f64,
}

/// Apply up to `EULER_STAGES` weighted Euler stages and keep the stage whose
/// change from its predecessor is smallest; that change is the error estimate.
fn euler_stages(sums: &[Complex64], w: Complex64) -> Transformed {
    let denom = Complex64::new(1.0, 0.0) - w;
    let mut row = sums.to_vec();
    let last = |r: &[Complex64]| r[r.len() - 1];
    let mut prev = last(&row);
    let mut best = Transformed {
        value: prev,
        err: f64::INFINITY,
    };
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = (row[i + 1] - w * row[i]) / denom;
        }
        row.pop();
        let cur = last(&row);
        let diff = (cur - prev).norm();
        if diff < best.err {
            best = Transformed {
                value: cur,
                err: diff,
            };
        } else if diff > 4.0 * best.err && best.err.is_finite() {
            // rounding noise now dominates
            break;
        }
        prev = cur;
    }
    best
}

/// Iterated Aitken Δ² on a window of partial sums.
fn aitken(sums: &[Complex64]) -> Transformed {
    let mut row = sums.to_vec();
    let mut prev = row[row.len() - 1];
    let mut best = Transformed {
        value: prev,
        err: f64::INFINITY,
    };
    while row.len() >= 3 {
        let mut next = Vec::with_capacity(row.len() - 2);
        for i in 0..row.len() - 2 {
            let d = row[i + 2] - row[i + 1];
            let d2 = d - (row[i + 1] - row[i]);
            if d2.norm() == 0.0 {
                next.push(row[i + 2]);
            } else {
                next.push(row[i + 2] - d * d / d2);
            }
        }
        row = next;
        let cur = row[row.len() - 1];
        let diff = (cur - prev).norm();
        if diff < best.err {
            best = Transformed {
                value: cur,
                err: diff,
            };
        }
        prev = cur;
    }
    best
}

/// `|t_k|` non-increasing over the window (up to rounding).
fn eventually_monotone(terms: &[Complex64]) -> bool {
    terms
        .windows(2)
        .all(|p| p[1].norm() <= p[0].norm() * (1.0 + 1e-12))
}

/// Sum `Σ_{k≥start} term(k)` where `term(k) = w^k a_k` with smooth `a_k`.
///
/// The window of partial sums starts at index `n0` (at least `start + 8`) and
/// is doubled until the stage-difference estimate meets `ctl.rel_tol`
/// relative to the largest partial sum seen.
pub fn weighted_euler<F>(
    w: Complex64,
    start: usize,
    n0: usize,
    term: F,
    ctl: &SumControl,
) -> Result<SeriesSum>
where
    F: Fn(usize) -> Complex64,
{
    ctl.validate()?;
    let mut n = n0.max(start + 8);
    let mut acc = Neumaier::new();
    let mut next_k = start;
    let mut last_estimate = f64::INFINITY;
    loop {
        let window_end = n + EULER_STAGES;
        if window_end - start > ctl.max_terms {
            return Err(Error::NonConvergence {
                terms: next_k - start,
                estimate: last_estimate,
                target: ctl.rel_tol,
            });
        }
        while next_k <= n {
            acc.add(term(next_k));
            next_k += 1;
        }
        let mut win_acc = acc;
        let mut sums = Vec::with_capacity(EULER_STAGES + 1);
        let mut terms = Vec::with_capacity(EULER_STAGES + 1);
        sums.push(win_acc.value());
        for k in n + 1..=window_end {
            let t = term(k);
            win_acc.add(t);
            terms.push(t);
            sums.push(win_acc.value());
        }
        let scale = sums.iter().map(|s| s.norm()).fold(0.0_f64, f64::max);
        let used = window_end + 1 - start;
        let out = if !ctl.accelerate {
            Transformed {
                value: sums[sums.len() - 1],
                err: terms[terms.len() - 1].norm(),
            }
        } else if eventually_monotone(&terms) {
            euler_stages(&sums, w)
        } else {
            aitken(&sums)
        };
        let target = ctl.rel_tol * scale.max(out.value.norm());
        if out.err <= target || (scale == 0.0 && out.err == 0.0) {
            return Ok(SeriesSum {
                value: out.value,
                err: out.err,
                terms: used,
            });
        }
        last_estimate = out.err / scale.max(f64::MIN_POSITIVE);
        n *= 2;
    }
}

/// Alternating case `Σ_{k≥start} (−1)^k a_k`; `a(k)` excludes the sign.
pub fn alternating<F>(start: usize, n0: usize, a: F, ctl: &SumControl) -> Result<SeriesSum>
where
    F: Fn(usize) -> Complex64,
{
    weighted_euler(
        Complex64::new(-1.0, 0.0),
        start,
        n0,
        |k| if k % 2 == 0 { a(k) } else { -a(k) },
        ctl,
    )
}

/// Richardson extrapolation of `P_N = term(0) + Σ_{k=1}^{N} (term(k) + term(−k))`
/// at `N = n0·2^j`, `j < levels`, assuming `P_N − P_∞ ~ Σ_{p≥1} c_p N^{−p}`.
pub fn richardson_symmetric<F>(n0: usize, levels: usize, term: F) -> SeriesSum
where
    F: Fn(i64) -> Complex64,
{
    let levels = levels.max(2);
    let mut acc = Neumaier::new();
    acc.add(term(0));
    let mut upto: i64 = 0;
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(levels);
    for j in 0..levels {
        let n = (n0 as i64) << j;
        while upto < n {
            upto += 1;
            acc.add(term(upto));
            acc.add(term(-upto));
        }
        let mut row = Vec::with_capacity(j + 1);
        row.push(acc.value());
        for p in 1..=j {
            let f = (1u64 << p) as f64 - 1.0;
            let prev_row: &Vec<Complex64> = &table[j - 1];
            let v = row[p - 1] + (row[p - 1] - prev_row[p - 1]) / f;
            row.push(v);
        }
        table.push(row);
    }
    let last = &table[levels - 1];
    let prev = &table[levels - 2];
    let value = last[levels - 1];
    let err = (value - last[levels - 2])
        .norm()
        .max((value - prev[levels - 2]).norm());
    SeriesSum {
        value,
        err,
        terms: (2 * upto + 1) as usize,
    }
}
