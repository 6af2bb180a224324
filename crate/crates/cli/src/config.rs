//! Suite configuration: tolerance overrides, the sampling grid, numerical
//! controls, the RNG seed and the worker count.

use std::collections::BTreeMap;
use std::path::Path;

use eiskern::{c, ComplexValue, QuadControl, SumControl};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

/// Upper limit on lattice points, to keep a mistyped step from running for hours.
pub const MAX_GRID_POINTS: usize = 10_000;

/// Environment variable holding the worker count (0 or unset: one per core).
pub const THREADS_ENV: &str = "EISKERN_THREADS";

/// Rectangular lattice in the complex plane. Each point is jittered by at most
/// a quarter step in each direction, so neighbouring points never swap order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub step: f64,
    /// imaginary step; `step` when absent
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im_step: Option<f64>,
}

impl Default for Grid {
    fn default() -> Self {
        // 5 × 4 = 20 points with Re z ∈ (0, 1), |Im z| ≤ 2
        Grid {
            re_min: 0.1,
            re_max: 0.9,
            im_min: -1.5,
            im_max: 1.5,
            step: 0.2,
            im_step: Some(1.0),
        }
    }
}

fn axis_len(lo: f64, hi: f64, step: f64) -> usize {
    ((hi - lo) / step + 1e-9).floor() as usize + 1
}

impl Grid {
    /// `re_min,re_max,im_min,im_max,step[,im_step]`
    pub fn parse(s: &str) -> CliResult<Grid> {
        let v: Vec<f64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Config(format!("grid component '{t}' is not a number")))
            })
            .collect::<CliResult<_>>()?;
        if v.len() != 5 && v.len() != 6 {
            return Err(CliError::Config(format!(
                "grid needs re_min,re_max,im_min,im_max,step[,im_step]; got {} values",
                v.len()
            )));
        }
        let g = Grid {
            re_min: v[0],
            re_max: v[1],
            im_min: v[2],
            im_max: v[3],
            step: v[4],
            im_step: v.get(5).copied(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn im_step(&self) -> f64 {
        self.im_step.unwrap_or(self.step)
    }

    pub fn validate(&self) -> CliResult<()> {
        let vals = [
            self.re_min,
            self.re_max,
            self.im_min,
            self.im_max,
            self.step,
            self.im_step(),
        ];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Config("grid values must be finite".into()));
        }
        if self.step <= 0.0 || self.im_step() <= 0.0 {
            return Err(CliError::Config("grid steps must be positive".into()));
        }
        if self.re_min > self.re_max || self.im_min > self.im_max {
            return Err(CliError::Config(
                "grid bounds must satisfy min <= max".into(),
            ));
        }
        let nr = (self.re_max - self.re_min) / self.step;
        let ni = (self.im_max - self.im_min) / self.im_step();
        if (nr + 1.0) * (ni + 1.0) > MAX_GRID_POINTS as f64 {
            return Err(CliError::Config(format!(
                "grid has more than {MAX_GRID_POINTS} points"
            )));
        }
        Ok(())
    }

    /// Jittered lattice points in row-major order (real part fastest).
    pub fn points(&self, rng: &mut ChaCha8Rng) -> Vec<ComplexValue> {
        let (hs, vs) = (self.step, self.im_step());
        let nr = axis_len(self.re_min, self.re_max, hs);
        let ni = axis_len(self.im_min, self.im_max, vs);
        let mut out = Vec::with_capacity(nr * ni);
        for j in 0..ni {
            for i in 0..nr {
                let dx: f64 = rng.gen_range(-0.25..0.25);
                let dy: f64 = rng.gen_range(-0.25..0.25);
                let x = self.re_min + i as f64 * hs + dx * hs;
                let y = self.im_min + j as f64 * vs + dy * vs;
                out.push(c(x, y));
            }
        }
        out
    }
}

/// Everything a suite run depends on. Two runs with equal configs produce
/// byte-identical reports (wall times are zeroed unless `timing` is set).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// suite name → tolerance applied to every record of that suite
    pub tolerance_overrides: BTreeMap<String, f64>,
    pub grid: Grid,
    pub sum_control: SumControl,
    pub quad_control: QuadControl,
    pub seed: u64,
    /// 0 means one worker per core
    pub threads: usize,
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            tolerance_overrides: BTreeMap::new(),
            grid: Grid::default(),
            sum_control: SumControl::default(),
            quad_control: QuadControl::default(),
            seed: 1,
            threads: 0,
            timing: false,
        }
    }
}

/// FNV-1a; stable across platforms and releases, unlike `DefaultHasher`.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

impl SuiteConfig {
    pub fn from_json_file(path: &Path) -> CliResult<SuiteConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> CliResult<()> {
        self.grid.validate()?;
        self.sum_control
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;
        self.quad_control
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;
        for (name, tol) in &self.tolerance_overrides {
            if !(tol.is_finite() && *tol >= 0.0) {
                return Err(CliError::Config(format!(
                    "tolerance for {name} must be a finite non-negative number"
                )));
            }
        }
        Ok(())
    }

    /// Per-suite generator: depends only on the seed and the suite name, so
    /// suite order and thread count do not affect the sampled points.
    pub fn rng(&self, suite: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(suite))
    }

    pub fn grid_points(&self, suite: &str) -> Vec<ComplexValue> {
        self.grid.points(&mut self.rng(suite))
    }

    /// Worker count from the config, else from the environment.
    pub fn resolve_threads(&self) -> CliResult<usize> {
        if self.threads != 0 {
            return Ok(self.threads);
        }
        match std::env::var(THREADS_ENV) {
            Ok(v) => v.trim().parse::<usize>().map_err(|_| {
                CliError::Config(format!("{THREADS_ENV}='{v}' is not a non-negative integer"))
            }),
            Err(_) => Ok(0),
        }
    }
}

/// `NAME=VALUE`
pub fn parse_tol_override(s: &str) -> CliResult<(String, f64)> {
    let (name, val) = s
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("--tol expects NAME=VALUE, got '{s}'")))?;
    let tol: f64 = val
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("--tol value '{val}' is not a number")))?;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Config(format!(
            "--tol value {tol} must be finite and >= 0"
        )));
    }
    Ok((name.trim().to_string(), tol))
}
