use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex argument/result type used throughout the crate.
pub type ComplexValue = Complex64;

pub const PI: f64 = std::f64::consts::PI;
pub const LN_2: f64 = std::f64::consts::LN_2;
/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

#[inline]
pub const fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

pub(crate) fn ensure_finite(z: ComplexValue, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what}: non-finite argument {z}")))
    }
}

pub(crate) fn ensure_finite_real(x: f64, what: &str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what}: non-finite argument {x}")))
    }
}

/// Controls for bilateral/alternating series summation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumControl {
    pub max_terms: usize,
    pub rel_tol: f64,
    pub accelerate: bool,
}

impl SumControl {
    pub fn new(max_terms: usize, rel_tol: f64, accelerate: bool) -> Result<Self> {
        let ctl = SumControl {
            max_terms,
            rel_tol,
            accelerate,
        };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 8 {
            return Err(Error::Control(format!(
                "max_terms = {} (need >= 8)",
                self.max_terms
            )));
        }
        if !(self.rel_tol >= 16.0 * f64::EPSILON) {
            return Err(Error::Control(format!(
                "rel_tol = {:e} (need >= 16 eps)",
                self.rel_tol
            )));
        }
        Ok(())
    }
}

impl Default for SumControl {
    fn default() -> Self {
        SumControl {
            max_terms: 1 << 20,
            rel_tol: 1e-13,
            accelerate: true,
        }
    }
}

/// Controls for adaptive Gauss–Legendre quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadControl {
    pub panel_nodes: usize,
    pub max_depth: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl QuadControl {
    pub fn new(panel_nodes: usize, max_depth: usize, abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let ctl = QuadControl {
            panel_nodes,
            max_depth,
            abs_tol,
            rel_tol,
        };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if self.panel_nodes < 5 {
            return Err(Error::Control(format!(
                "panel_nodes = {} (need >= 5)",
                self.panel_nodes
            )));
        }
        if self.max_depth < 1 {
            return Err(Error::Control("max_depth must be >= 1".into()));
        }
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Control("tolerances must be positive".into()));
        }
        Ok(())
    }
}

impl Default for QuadControl {
    fn default() -> Self {
        QuadControl {
            panel_nodes: 20,
            max_depth: 40,
            abs_tol: 1e-15,
            rel_tol: 1e-14,
        }
    }
}

/// The representation an evaluation was computed through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Direct,
    Closed,
    Polygamma,
    Integral,
    IntegralHyperbolic,
    Taylor,
    RealAxis,
    ViaEisenstein,
    ViaCoth,
    Quadrature,
    Digamma,
    PartialFraction,
    TaylorMoments,
    TaylorEta,
    Series,
    Fourier,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Closed => "closed",
            Route::Polygamma => "polygamma",
            Route::Integral => "integral",
            Route::IntegralHyperbolic => "integral_hyperbolic",
            Route::Taylor => "taylor",
            Route::RealAxis => "real_axis",
            Route::ViaEisenstein => "via_eisenstein",
            Route::ViaCoth => "via_coth",
            Route::Quadrature => "quadrature",
            Route::Digamma => "digamma",
            Route::PartialFraction => "partial_fraction",
            Route::TaylorMoments => "taylor_moments",
            Route::TaylorEta => "taylor_eta",
            Route::Series => "series",
            Route::Fourier => "fourier",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value together with its a posteriori error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: ComplexValue,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub route: Route,
}

impl Evaluation {
    pub fn exact(value: ComplexValue, route: Route) -> Self {
        Evaluation {
            value,
            err_estimate: 0.0,
            terms_used: 0,
            route,
        }
    }
}
