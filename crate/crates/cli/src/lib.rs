//! Verification harness for `eiskern`: named identity suites with JSON
//! reports, single-function evaluation, tables and plot data.
//!
//! The binary is a thin wrapper over [`app::run`], which never exits the
//! process itself so that tests can drive it in-process.

pub mod app;
pub mod config;
pub mod eval;
pub mod plotdata;
pub mod report;
pub mod suites;
pub mod tables;

use thiserror::Error;

/// Exit status: every gating record passed.
pub const EXIT_OK: i32 = 0;
/// Exit status: at least one gating record failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: bad configuration, usage or argument domain.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Eval(#[from] eiskern::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_FAIL,
            _ => EXIT_CONFIG,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// `-1.5e-3`, `2i`, `-i`, `0.3-1.2i`, `1e-3+2e2i`.
pub fn parse_complex(s: &str) -> CliResult<eiskern::ComplexValue> {
    let bad = || CliError::Usage(format!("cannot parse '{s}' as a number"));
    let t = s.trim();
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        let v: f64 = t.parse().map_err(|_| bad())?;
        return Ok(eiskern::c(v, 0.0));
    };
    let bytes = body.as_bytes();
    // last sign that is neither leading nor part of an exponent
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let unit = |txt: &str| -> CliResult<f64> {
        match txt {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => txt.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re: f64 = body[..k].parse().map_err(|_| bad())?;
            Ok(eiskern::c(re, unit(&body[k..])?))
        }
        None => Ok(eiskern::c(0.0, unit(body)?)),
    }
}

/// Parse a real argument; a complex literal with nonzero imaginary part is rejected.
pub fn parse_real(s: &str) -> CliResult<f64> {
    let z = parse_complex(s)?;
    if z.im != 0.0 {
        return Err(CliError::Usage(format!("'{s}' must be real")));
    }
    Ok(z.re)
}
