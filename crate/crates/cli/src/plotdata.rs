//! Plot data for the two figures: Ω with its bounds on [−8, 8], and the
//! same curves near x = 500 in log space (Ω itself overflows there).

use eiskern::c;
use eiskern::omega::{omega_bound_formulas, omega_digamma, omega_log_space};

use crate::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
}

fn e(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render(fig: Figure) -> CliResult<String> {
    let mut out = String::new();
    match fig {
        Figure::Fig1 => {
            // bound formulas as written for x ≥ 0; for x < 0 they swap roles
            out.push_str("x,omega,lower,upper\n");
            for i in 0..=320 {
                let x = (i as f64 - 160.0) / 20.0;
                let om = omega_digamma(c(x, 0.0))?.re;
                let (lo, hi) = omega_bound_formulas(x);
                out.push_str(&format!("{},{},{},{}\n", e(x), e(om), e(lo), e(hi)));
            }
        }
        Figure::Fig2 => {
            out.push_str(
                "x,omega_log_abs,omega_sign,lower_log_abs,lower_sign,upper_log_abs,upper_sign,approx_log_abs,approx_sign\n",
            );
            for i in 0..=400 {
                let x = 500.0 + i as f64 / 100.0;
                let v = omega_log_space(x)?;
                out.push_str(&e(x));
                for lv in v {
                    out.push_str(&format!(",{},{}", e(lv.log_abs), lv.sign));
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}
