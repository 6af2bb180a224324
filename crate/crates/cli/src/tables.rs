//! CSV tables for the `table` subcommand. Numbers use `{:.16e}`, which
//! round-trips every f64.

use eiskern::conj_bernoulli::{
    conj_bernoulli_half, conj_bernoulli_half_zeta, conj_bernoulli_number, conj_bernoulli_periodic,
    glaisher_bstar, ramanujan_bstar, zeta_even_euler, zeta_odd_via_conj,
};
use eiskern::numkern::riemann_zeta_series;
use eiskern::omega::{omega_moment, MomentRoute};
use eiskern::SumControl;

use crate::suites::{EULER_P, EULER_Q};
use crate::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    Moments,
    ConjBernoulli,
    ZetaRoundtrip,
    Bstar,
}

fn e(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render(table: Table, sum: &SumControl) -> CliResult<String> {
    let mut out = String::new();
    match table {
        Table::Moments => {
            out.push_str("k,closed,quadrature,series\n");
            for k in 0..=15usize {
                out.push_str(&format!(
                    "{k},{},{},{}\n",
                    e(omega_moment(k, MomentRoute::Closed)?),
                    e(omega_moment(k, MomentRoute::Quadrature)?),
                    e(omega_moment(k, MomentRoute::Series)?)
                ));
            }
        }
        Table::ConjBernoulli => {
            out.push_str("m,half_eta,half_zeta,half_fourier,number\n");
            for m in 0..=10usize {
                let number = if m == 0 {
                    String::new()
                } else {
                    e(conj_bernoulli_number(m)?)
                };
                out.push_str(&format!(
                    "{m},{},{},{},{number}\n",
                    e(conj_bernoulli_half(m)?),
                    e(conj_bernoulli_half_zeta(m)?),
                    e(conj_bernoulli_periodic(m, 0.5, sum)?.value.re)
                ));
            }
        }
        Table::ZetaRoundtrip => {
            out.push_str("s,direct,via_bernoulli,rel_diff\n");
            for s in 2..=13usize {
                let direct = riemann_zeta_series(s as f64)?;
                let via = if s % 2 == 0 {
                    zeta_even_euler(s / 2)?
                } else {
                    zeta_odd_via_conj(s / 2)?
                };
                out.push_str(&format!(
                    "{s},{},{},{}\n",
                    e(direct),
                    e(via),
                    e((via - direct).abs() / direct)
                ));
            }
        }
        Table::Bstar => {
            out.push_str("alpha,bstar,glaisher_half_alpha,euler_decimal,abs_diff\n");
            for k in 4..=10usize {
                let a = k as f64 / 2.0;
                let b = ramanujan_bstar(a)?;
                let g = glaisher_bstar(a / 2.0).map(e).unwrap_or_default();
                let euler = match k {
                    6 => Some(EULER_P),
                    10 => Some(EULER_Q),
                    _ => None,
                };
                let (ed, diff) = euler.map(|v| (e(v), e((b - v).abs()))).unwrap_or_default();
                out.push_str(&format!("{},{},{g},{ed},{diff}\n", e(a), e(b)));
            }
        }
    }
    Ok(out)
}
