//! Single-function evaluation for the `eval` subcommand.

use eiskern::conj_bernoulli::{
    conj_bernoulli_half, conj_bernoulli_periodic, fractional_bernoulli, glaisher_bstar,
    ramanujan_bstar,
};
use eiskern::eisenstein::{eisenstein_integral, eisenstein_route, EisensteinRoute, IntegralForm};
use eiskern::hilbert_eisenstein::{he_route, mathieu, mathieu_e, HeRoute};
use eiskern::numkern::{
    bernoulli_number, bernoulli_poly, digamma, dirichlet_eta, dirichlet_lambda, gamma,
    hurwitz_zeta, polygamma, riemann_zeta,
};
use eiskern::omega::{omega, omega_moment, omega_route, MomentRoute, OmegaRoute};
use eiskern::{c, ComplexValue, Evaluation, QuadControl, Route, SumControl};
use serde::Serialize;

use crate::report::Cx;
use crate::{parse_complex, parse_real, CliError, CliResult};

/// Result of one evaluation, printed as text or JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalOutput {
    pub function: String,
    pub args: Vec<String>,
    pub value: Cx,
    pub err_estimate: f64,
    pub terms_used: usize,
    pub route: String,
}

impl EvalOutput {
    pub fn text(&self) -> String {
        let v = self.value;
        let sign = if v.im < 0.0 || (v.im == 0.0 && v.im.is_sign_negative()) {
            '-'
        } else {
            '+'
        };
        format!(
            "{}({}) = {:.16e} {} {:.16e}i   [route {}, err {:.1e}, terms {}]\n",
            self.function,
            self.args.join(", "),
            v.re,
            sign,
            v.im.abs(),
            self.route,
            self.err_estimate,
            self.terms_used
        )
    }
}

pub struct FunctionSpec {
    pub name: &'static str,
    pub usage: &'static str,
    pub routes: &'static [&'static str],
}

pub const FUNCTIONS: &[FunctionSpec] = &[
    FunctionSpec {
        name: "epsilon",
        usage: "epsilon R Z",
        routes: &[
            "direct",
            "closed",
            "polygamma",
            "integral",
            "integral_hyperbolic",
        ],
    },
    FunctionSpec {
        name: "he",
        usage: "he R Z",
        routes: &["direct", "closed", "taylor", "real_axis", "via_eisenstein"],
    },
    FunctionSpec {
        name: "omega",
        usage: "omega Z",
        routes: &[
            "quadrature",
            "digamma",
            "partial_fraction",
            "taylor_moments",
            "taylor_eta",
        ],
    },
    FunctionSpec {
        name: "moment",
        usage: "moment K",
        routes: &["closed", "quadrature", "series"],
    },
    FunctionSpec {
        name: "gamma",
        usage: "gamma Z",
        routes: &[],
    },
    FunctionSpec {
        name: "psi",
        usage: "psi Z",
        routes: &[],
    },
    FunctionSpec {
        name: "polygamma",
        usage: "polygamma N Z",
        routes: &[],
    },
    FunctionSpec {
        name: "zeta",
        usage: "zeta S",
        routes: &[],
    },
    FunctionSpec {
        name: "eta",
        usage: "eta S",
        routes: &[],
    },
    FunctionSpec {
        name: "lambda",
        usage: "lambda S",
        routes: &[],
    },
    FunctionSpec {
        name: "hurwitz",
        usage: "hurwitz S A",
        routes: &[],
    },
    FunctionSpec {
        name: "bernoulli",
        usage: "bernoulli N [X]",
        routes: &[],
    },
    FunctionSpec {
        name: "bstar",
        usage: "bstar ALPHA",
        routes: &[],
    },
    FunctionSpec {
        name: "glaisher",
        usage: "glaisher ALPHA",
        routes: &[],
    },
    FunctionSpec {
        name: "conj_half",
        usage: "conj_half M",
        routes: &[],
    },
    FunctionSpec {
        name: "conj_periodic",
        usage: "conj_periodic N X",
        routes: &[],
    },
    FunctionSpec {
        name: "frac_bernoulli",
        usage: "frac_bernoulli ALPHA X",
        routes: &[],
    },
    FunctionSpec {
        name: "mathieu",
        usage: "mathieu R X",
        routes: &[],
    },
    FunctionSpec {
        name: "mathieu_alt",
        usage: "mathieu_alt R X",
        routes: &[],
    },
    FunctionSpec {
        name: "mathieu_e",
        usage: "mathieu_e X",
        routes: &[],
    },
];

fn spec(name: &str) -> CliResult<&'static FunctionSpec> {
    FUNCTIONS.iter().find(|f| f.name == name).ok_or_else(|| {
        let names: Vec<_> = FUNCTIONS.iter().map(|f| f.name).collect();
        CliError::Usage(format!(
            "unknown function '{name}'; known: {}",
            names.join(", ")
        ))
    })
}

fn parse_order(s: &str) -> CliResult<u32> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| CliError::Usage(format!("'{s}' is not a non-negative integer")))
}

fn route_name(r: Route) -> String {
    serde_json::to_value(r)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_else(|| format!("{r:?}"))
}

fn exact(v: ComplexValue, route: &str) -> (Evaluation, String) {
    (Evaluation::exact(v, Route::Closed), route.to_string())
}

fn real(v: f64, route: &str) -> (Evaluation, String) {
    exact(c(v, 0.0), route)
}

fn with_route(e: Evaluation) -> (Evaluation, String) {
    let r = route_name(e.route);
    (e, r)
}

/// Evaluate `function(args)` through `route` (or the default route).
pub fn evaluate(
    function: &str,
    args: &[String],
    route: Option<&str>,
    sum: &SumControl,
    quad: &QuadControl,
) -> CliResult<EvalOutput> {
    let fs = spec(function)?;
    if let Some(r) = route {
        if !fs.routes.contains(&r) {
            return Err(CliError::Usage(if fs.routes.is_empty() {
                format!("{function} has a single route; --route is not accepted")
            } else {
                format!(
                    "route '{r}' is not available for {function}; choose one of {}",
                    fs.routes.join(", ")
                )
            }));
        }
    }
    let n_args = fs.usage.split(' ').filter(|t| !t.starts_with('[')).count() - 1;
    let max_args = fs.usage.split(' ').count() - 1;
    if args.len() < n_args || args.len() > max_args {
        return Err(CliError::Usage(format!("usage: eval {}", fs.usage)));
    }
    let a = |k: usize| args[k].as_str();

    let (ev, rname) = match function {
        "epsilon" => {
            let r = parse_order(a(0))?;
            let z = parse_complex(a(1))?;
            match route {
                Some("integral_hyperbolic") => (
                    eisenstein_integral(r, z, quad, IntegralForm::Hyperbolic)?,
                    "integral_hyperbolic".into(),
                ),
                _ => {
                    let rt = match route {
                        Some("direct") => EisensteinRoute::Direct,
                        Some("closed") => EisensteinRoute::Closed,
                        Some("polygamma") => EisensteinRoute::Polygamma,
                        Some("integral") => EisensteinRoute::Integral,
                        _ if r <= 3 => EisensteinRoute::Closed,
                        _ => EisensteinRoute::Polygamma,
                    };
                    with_route(eisenstein_route(r, z, rt, sum, quad)?)
                }
            }
        }
        "he" => {
            let r = parse_order(a(0))?;
            let z = parse_complex(a(1))?;
            let rt = match route {
                Some("direct") => HeRoute::Direct,
                Some("taylor") => HeRoute::Taylor,
                Some("real_axis") => HeRoute::RealAxis,
                Some("via_eisenstein") => HeRoute::ViaEisenstein,
                _ => HeRoute::Closed,
            };
            with_route(he_route(r, z, rt, sum)?)
        }
        "omega" => {
            let z = parse_complex(a(0))?;
            let rt = match route {
                Some("quadrature") => Some(OmegaRoute::Quadrature),
                Some("digamma") => Some(OmegaRoute::Digamma),
                Some("partial_fraction") => Some(OmegaRoute::PartialFraction),
                Some("taylor_moments") => Some(OmegaRoute::TaylorMoments),
                Some("taylor_eta") => Some(OmegaRoute::TaylorEta),
                _ => None,
            };
            match rt {
                Some(rt) => with_route(omega_route(z, rt, sum, quad)?),
                None => with_route(omega(z)?),
            }
        }
        "moment" => {
            let k = parse_order(a(0))? as usize;
            let (rt, name) = match route {
                Some("quadrature") => (MomentRoute::Quadrature, "quadrature"),
                Some("series") => (MomentRoute::Series, "series"),
                _ => (MomentRoute::Closed, "closed"),
            };
            real(omega_moment(k, rt)?, name)
        }
        "gamma" => exact(gamma(parse_complex(a(0))?)?, "shift_asymptotic"),
        "psi" => exact(digamma(parse_complex(a(0))?)?, "asymptotic"),
        "polygamma" => exact(
            polygamma(parse_order(a(0))?, parse_complex(a(1))?)?,
            "asymptotic",
        ),
        "zeta" => real(riemann_zeta(parse_real(a(0))?)?, "eta_or_euler"),
        "eta" => real(dirichlet_eta(parse_real(a(0))?)?, "accelerated_alternating"),
        "lambda" => real(dirichlet_lambda(parse_real(a(0))?)?, "eta_or_euler"),
        "hurwitz" => real(
            hurwitz_zeta(parse_real(a(0))?, parse_real(a(1))?)?,
            "euler_maclaurin",
        ),
        "bernoulli" => {
            let n = parse_order(a(0))? as usize;
            if args.len() == 2 {
                real(bernoulli_poly(n, parse_real(a(1))?), "polynomial")
            } else {
                real(bernoulli_number(n), "exact_rational")
            }
        }
        "bstar" => real(ramanujan_bstar(parse_real(a(0))?)?, "zeta"),
        "glaisher" => real(glaisher_bstar(parse_real(a(0))?)?, "zeta"),
        "conj_half" => real(conj_bernoulli_half(parse_order(a(0))? as usize)?, "eta"),
        "conj_periodic" => with_route(conj_bernoulli_periodic(
            parse_order(a(0))? as usize,
            parse_real(a(1))?,
            sum,
        )?),
        "frac_bernoulli" => with_route(fractional_bernoulli(
            parse_real(a(0))?,
            parse_real(a(1))?,
            sum,
        )?),
        "mathieu" => with_route(mathieu(parse_real(a(0))?, parse_real(a(1))?, false, sum)?),
        "mathieu_alt" => with_route(mathieu(parse_real(a(0))?, parse_real(a(1))?, true, sum)?),
        "mathieu_e" => with_route(mathieu_e(parse_real(a(0))?, quad)?),
        _ => unreachable!("function table and dispatch disagree"),
    };
    Ok(EvalOutput {
        function: function.to_string(),
        args: args.to_vec(),
        value: ev.value.into(),
        err_estimate: ev.err_estimate,
        terms_used: ev.terms_used,
        route: rname,
    })
}
