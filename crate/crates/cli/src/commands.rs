//! One function per subcommand, each producing a [`Report`].

use serde_json::{json, Value};
use wgrade::automorph::{jacobian_det, nagata, nagata_inverse};
use wgrade::groebner::{map_kernel, principal_generator};
use wgrade::ineq::{check_cor44, check_main, check_su, check_t34a, check_t34b, check_t43, delta_data, DeltaData};
use wgrade::sualg::prop42_check;
use wgrade::upoly::{m_wg, MMethod};
use wgrade::{Error, Polynomial, WeightVector};

use crate::args::{CheckKind, Command, WeightArgs};
use crate::error::CliError;
use crate::input;
use crate::report::Report;
use crate::{campaign, invariants};

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

/// `p` printed over `prefix1, prefix2, ...`.
pub fn show(p: &Polynomial, prefix: &str) -> String {
    let ns = names(prefix, p.nvars());
    let shown = p.display_with(&ns).to_string();
    shown
}

fn setup(wa: &WeightArgs) -> Result<(WeightVector, usize), CliError> {
    let w = input::weights(wa.w.as_deref(), wa.w_lex.as_deref())?;
    let n = input::nvars(wa.n, &w)?;
    Ok((w, n))
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::Input(format!("--{flag} is required here")))
}

pub fn run(cmd: &Command) -> Result<Report, CliError> {
    let echo = serde_json::to_value(cmd).expect("arguments serialize");
    match cmd {
        Command::Degree { f, weights } => {
            let (w, n) = setup(weights)?;
            let f = input::poly(f, n)?;
            let d = f.weighted_degree(&w)?;
            Ok(Report::new(echo, None, None, json!({ "f": f.to_string(), "w": w, "degree": d })))
        }
        Command::Initial { f, weights } => {
            let (w, n) = setup(weights)?;
            let f = input::poly(f, n)?;
            let init = f.initial_form(&w)?;
            Ok(Report::new(
                echo,
                None,
                None,
                json!({ "f": f.to_string(), "w": w, "initial": init.to_string() }),
            ))
        }
        Command::Minv { phi, g, weights } => {
            let (w, n) = setup(weights)?;
            let phi = input::upoly(phi, n)?;
            let g = input::poly(g, n)?;
            let by_def = m_wg(&phi, &g, &w, MMethod::ByDefinition)?;
            let by_init = m_wg(&phi, &g, &w, MMethod::ByInitial)?;
            if by_def != by_init {
                return Err(CliError::Inconsistency(format!(
                    "m by definition {by_def} differs from m by initial forms {by_init}"
                )));
            }
            Ok(Report::new(
                echo,
                None,
                None,
                json!({
                    "m": by_def,
                    "m_by_definition": by_def,
                    "m_by_initial": by_init,
                    "deg_wg_phi": phi.deg_wg(&g, &w)?,
                    "deg_phi_g": phi.apply(&g)?.weighted_degree(&w)?,
                }),
            ))
        }
        Command::Check { which, f, phi, g, inverse, weights } => {
            let (w, n) = setup(weights)?;
            let fs = input::polys(f, n)?;
            check(echo, *which, &fs, phi, g, inverse, &w, n)
        }
        Command::Kernel { image, n } => {
            let texts: Vec<&str> = image.iter().map(String::as_str).collect();
            let n = n.unwrap_or_else(|| input::max_x_index(&texts).max(1));
            let images = input::polys(image, n)?;
            let ker = map_kernel(&images)?;
            let gens: Vec<String> = ker.generators().iter().map(|q| show(q, "y")).collect();
            let principal = match principal_generator(&ker) {
                Ok(q) => Value::String(show(&q, "y")),
                Err(Error::NonPrincipal | Error::ZeroIdeal) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(Report::new(echo, None, None, json!({ "generators": gens, "principal": principal })))
        }
        Command::Delta { f, weights } => {
            let (w, n) = setup(weights)?;
            let fs = input::polys(f, n)?;
            Ok(Report::new(echo, None, None, delta_json(&delta_data(&fs, &w)?)))
        }
        Command::Nagata => nagata_report(echo),
        Command::Campaign { suite, trials, seed, n, deg_bound } => {
            if *trials == 0 {
                return Err(CliError::Input("--trials must be at least 1".into()));
            }
            let params = campaign::Params { suite: *suite, trials: *trials, seed: *seed, n: *n, deg_bound: *deg_bound };
            let summary = campaign::run(&params)?;
            let holds = summary.violations == 0;
            Ok(Report::new(echo, Some(holds), Some(*seed), serde_json::to_value(&summary).expect("serializes")))
        }
        Command::Invariants { instances, seed } => {
            let results = invariants::run_all(*instances, *seed);
            let holds = results.iter().all(|r| r.failures == 0);
            Ok(Report::new(echo, Some(holds), Some(*seed), json!({ "suites": results })))
        }
    }
}

pub fn delta_json(dd: &DeltaData) -> Value {
    json!({
        "q": show(&dd.q, "y"),
        "weights_f": dd.weights_f,
        "delta": dd.value,
        "subset": dd.subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "remaining": dd.remaining + 1,
    })
}

#[allow(clippy::too_many_arguments)]
fn check(
    echo: Value,
    which: CheckKind,
    fs: &[Polynomial],
    phi: &Option<String>,
    g: &Option<String>,
    inverse: &[String],
    w: &WeightVector,
    n: usize,
) -> Result<Report, CliError> {
    let with_phi = || -> Result<_, CliError> {
        if fs.is_empty() {
            return Err(CliError::Input("at least one --f is required".into()));
        }
        let phi = input::zform(required(phi, "phi")?, fs.len())?;
        let g = input::poly(required(g, "g")?, n)?;
        Ok((phi, g))
    };
    let report = match which {
        CheckKind::Main => {
            let (phi, g) = with_phi()?;
            check_main(fs, &phi, &g, w)?
        }
        CheckKind::T34a => {
            let (phi, g) = with_phi()?;
            check_t34a(fs, &phi, &g, w)?
        }
        CheckKind::T34b => {
            let (phi, g) = with_phi()?;
            check_t34b(fs, &phi, &g, w)?
        }
        CheckKind::Su => {
            if fs.len() != 1 {
                return Err(CliError::Input("su takes exactly one --f".into()));
            }
            let (phi, g) = with_phi()?;
            check_su(&fs[0], &phi, &g, w)?
        }
        CheckKind::T43 => {
            let inv = if inverse.is_empty() { None } else { Some(input::polys(inverse, n)?) };
            check_t43(fs, w, inv.as_deref())?
        }
        CheckKind::Cor44 => {
            let [f1, f2] = fs else {
                return Err(CliError::Input("cor44 takes exactly two --f".into()));
            };
            let r = check_cor44(f1, f2, w)?;
            return Ok(Report::new(echo, Some(r.holds), None, serde_json::to_value(&r).expect("serializes")));
        }
    };
    Ok(Report::new(echo, Some(report.holds), None, serde_json::to_value(&report).expect("serializes")))
}

fn nagata_report(echo: Value) -> Result<Report, CliError> {
    let sigma = nagata();
    let inv = nagata_inverse();
    let w = WeightVector::standard(3);
    let jac = jacobian_det(&sigma);
    let dd = delta_data(sigma.images(), &w)?;
    let t43 = check_t43(sigma.images(), &w, Some(inv.images()))?;
    let p42 = prop42_check(sigma.images(), &w)?;
    let images: Vec<String> = sigma.images().iter().map(|p| p.to_string()).collect();
    let initials = sigma
        .images()
        .iter()
        .map(|p| p.initial_form(&w).map(|q| q.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report::new(
        echo,
        Some(t43.holds),
        None,
        json!({
            "images": images,
            "w": w,
            "total_degrees": sigma.total_degrees(),
            "jacobian": jac.to_string(),
            "initial_forms": initials,
            "kernel_generator": show(&dd.q, "y"),
            "delta": dd.value,
            "t43": t43,
            "prop42": p42,
        }),
    ))
}
