//! Seeded randomized campaigns. Trial `t` draws everything from
//! [`child_seed`]`(seed, t)`, so a report does not depend on how trials
//! are scheduled.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use wgrade::automorph::{check_jung, jacobian_det, random_tame};
use wgrade::forms::{algebraically_independent, differential, two_max_check, DiffForm};
use wgrade::ineq::{check_cor44, check_main, check_su, check_t34a, check_t34b, check_t43, expand_phi, IneqReport};
use wgrade::upoly::{m_wg, MMethod};
use wgrade::{Error, Polynomial, UPoly, WeightVector};

use crate::args::Suite;
use crate::error::CliError;
use crate::gen::{self, child_seed};

/// Redraws allowed per trial before it counts as skipped.
const ATTEMPTS: usize = 64;

#[derive(Clone, Debug)]
pub struct Params {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub n: Option<usize>,
    pub deg_bound: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Held,
    Violated,
    /// Two computations that must agree did not.
    Inconsistency,
    Capacity,
    /// No instance satisfying the hypotheses was drawn.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub outcome: Outcome,
    pub detail: Value,
}

/// Facts about one trial beyond its outcome.
#[derive(Clone, Debug, Default)]
struct Notes {
    /// `Some(agree)` when `m` was computed both ways.
    m_agree: Option<bool>,
    m: Option<usize>,
    degenerate: bool,
    not_applicable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub n: Option<usize>,
    pub deg_bound: u32,
    pub held: usize,
    /// Violated verdicts plus inconsistencies.
    pub violations: usize,
    pub capacity_errors: usize,
    pub skipped: usize,
    /// Trials where a sub-check did not apply (e.g. a transcendental g^w).
    pub not_applicable: usize,
    pub degenerate: usize,
    /// Trials with `m >= 1`.
    pub m_positive: usize,
    /// Trials where `m` was computed by definition and from initial forms.
    pub m_checks: usize,
    pub m_mismatches: usize,
    /// Every trial that did not hold, in trial order.
    pub failures: Vec<TrialRecord>,
    /// The full record when the campaign has a single trial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<TrialRecord>,
}

fn default_degree(suite: Suite) -> u32 {
    match suite {
        Suite::Main => 6,
        Suite::T34 => 3,
        Suite::Su => 4,
        Suite::Twomax => 3,
        Suite::Jung => 3,
        Suite::T43 => 2,
    }
}

pub fn run(p: &Params) -> Result<Summary, CliError> {
    if let Some(n) = p.n {
        let ok = match p.suite {
            Suite::Jung => n == 2,
            Suite::T43 => (2..=3).contains(&n),
            Suite::Twomax => (1..=4).contains(&n),
            _ => (1..=4).contains(&n),
        };
        if !ok {
            return Err(CliError::Input(format!("--n {n} is outside the range of suite {:?}", p.suite)));
        }
    }
    let deg = p.deg_bound.unwrap_or_else(|| default_degree(p.suite));
    if deg == 0 {
        return Err(CliError::Input("--deg-bound must be positive".into()));
    }
    let results: Vec<(TrialRecord, Notes)> = (0..p.trials)
        .into_par_iter()
        .map(|t| {
            let seed = child_seed(p.seed, t as u64);
            let (outcome, detail, notes) = trial(p.suite, seed, p.n, deg);
            (TrialRecord { trial: t, seed, outcome, detail }, notes)
        })
        .collect();

    let count = |o: Outcome| results.iter().filter(|(r, _)| r.outcome == o).count();
    let checks: Vec<bool> = results.iter().filter_map(|(_, n)| n.m_agree).collect();
    Ok(Summary {
        suite: p.suite,
        trials: p.trials,
        seed: p.seed,
        n: p.n,
        deg_bound: deg,
        held: count(Outcome::Held),
        violations: count(Outcome::Violated) + count(Outcome::Inconsistency),
        capacity_errors: count(Outcome::Capacity),
        skipped: count(Outcome::Skipped),
        not_applicable: results.iter().filter(|(_, n)| n.not_applicable).count(),
        degenerate: results.iter().filter(|(_, n)| n.degenerate).count(),
        m_positive: results.iter().filter(|(_, n)| n.m.is_some_and(|m| m >= 1)).count(),
        m_checks: checks.len(),
        m_mismatches: checks.iter().filter(|ok| !**ok).count(),
        failures: results
            .iter()
            .filter(|(r, _)| r.outcome != Outcome::Held && r.outcome != Outcome::Skipped)
            .map(|(r, _)| r.clone())
            .collect(),
        evidence: (p.trials == 1).then(|| results[0].0.clone()),
    })
}

/// Runs one trial from its own seed, as trial `t` of a campaign does with
/// `child_seed(seed, t)`.
pub fn run_trial(suite: Suite, seed: u64, n: Option<usize>, deg_bound: Option<u32>) -> TrialRecord {
    let deg = deg_bound.unwrap_or_else(|| default_degree(suite));
    let (outcome, detail, _) = trial(suite, seed, n, deg);
    TrialRecord { trial: 0, seed, outcome, detail }
}

/// What a single draw produced.
enum Draw {
    /// The hypotheses failed; draw again.
    Retry,
    Done(Outcome, Value, Notes),
}

fn trial(suite: Suite, seed: u64, n: Option<usize>, deg: u32) -> (Outcome, Value, Notes) {
    let mut rng = gen::rng(seed);
    for _ in 0..ATTEMPTS {
        let draw = match suite {
            Suite::Main => main_trial(&mut rng, n, deg),
            Suite::T34 => t34_trial(&mut rng, n, deg),
            Suite::Su => su_trial(&mut rng, n, deg),
            Suite::Twomax => twomax_trial(&mut rng, n, deg),
            Suite::Jung => jung_trial(&mut rng, deg),
            Suite::T43 => t43_trial(&mut rng, n, deg),
        };
        if let Draw::Done(o, d, notes) = draw {
            return (o, d, notes);
        }
    }
    (Outcome::Skipped, json!({ "reason": "no admissible instance drawn" }), Notes::default())
}

/// Classifies a library error: hypotheses failing means redraw.
fn failed(e: Error, detail: Value, notes: Notes) -> Draw {
    match e {
        Error::Precondition(_) | Error::NotApplicable(_) | Error::ZeroArgument(_) => Draw::Retry,
        Error::Capacity(m) => Draw::Done(Outcome::Capacity, with_error(detail, &m), notes),
        other => Draw::Done(Outcome::Inconsistency, with_error(detail, &other.to_string()), notes),
    }
}

fn with_error(mut detail: Value, msg: &str) -> Value {
    detail["error"] = Value::String(msg.to_string());
    detail
}

fn verdict(holds: bool) -> Outcome {
    if holds {
        Outcome::Held
    } else {
        Outcome::Violated
    }
}

fn weights_for(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64, lex: bool) -> WeightVector {
    if lex && rng.gen_bool(0.25) {
        gen::lex_weights(rng, n, lo, hi)
    } else {
        gen::weights(rng, n, lo, hi)
    }
}

/// A generated instance `(f, Φ_z, g)` of one of three shapes: fully
/// random; `g = Z(f) + δ` with `Φ_z` vanishing along `y = Z`; or
/// `f_1 = u^p + δ_1`, `g = u^q + δ_2` with `Φ_z = (y^{p'} - c z_1^{q'}) Ψ`.
struct Instance {
    fs: Vec<Polynomial>,
    phi: UPoly,
    g: Polynomial,
    shape: &'static str,
}

fn instance(rng: &mut ChaCha8Rng, n: usize, r: usize, deg: u32, max_phi_y: usize) -> Instance {
    match rng.gen_range(0..10) {
        0..=2 => {
            let fs = (0..r).map(|_| gen::nonconstant(rng, n, deg, 3)).collect();
            let phi = gen::random_phi(rng, r, 2, max_phi_y);
            let g = gen::nonconstant(rng, n, deg, 3);
            Instance { fs, phi, g, shape: "random" }
        }
        3..=6 => {
            let zdeg = if deg >= 4 { rng.gen_range(1..=2) } else { 1 };
            let fs: Vec<Polynomial> = (0..r).map(|_| gen::nonconstant(rng, n, (deg / zdeg).max(1), 3)).collect();
            let z = gen::nonconstant(rng, r, zdeg, 2);
            let delta = gen::poly(rng, n, 1, 2);
            let g = &z.substitute(&fs).expect("arity matches") + &delta;
            let k = rng.gen_range(1..=max_phi_y.clamp(1, 2) as u32);
            let phi = gen::cancelling_phi(rng, &z, k, 1);
            Instance { fs, phi, g, shape: "cancelling" }
        }
        _ => {
            let p = rng.gen_range(1..=3u32);
            let q = rng.gen_range(1..=3u32);
            let udeg = (deg / p.max(q)).max(1);
            let u = gen::nonconstant(rng, n, udeg, 2);
            let mut fs = vec![&u.pow(p) + &gen::poly(rng, n, 1, 1)];
            fs.extend((1..r).map(|_| gen::nonconstant(rng, n, deg, 2)));
            let g = &u.pow(q) + &gen::poly(rng, n, 1, 2);
            let d = gcd(p, q);
            // g^{p/d} - f^{q/d} cancels in its top part
            let mut cs = vec![Polynomial::zero(r); (p / d) as usize + 1];
            cs[0] = -&Polynomial::var(0, r).pow(q / d);
            cs[(p / d) as usize] = Polynomial::one(r);
            let base = UPoly::new(r, cs);
            let psi = UPoly::new(r, vec![&Polynomial::one(r) + &gen::poly(rng, r, 1, 1)]);
            let psi = if psi.is_zero() { UPoly::new(r, vec![Polynomial::one(r)]) } else { psi };
            Instance { fs, phi: base.mul(&psi), g, shape: "power" }
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn instance_json(inst: &Instance, w: &WeightVector) -> Value {
    json!({
        "shape": inst.shape,
        "f": inst.fs.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "phi": inst.phi.display_with(&wgrade::parse::z_names(inst.fs.len())).to_string(),
        "g": inst.g.to_string(),
        "w": w,
    })
}

/// `m` both ways for the expanded `Φ`.
fn m_both(inst: &Instance, n: usize, w: &WeightVector) -> Result<(usize, usize), Error> {
    let phi = expand_phi(&inst.phi, &inst.fs, n)?;
    Ok((
        m_wg(&phi, &inst.g, w, MMethod::ByDefinition)?,
        m_wg(&phi, &inst.g, w, MMethod::ByInitial)?,
    ))
}

fn usable(inst: &Instance) -> bool {
    !inst.g.is_zero() && !inst.phi.is_zero() && algebraically_independent(&inst.fs).unwrap_or(false)
}

fn notes_from(m: (usize, usize)) -> Notes {
    Notes {
        m_agree: Some(m.0 == m.1),
        m: Some(m.0),
        ..Notes::default()
    }
}

fn report_json(r: &IneqReport) -> Value {
    serde_json::to_value(r).expect("serializes")
}

fn main_trial(rng: &mut ChaCha8Rng, n: Option<usize>, deg: u32) -> Draw {
    let n = n.unwrap_or_else(|| rng.gen_range(2..=3));
    let r = rng.gen_range(1..=2.min(n));
    let inst = instance(rng, n, r, deg, 3);
    let w = weights_for(rng, n, -2, 4, true);
    if !usable(&inst) {
        return Draw::Retry;
    }
    let mut detail = instance_json(&inst, &w);
    let m = match m_both(&inst, n, &w) {
        Ok(m) => m,
        Err(e) => return failed(e, detail, Notes::default()),
    };
    let mut notes = notes_from(m);
    if m.0 != m.1 {
        return Draw::Done(Outcome::Inconsistency, with_error(detail, "m disagrees between methods"), notes);
    }
    match check_main(&inst.fs, &inst.phi, &inst.g, &w) {
        Ok(rep) => {
            notes.degenerate = rep.degenerate;
            detail["report"] = report_json(&rep);
            Draw::Done(verdict(rep.holds), detail, notes)
        }
        Err(e) => failed(e, detail, notes),
    }
}

fn t34_trial(rng: &mut ChaCha8Rng, n: Option<usize>, deg: u32) -> Draw {
    let n = n.unwrap_or(2);
    let r = rng.gen_range(1..=2.min(n));
    let inst = instance(rng, n, r, deg, 2);
    let w = gen::weights(rng, n, 0, 3);
    if !usable(&inst) {
        return Draw::Retry;
    }
    let mut detail = instance_json(&inst, &w);
    let m = match m_both(&inst, n, &w) {
        Ok(m) => m,
        Err(e) => return failed(e, detail, Notes::default()),
    };
    let mut notes = notes_from(m);
    if m.0 != m.1 {
        return Draw::Done(Outcome::Inconsistency, with_error(detail, "m disagrees between methods"), notes);
    }
    let a = match check_t34a(&inst.fs, &inst.phi, &inst.g, &w) {
        Ok(rep) => Some(rep),
        Err(Error::NotApplicable(_)) => {
            notes.not_applicable = true;
            None
        }
        Err(e) => return failed(e, detail, notes),
    };
    let b = match check_t34b(&inst.fs, &inst.phi, &inst.g, &w) {
        Ok(rep) => rep,
        Err(e) => return failed(e, detail, notes),
    };
    let holds = b.holds && a.as_ref().map_or(true, |r| r.holds);
    detail["t34a"] = a.as_ref().map_or(Value::Null, report_json);
    detail["t34b"] = report_json(&b);
    Draw::Done(verdict(holds), detail, notes)
}

fn su_trial(rng: &mut ChaCha8Rng, n: Option<usize>, deg: u32) -> Draw {
    let n = n.unwrap_or(2);
    let inst = instance(rng, n, 1, deg, 2);
    let w = gen::weights(rng, n, 1, 3);
    if !usable(&inst) {
        return Draw::Retry;
    }
    let mut detail = instance_json(&inst, &w);
    let m = match m_both(&inst, n, &w) {
        Ok(m) => m,
        Err(e) => return failed(e, detail, Notes::default()),
    };
    let notes = notes_from(m);
    if m.0 != m.1 {
        return Draw::Done(Outcome::Inconsistency, with_error(detail, "m disagrees between methods"), notes);
    }
    match check_su(&inst.fs[0], &inst.phi, &inst.g, &w) {
        Ok(rep) => {
            detail["report"] = report_json(&rep);
            Draw::Done(verdict(rep.holds), detail, notes)
        }
        Err(e) => failed(e, detail, notes),
    }
}

fn twomax_trial(rng: &mut ChaCha8Rng, n: Option<usize>, deg: u32) -> Draw {
    let l = rng.gen_range(2..=5usize);
    let n = match n {
        Some(n) if l - 1 > n => return Draw::Retry,
        Some(n) => n,
        None => rng.gen_range((l - 1).max(1)..=4),
    };
    let w = weights_for(rng, n, -2, 3, true);
    let exact = rng.gen_bool(0.5);
    let etas: Vec<DiffForm> = (0..l)
        .map(|_| {
            if exact {
                differential(&gen::nonconstant(rng, n, deg + 1, 3))
            } else {
                gen::one_form(rng, n, deg, 2)
            }
        })
        .collect();
    if etas.iter().any(DiffForm::is_zero) {
        return Draw::Retry;
    }
    let detail = json!({
        "n": n,
        "l": l,
        "w": w,
        "forms": etas.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    });
    match two_max_check(&etas, &w) {
        Ok(rep) => {
            let mut detail = detail;
            detail["report"] = serde_json::to_value(&rep).expect("serializes");
            Draw::Done(verdict(rep.holds), detail, Notes::default())
        }
        Err(e) => failed(e, detail, Notes::default()),
    }
}

fn jung_trial(rng: &mut ChaCha8Rng, deg: u32) -> Draw {
    let steps = rng.gen_range(1..=6);
    let sigma = random_tame(2, steps, deg, 4, rng.gen());
    let jac = jacobian_det(&sigma);
    let mut detail = json!({
        "steps": steps,
        "images": sigma.images().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "jacobian": jac.to_string(),
    });
    if !jac.is_constant() || jac.is_zero() {
        return Draw::Done(Outcome::Inconsistency, with_error(detail, "tame map with nonconstant Jacobian"), Notes::default());
    }
    match check_jung(&sigma) {
        Ok(rep) => {
            detail["report"] = serde_json::to_value(&rep).expect("serializes");
            Draw::Done(verdict(rep.divisible), detail, Notes::default())
        }
        Err(e) => failed(e, detail, Notes::default()),
    }
}

fn t43_trial(rng: &mut ChaCha8Rng, n: Option<usize>, deg: u32) -> Draw {
    let n = n.unwrap_or_else(|| rng.gen_range(2..=3));
    let steps = rng.gen_range(1..=4);
    let sigma = random_tame(n, steps, deg, 3, rng.gen());
    let inv = match sigma.inverse() {
        Ok(inv) => inv,
        Err(e) => return failed(e, json!({}), Notes::default()),
    };
    let w = gen::weights(rng, n, 0, 3);
    let initials: Vec<Polynomial> = match sigma.images().iter().map(|f| f.initial_form(&w)).collect() {
        Ok(v) => v,
        Err(e) => return failed(e, json!({}), Notes::default()),
    };
    if algebraically_independent(&initials).unwrap_or(true) {
        return Draw::Retry;
    }
    let mut detail = json!({
        "images": sigma.images().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "inverse": inv.images().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "w": w,
    });
    let rep = match check_t43(sigma.images(), &w, Some(inv.images())) {
        Ok(rep) => rep,
        Err(e) => return failed(e, detail, Notes::default()),
    };
    // the checker computes m with both methods and errors on disagreement
    let m = rep.count("m").map(|m| m as usize);
    let notes = Notes {
        m_agree: m.map(|_| true),
        m,
        ..Notes::default()
    };
    let mut holds = rep.holds;
    detail["report"] = report_json(&rep);
    if n == 2 {
        match check_cor44(&sigma.images()[0], &sigma.images()[1], &w) {
            Ok(c) => {
                holds &= c.holds;
                detail["cor44"] = serde_json::to_value(&c).expect("serializes");
            }
            Err(e) => return failed(e, detail, notes),
        }
    }
    Draw::Done(verdict(holds), detail, notes)
}
