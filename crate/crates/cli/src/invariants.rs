//! Randomized checks of the structural identities the inequalities rest
//! on. Each suite draws its instances from a per-instance child seed.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use wgrade::automorph::random_tame;
use wgrade::forms::{algebraically_independent, differential, wedge_differentials};
use wgrade::groebner::in_subalgebra;
use wgrade::ineq::check_main;
use wgrade::sualg::{initial_algebra_gens, prop42_check};
use wgrade::upoly::{m_wg, MMethod};
use wgrade::{Degree, Monomial, Polynomial, UPoly};

use crate::gen::{self, child_seed};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    /// Instances for which no admissible input was drawn.
    pub skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

pub enum Check {
    Pass,
    /// The drawn input is outside the hypotheses.
    Skip,
    Fail(String),
}

pub type CheckResult = Result<Check, wgrade::Error>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail(msg())
    }
}

pub type SuiteFn = fn(&mut ChaCha8Rng) -> CheckResult;

/// The suites, by name.
pub const SUITES: [(&str, SuiteFn); 8] = [
    ("differential_degree", differential_degree),
    ("wedge_subadditivity", wedge_subadditivity),
    ("initial_multiplicativity", initial_multiplicativity),
    ("initial_substitution_gap", initial_substitution_gap),
    ("derivative_recursion", derivative_recursion),
    ("defect_nonpositive", defect_nonpositive),
    ("initial_algebra_sampling", initial_algebra_sampling),
    ("generation_criterion", generation_criterion),
];

/// Runs one suite over `instances` inputs; a draw outside the hypotheses
/// is redrawn up to 32 times before it counts as skipped.
pub fn run_suite(name: &'static str, f: SuiteFn, instances: usize, seed: u64) -> SuiteResult {
    let outcomes: Vec<Check> = (0..instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = gen::rng(child_seed(seed, i as u64));
            for _ in 0..32 {
                match f(&mut rng) {
                    Ok(Check::Skip) | Err(wgrade::Error::Precondition(_)) => continue,
                    Ok(c) => return c,
                    Err(e) => return Check::Fail(e.to_string()),
                }
            }
            Check::Skip
        })
        .collect();
    SuiteResult {
        name,
        instances,
        failures: outcomes.iter().filter(|c| matches!(c, Check::Fail(_))).count(),
        skipped: outcomes.iter().filter(|c| matches!(c, Check::Skip)).count(),
        first_failure: outcomes.into_iter().find_map(|c| match c {
            Check::Fail(m) => Some(m),
            _ => None,
        }),
    }
}

pub fn run_all(instances: usize, seed: u64) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(k, (name, f))| run_suite(name, *f, instances, child_seed(seed, k as u64)))
        .collect()
}

/// `deg df = deg(f - f(0))`, which is `deg f` for nonnegative weights.
fn differential_degree(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(1..=4);
    let f = gen::nonconstant(rng, n, 5, 4);
    let w = gen::weights(rng, n, -2, 4);
    let df = differential(&f).degree(&w)?;
    let constant = Polynomial::constant(n, f.coefficient(&Monomial::one(n)));
    let tail = (&f - &constant).weighted_degree(&w)?;
    if df != tail {
        return Ok(Check::Fail(format!("deg d({f}) = {df} but deg(f - f(0)) = {tail} at {w}")));
    }
    let fd = f.weighted_degree(&w)?;
    Ok(ensure(!w.is_nonnegative() || df == fd, || format!("deg d({f}) = {df} != {fd} at {w}")))
}

/// `deg(ω ∧ η) <= deg ω + deg η` and `deg(h ω) = deg h + deg ω`.
fn wedge_subadditivity(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(2..=4);
    let w = if rng.gen_bool(0.3) { gen::lex_weights(rng, n, -2, 3) } else { gen::weights(rng, n, -2, 3) };
    let omega = gen::one_form(rng, n, 3, 2);
    let mut eta = gen::one_form(rng, n, 3, 2);
    if n >= 3 && rng.gen_bool(0.5) {
        eta = eta.wedge(&gen::one_form(rng, n, 2, 2))?;
    }
    let (a, b) = (omega.degree(&w)?, eta.degree(&w)?);
    let ab = omega.wedge(&eta)?.degree(&w)?;
    if ab > &a + &b {
        return Ok(Check::Fail(format!("deg(ω∧η) = {ab} > {a} + {b}")));
    }
    let h = gen::poly(rng, n, 3, 3);
    if h.is_zero() {
        return Ok(Check::Pass);
    }
    let hd = omega.scale(&h).degree(&w)?;
    let expect = h.weighted_degree(&w)? + a;
    Ok(ensure(hd == expect, || format!("deg(hω) = {hd}, expected {expect}")))
}

/// `(fg)^w = f^w g^w`.
fn initial_multiplicativity(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(1..=3);
    let w = if rng.gen_bool(0.3) { gen::lex_weights(rng, n, -2, 3) } else { gen::weights(rng, n, -2, 4) };
    let f = gen::poly(rng, n, 4, 4);
    let g = gen::poly(rng, n, 4, 4);
    if f.is_zero() || g.is_zero() {
        return Ok(Check::Skip);
    }
    let lhs = (&f * &g).initial_form(&w)?;
    let rhs = &f.initial_form(&w)? * &g.initial_form(&w)?;
    Ok(ensure(lhs == rhs, || format!("(fg)^w != f^w g^w for f = {f}, g = {g}, w = {w}")))
}

/// `(Φ, g)` over `x`, cancelling in half of the draws.
fn phi_and_g(rng: &mut ChaCha8Rng, n: usize) -> (UPoly, Polynomial) {
    let g = gen::nonconstant(rng, n, 3, 3);
    let phi = if rng.gen_bool(0.5) {
        let root = &g - &gen::poly(rng, n, 1, 2);
        if root.is_zero() {
            gen::random_phi(rng, n, 2, 3)
        } else {
            let k = rng.gen_range(1..=2);
            gen::cancelling_phi(rng, &root, k, 1)
        }
    } else {
        gen::random_phi(rng, n, 2, 3)
    };
    (phi, g)
}

/// `deg(Φ(g) - Φ^{w,g}(g^w)) < deg_w^g Φ`.
fn initial_substitution_gap(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(1..=3);
    let (phi, g) = phi_and_g(rng, n);
    let w = gen::weights(rng, n, -1, 3);
    if phi.is_zero() {
        return Ok(Check::Skip);
    }
    let approx = phi.initial_wg(&g, &w)?.apply(&g.initial_form(&w)?)?;
    let gap = (&phi.apply(&g)? - &approx).weighted_degree(&w)?;
    let top = phi.deg_wg(&g, &w)?;
    Ok(ensure(gap < top, || format!("gap degree {gap} not below {top}")))
}

/// `m(Φ) = m(∂Φ) + 1` and `deg^g Φ = deg^g ∂Φ + deg g` when `m >= 1`.
fn derivative_recursion(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(1..=3);
    let (phi, g) = phi_and_g(rng, n);
    let w = gen::weights(rng, n, -1, 3);
    if phi.is_zero() {
        return Ok(Check::Skip);
    }
    let m = m_wg(&phi, &g, &w, MMethod::CrossCheck)?;
    if m == 0 {
        // positive m is the case under test
        return Ok(Check::Skip);
    }
    let d = phi.derivative();
    let md = m_wg(&d, &g, &w, MMethod::CrossCheck)?;
    if md + 1 != m {
        return Ok(Check::Fail(format!("m = {m} but m of the derivative is {md}")));
    }
    let lhs = phi.deg_wg(&g, &w)?;
    let rhs = d.deg_wg(&g, &w)? + g.weighted_degree(&w)?;
    Ok(ensure(lhs == rhs, || format!("deg^g Φ = {lhs}, deg^g ∂Φ + deg g = {rhs}")))
}

/// `M = deg(ω ∧ dg) - deg ω - deg g <= 0` for nonnegative degrees, computed
/// directly and compared with the main checker's value.
fn defect_nonpositive(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(2..=3);
    let r = rng.gen_range(1..=2);
    let w = gen::weights(rng, n, 0, 3);
    let fs: Vec<Polynomial> = (0..r).map(|_| gen::nonconstant(rng, n, 3, 3)).collect();
    let g = gen::nonconstant(rng, n, 3, 3);
    if !algebraically_independent(&fs)? {
        return Ok(Check::Skip);
    }
    let omega = wedge_differentials(&fs, n)?;
    let mut all = fs.clone();
    all.push(g.clone());
    let top = wedge_differentials(&all, n)?.degree(&w)?;
    let dg = g.weighted_degree(&w)?;
    let m = match (&top, omega.degree(&w)?, &dg) {
        (Degree::MinusInfinity, _, _) => Degree::MinusInfinity,
        (Degree::Finite(t), Degree::Finite(o), Degree::Finite(d)) => Degree::Finite(&(t - &o) - d),
        _ => return Ok(Check::Fail("nonzero forms with degree -inf".into())),
    };
    if m > Degree::scalar(0) {
        return Ok(Check::Fail(format!("M = {m} > 0")));
    }
    let phi = gen::random_phi(rng, r, 2, 2);
    let rep = check_main(&fs, &phi, &g, &w)?;
    Ok(ensure(rep.degree("M") == Some(&m), || format!("checker M {:?} differs from {m}", rep.degree("M"))))
}

/// For independent `g_i^w`, `H(g)^w` lies in `k[g_1^w, ..., g_r^w]`.
fn initial_algebra_sampling(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = 2;
    let r = rng.gen_range(1..=2);
    let w = gen::weights(rng, n, 0, 3);
    let gs: Vec<Polynomial> = (0..r).map(|_| gen::nonconstant(rng, n, 2, 3)).collect();
    let initials: Vec<Polynomial> = gs.iter().map(|g| g.initial_form(&w)).collect::<Result<_, _>>()?;
    if !algebraically_independent(&initials)? {
        return Ok(Check::Skip);
    }
    let gens = initial_algebra_gens(&gs, &w)?;
    let h = gen::nonconstant(rng, r, 3, 3);
    let value = h.substitute(&gs)?;
    if value.is_zero() {
        return Ok(Check::Skip);
    }
    let target = value.initial_form(&w)?;
    let inside = in_subalgebra(&gens, std::slice::from_ref(&target))?[0];
    Ok(ensure(inside, || format!("{target} not in k[{gens:?}]")))
}

/// For a tame map, independence of the initial forms is equivalent to the
/// initial forms generating the polynomial ring.
fn generation_criterion(rng: &mut ChaCha8Rng) -> CheckResult {
    let n = rng.gen_range(2..=3);
    let steps = rng.gen_range(1..=4);
    let sigma = random_tame(n, steps, 2, 3, rng.gen());
    let w = gen::weights(rng, n, 0, 3);
    let r = prop42_check(sigma.images(), &w)?;
    Ok(ensure(r.equivalent, || format!("{r:?} for {:?} at {w}", sigma.images().iter().map(|p| p.to_string()).collect::<Vec<_>>())))
}
