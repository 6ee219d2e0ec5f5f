//! Checkers for the weighted-degree inequalities. Each returns both sides,
//! the intermediate quantities and the verdict; the internal consistency
//! facts that the arguments rely on are asserted along the way and surface
//! as [`Error::Inconsistency`] when violated.
//!
//! `Φ` is always given over coordinates `z_1..z_r` standing for the
//! generators `f_1..f_r`, so membership in `k[f][y]` holds by construction.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{algebraically_independent, differential, wedge_differentials, wedge_or_zero};
use crate::groebner::{in_subalgebra, map_kernel, min_annihilating, principal_generator};
use crate::poly::{Degree, Gamma, Polynomial, WeightVector};
use crate::sualg::field_ext_degree;
use crate::upoly::{m_wg, MMethod, UPoly};

/// A named intermediate value in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Degree(Degree),
    Count(u64),
    Flag(bool),
    Text(String),
}

impl From<Degree> for Quantity {
    fn from(d: Degree) -> Self {
        Quantity::Degree(d)
    }
}

impl From<Gamma> for Quantity {
    fn from(g: Gamma) -> Self {
        Quantity::Degree(Degree::Finite(g))
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Count(v as u64)
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Count(v)
    }
}

impl From<bool> for Quantity {
    fn from(v: bool) -> Self {
        Quantity::Flag(v)
    }
}

impl From<String> for Quantity {
    fn from(v: String) -> Self {
        Quantity::Text(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Intermediates(BTreeMap<String, Quantity>);

impl Intermediates {
    pub fn put(&mut self, key: &str, value: impl Into<Quantity>) {
        self.0.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Quantity> {
        self.0.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Quantity)> {
        self.0.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IneqReport {
    pub lhs: Degree,
    pub rhs: Degree,
    /// `lhs >= rhs`, with minus infinity least.
    pub holds: bool,
    /// The right side is minus infinity because `ω ∧ dg = 0` enters with a
    /// positive multiplier.
    pub degenerate: bool,
    pub intermediates: Intermediates,
}

impl IneqReport {
    fn new(lhs: Degree, rhs: Degree, degenerate: bool, intermediates: Intermediates) -> Self {
        IneqReport {
            holds: lhs >= rhs,
            lhs,
            rhs,
            degenerate,
            intermediates,
        }
    }

    /// An integer-valued intermediate.
    pub fn count(&self, key: &str) -> Option<u64> {
        match self.intermediates.get(key)? {
            Quantity::Count(v) => Some(*v),
            _ => None,
        }
    }

    /// A degree-valued intermediate.
    pub fn degree(&self, key: &str) -> Option<&Degree> {
        match self.intermediates.get(key)? {
            Quantity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

fn finite(d: Degree, what: &str) -> Result<Gamma> {
    d.finite()
        .cloned()
        .ok_or_else(|| Error::Inconsistency(format!("{what} unexpectedly has degree -inf")))
}

/// `Φ` with `z_j` replaced by `f_j`.
pub fn expand_phi(phi_z: &UPoly, fs: &[Polynomial], nvars: usize) -> Result<UPoly> {
    if phi_z.nvars() != fs.len() {
        return Err(Error::DimensionMismatch {
            expected: fs.len(),
            found: phi_z.nvars(),
        });
    }
    if fs.is_empty() {
        return phi_z.map_coeffs(nvars, |c| {
            Ok(Polynomial::constant(nvars, c.as_constant().expect("no variables")))
        });
    }
    phi_z.substitute_coeffs(fs)
}

/// Quantities shared by every `Φ`-based checker.
struct Setup {
    phi: UPoly,
    lhs: Degree,
    deg_omega: Gamma,
    deg_omega_dg: Degree,
    deg_g: Gamma,
    big_m: Degree,
    rank: usize,
}

impl Setup {
    fn new(fs: &[Polynomial], phi_z: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<Setup> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("g"));
        }
        if phi_z.is_zero() {
            return Err(Error::ZeroArgument("Φ"));
        }
        let n = g.nvars();
        w.check_len(n)?;
        if let Some(bad) = fs.iter().find(|f| f.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        if fs.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroArgument("generator f_i"));
        }
        if !algebraically_independent(fs)? {
            return Err(Error::Precondition("f_1..f_r are algebraically dependent".into()));
        }
        let phi = expand_phi(phi_z, fs, n)?;
        let omega = wedge_differentials(fs, n)?;
        let omega_dg = wedge_or_zero(&omega, &differential(g))?;
        let deg_omega = finite(omega.degree(w)?, "ω")?;
        let deg_g = finite(g.weighted_degree(w)?, "g")?;
        let deg_omega_dg = omega_dg.degree(w)?;
        let big_m = deg_omega_dg.minus(&deg_omega).minus(&deg_g);
        let lhs = phi.apply(g)?.weighted_degree(w)?;
        Ok(Setup {
            phi,
            lhs,
            deg_omega,
            deg_omega_dg,
            deg_g,
            big_m,
            rank: w.rank(),
        })
    }

    fn record(&self, im: &mut Intermediates) {
        im.put("M", self.big_m.clone());
        im.put("deg_omega", self.deg_omega.clone());
        im.put("deg_omega_dg", self.deg_omega_dg.clone());
        im.put("deg_g", self.deg_g.clone());
    }

    fn assert_m_nonpositive(&self) -> Result<()> {
        if self.big_m > Degree::zero(self.rank) {
            return Err(Error::Inconsistency(format!(
                "M = {} is positive although deg(ω∧dg) <= deg ω + deg g",
                self.big_m
            )));
        }
        Ok(())
    }
}

/// `deg Φ(g) >= deg_w^g Φ + m_w^g(Φ) M`.
pub fn check_main(fs: &[Polynomial], phi_z: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<IneqReport> {
    let s = Setup::new(fs, phi_z, g, w)?;
    let m = m_wg(&s.phi, g, w, MMethod::CrossCheck)?;
    let dwg = s.phi.deg_wg(g, w)?;
    let rhs = &dwg + &s.big_m.times(m as u64, s.rank);
    let mut im = Intermediates::default();
    s.record(&mut im);
    im.put("m", m);
    im.put("deg_wg_phi", dwg);
    let degenerate = m >= 1 && !s.big_m.is_finite();
    Ok(IneqReport::new(s.lhs, rhs, degenerate, im))
}

/// The decidable stand-in for "`deg_w h >= 0` on `k[f] \ 0`": `w >= 0`, or
/// independent initial forms of nonnegative degree. Independent initial
/// forms are required in any case, since they are what makes `K^w`
/// computable. Returns the initial forms.
fn nonnegative_initial_algebra(fs: &[Polynomial], w: &WeightVector) -> Result<Vec<Polynomial>> {
    let initials = fs
        .iter()
        .map(|f| f.initial_form(w))
        .collect::<Result<Vec<_>>>()?;
    if !algebraically_independent(&initials)? {
        return Err(Error::Precondition(
            "initial forms of f_1..f_r are algebraically dependent; the initial algebra is unsupported".into(),
        ));
    }
    let zero = Degree::zero(w.rank());
    let degrees_ok = fs
        .iter()
        .map(|f| f.weighted_degree(w))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|d| d >= zero);
    if !(w.is_nonnegative() || degrees_ok) {
        return Err(Error::Precondition(
            "need w >= 0 or deg_w f_i >= 0 for all i".into(),
        ));
    }
    Ok(initials)
}

/// `deg Φ(g) >= (deg_y Φ) deg g + a M = a (N deg g + M) + b deg g`, where
/// `N = [K^w(g^w) : K^w]` and `deg_y Φ = a N + b`.
pub fn check_t34a(fs: &[Polynomial], phi_z: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<IneqReport> {
    let s = Setup::new(fs, phi_z, g, w)?;
    nonnegative_initial_algebra(fs, w)?;
    let ext = field_ext_degree(fs, g, w)?;
    let n = match ext.n {
        Some(n) if ext.algebraic => n,
        _ => {
            return Err(Error::NotApplicable(
                "g^w is transcendental over K^w".into(),
            ))
        }
    };
    let d = s.phi.deg_y().expect("nonzero");
    let (a, b) = d.div_rem(&n);
    let dg = Degree::Finite(s.deg_g.clone());
    let rhs = &dg.times(d as u64, s.rank) + &s.big_m.times(a as u64, s.rank);
    let alt = &(&dg.times(n as u64, s.rank) + &s.big_m).times(a as u64, s.rank)
        + &dg.times(b as u64, s.rank);
    if rhs != alt {
        return Err(Error::Inconsistency(format!(
            "the two forms of the right side differ: {rhs} vs {alt}"
        )));
    }
    s.assert_m_nonpositive()?;

    let m = m_wg(&s.phi, g, w, MMethod::CrossCheck)?;
    if m > a {
        return Err(Error::Inconsistency(format!("m = {m} exceeds a = {a}")));
    }
    let d_init = s.phi.initial_wg(g, w)?.deg_y().expect("nonzero");
    if m > d_init / n {
        return Err(Error::Inconsistency(format!(
            "m = {m} exceeds deg_y Φ^(w,g) / N = {d_init} / {n}"
        )));
    }

    let mut im = Intermediates::default();
    s.record(&mut im);
    im.put("N", n);
    im.put("a", a);
    im.put("b", b);
    im.put("m", m);
    im.put("deg_y_phi", d);
    im.put("deg_y_initial", d_init);
    im.put("rhs_alt", alt);
    let degenerate = a >= 1 && !s.big_m.is_finite();
    Ok(IneqReport::new(s.lhs, rhs, degenerate, im))
}

/// `deg Φ(g) >= m_w^g(Φ) (deg_w^g P + M)` with `P = P(A^w, g^w)`; when `g^w`
/// is transcendental over `K^w` the right side is `0`.
pub fn check_t34b(fs: &[Polynomial], phi_z: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<IneqReport> {
    let s = Setup::new(fs, phi_z, g, w)?;
    let initials = nonnegative_initial_algebra(fs, w)?;
    if Degree::Finite(s.deg_g.clone()) < Degree::zero(s.rank) {
        return Err(Error::Precondition("need deg_w g >= 0".into()));
    }
    let m = m_wg(&s.phi, g, w, MMethod::CrossCheck)?;
    let gw = g.initial_form(w)?;
    let ann = min_annihilating(&initials, &gw)?;

    let mut im = Intermediates::default();
    s.record(&mut im);
    im.put("m", m);
    im.put("algebraic", ann.exists);

    let Some(p) = ann.p else {
        if m != 0 {
            return Err(Error::Inconsistency(format!(
                "m = {m} although g^w is transcendental over K^w"
            )));
        }
        return Ok(IneqReport::new(s.lhs, Degree::zero(s.rank), false, im));
    };
    let p_x = p.substitute_coeffs(&initials)?;
    let dp = p_x.deg_wg(g, w)?;
    let rhs = (&dp + &s.big_m).times(m as u64, s.rank);
    im.put("deg_wg_P", dp);
    im.put("deg_y_P", p.deg_y().expect("nonzero"));
    im.put("P", p.display_with(&crate::parse::z_names(fs.len())).to_string());
    let degenerate = m >= 1 && !s.big_m.is_finite();
    Ok(IneqReport::new(s.lhs, rhs, degenerate, im))
}

fn integer_degree(p: &Polynomial, w: &WeightVector, what: &str) -> Result<i64> {
    p.weighted_degree(w)?
        .as_scalar()
        .ok_or_else(|| Error::Precondition(format!("{what} must have a finite integer degree")))
}

/// `deg Φ(g) >= a (lcm(deg f, deg g) + M) + b deg g` with
/// `deg_y Φ = a (deg f / gcd(deg f, deg g)) + b`, for integer weights.
pub fn check_su(f: &Polynomial, phi_z: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<IneqReport> {
    if w.as_ints().is_none() {
        return Err(Error::Precondition("integer weights required".into()));
    }
    if f.is_constant() || g.is_constant() {
        return Err(Error::Precondition("f and g must be nonconstant".into()));
    }
    let fs = [f.clone()];
    let s = Setup::new(&fs, phi_z, g, w)?;
    let df = integer_degree(f, w, "f")?;
    let dg = integer_degree(g, w, "g")?;
    if df <= 0 || dg <= 0 {
        return Err(Error::Precondition(format!(
            "degrees must be positive, got deg f = {df}, deg g = {dg}"
        )));
    }
    let gcd = df.gcd(&dg);
    let divisor = (df / gcd) as usize;
    let lcm = df / gcd * dg;
    let d = s.phi.deg_y().expect("nonzero");
    let (a, b) = d.div_rem(&divisor);
    let rhs = &(&Degree::scalar(lcm) + &s.big_m).times(a as u64, 1) + &Degree::scalar(b as i64 * dg);
    s.assert_m_nonpositive()?;

    let mut im = Intermediates::default();
    s.record(&mut im);
    im.put("divisor", divisor);
    im.put("a", a);
    im.put("b", b);
    im.put("lcm", Degree::scalar(lcm));
    im.put("deg_y_phi", d);

    let ext = field_ext_degree(&fs, g, w)?;
    if let Some(n) = ext.n {
        if n != divisor {
            return Err(Error::Inconsistency(format!(
                "[K^w(g^w):K^w] = {n} but deg f / gcd = {divisor}"
            )));
        }
        im.put("N", n);
    }
    let degenerate = a >= 1 && !s.big_m.is_finite();
    Ok(IneqReport::new(s.lhs, rhs, degenerate, im))
}

/// The data behind `Δ_f^w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaData {
    /// Generator of the kernel of `y_i -> f_i^w`, monic under grevlex.
    pub q: Polynomial,
    /// `w_f = (deg_w f_1, ..., deg_w f_n)`.
    pub weights_f: WeightVector,
    /// The `w_f`-degree of `q`.
    pub value: Degree,
    /// The first `(n-1)`-subset, in lexicographic order, with independent
    /// initial forms (zero-based).
    pub subset: Vec<usize>,
    /// The index left out of `subset`.
    pub remaining: usize,
}

pub fn delta_data(fs: &[Polynomial], w: &WeightVector) -> Result<DeltaData> {
    let n = w.len();
    if fs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: fs.len(),
        });
    }
    if fs.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroArgument("Δ"));
    }
    let initials = fs
        .iter()
        .map(|f| f.initial_form(w))
        .collect::<Result<Vec<_>>>()?;
    if algebraically_independent(&initials)? {
        return Err(Error::Precondition(
            "initial forms are independent: transcendence degree n, not n-1".into(),
        ));
    }
    // subsets omitting the last index come first lexicographically
    let (subset, remaining) = (0..n)
        .rev()
        .map(|omit| ((0..n).filter(|&i| i != omit).collect::<Vec<_>>(), omit))
        .find(|(sub, _)| {
            let hs: Vec<Polynomial> = sub.iter().map(|&i| initials[i].clone()).collect();
            algebraically_independent(&hs).unwrap_or(false)
        })
        .ok_or_else(|| Error::Precondition("transcendence degree of the initial forms is below n-1".into()))?;
    let q = match principal_generator(&map_kernel(&initials)?) {
        Err(Error::NonPrincipal) => {
            return Err(Error::Inconsistency(
                "kernel of a transcendence-degree n-1 map is not principal".into(),
            ))
        }
        other => other?,
    };
    let weights_f = WeightVector::new(
        fs.iter()
            .map(|f| finite(f.weighted_degree(w)?, "f_i"))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let value = q.weighted_degree(&weights_f)?;
    Ok(DeltaData {
        q,
        weights_f,
        value,
        subset,
        remaining,
    })
}

/// `Δ_f^w`.
pub fn delta(fs: &[Polynomial], w: &WeightVector) -> Result<Degree> {
    Ok(delta_data(fs, w)?.value)
}

/// `df_1 ∧ ... ∧ df_n = α dx_1 ∧ ... ∧ dx_n`; returns `α` when it is a
/// nonzero constant.
fn constant_jacobian(fs: &[Polynomial], n: usize) -> Result<Polynomial> {
    let vol = wedge_differentials(fs, n)?;
    let idx: Vec<usize> = (0..n).collect();
    match vol.coefficient(&idx) {
        Some(a) if a.is_constant() && !a.is_zero() => Ok(a.clone()),
        _ => Err(Error::Precondition(
            "Jacobian determinant is not a nonzero constant, so the map is not an automorphism".into(),
        )),
    }
}

/// `sum deg f_i >= Δ_f^w + sum w_i - max w_i` for an automorphism `f` and
/// `w >= 0`.
///
/// When the inverse images are supplied (`x_i = inverse[i](f)`), the
/// polynomial `Φ` with `Φ(f_n) = x_l` from the argument is built and
/// `m_w^g(Φ) >= 1` is asserted as well.
pub fn check_t43(fs: &[Polynomial], w: &WeightVector, inverse: Option<&[Polynomial]>) -> Result<IneqReport> {
    let n = w.len();
    if !w.is_nonnegative() {
        return Err(Error::Precondition("weights must be nonnegative".into()));
    }
    if fs.len() != n || fs.iter().any(|f| f.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: fs.len(),
        });
    }
    constant_jacobian(fs, n)?;
    let dd = delta_data(fs, w)?;
    if dd.subset.is_empty() {
        return Err(Error::Precondition("need at least two variables".into()));
    }
    let rank = w.rank();
    let degs: Vec<Gamma> = dd.weights_f.weights().to_vec();
    let sum_deg = degs.iter().fold(Gamma::zero(rank), |s, d| &s + d);
    let sum_w = w.sum();
    let max_w = w.max().expect("n >= 2").clone();
    let lhs = Degree::Finite(sum_deg.clone());
    let rhs = dd.value.minus(&max_w.clone()).minus(&(-sum_w.clone()));

    let vol_deg = wedge_differentials(fs, n)?.degree(w)?;
    if vol_deg != Degree::Finite(sum_w.clone()) {
        return Err(Error::Inconsistency(format!(
            "deg(df_1 ∧ .. ∧ df_n) = {vol_deg}, expected sum w = {sum_w}"
        )));
    }

    let sub: Vec<Polynomial> = dd.subset.iter().map(|&i| fs[i].clone()).collect();
    let g = &fs[dd.remaining];
    let initials_sub = sub
        .iter()
        .map(|f| f.initial_form(w))
        .collect::<Result<Vec<_>>>()?;
    let gw = g.initial_form(w)?;
    let ann = min_annihilating(&initials_sub, &gw)?;
    let p = ann
        .p
        .ok_or_else(|| Error::Inconsistency("g^w transcendental although the initial forms are dependent".into()))?;
    let dp = p.substitute_coeffs(&initials_sub)?.deg_wg(g, w)?;
    if dp != dd.value {
        return Err(Error::Inconsistency(format!(
            "deg_w^g P = {dp} differs from Δ = {}",
            dd.value
        )));
    }

    let omega = wedge_differentials(&sub, n)?;
    let deg_omega = finite(omega.degree(w)?, "ω")?;
    let deg_g = finite(g.weighted_degree(w)?, "g")?;
    let big_m = vol_deg.minus(&deg_omega).minus(&deg_g);
    let bound = Degree::Finite(&sum_w - &sum_deg);
    if big_m < bound {
        return Err(Error::Inconsistency(format!(
            "M = {big_m} is below sum w - sum deg f = {bound}"
        )));
    }

    let mut im = Intermediates::default();
    im.put("delta", dd.value.clone());
    im.put("sum_w", sum_w);
    im.put("max_w", max_w);
    im.put("M", big_m.clone());
    im.put("deg_wg_P", dp.clone());
    im.put("deg_omega_dg", vol_deg);
    im.put(
        "subset",
        dd.subset
            .iter()
            .map(|i| format!("f{}", i + 1))
            .collect::<Vec<_>>()
            .join(","),
    );
    im.put("Q", dd.q.display_with(&y_names(n)).to_string());

    if let Some(inv) = inverse {
        let m = certified_multiplicity(fs, &sub, g, &dd, inv, w)?;
        im.put("l", m.0 + 1);
        im.put("m", m.1);
        let inner = (&dp + &big_m).times(m.1 as u64, rank);
        let wl = Degree::Finite(w.get(m.0).clone());
        if wl < inner {
            return Err(Error::Inconsistency(format!(
                "deg x_l = {wl} is below m (deg_w^g P + M) = {inner}"
            )));
        }
    }
    Ok(IneqReport::new(lhs, rhs, false, im))
}

fn y_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("y{i}")).collect()
}

/// Finds `x_l` outside `k[f^w]`, writes it as `Φ(g)` with `Φ` over the
/// subset, and returns `(l, m_w^g(Φ))` after checking `m >= 1`.
fn certified_multiplicity(
    fs: &[Polynomial],
    sub: &[Polynomial],
    g: &Polynomial,
    dd: &DeltaData,
    inverse: &[Polynomial],
    w: &WeightVector,
) -> Result<(usize, usize)> {
    let n = fs.len();
    if inverse.len() != n || inverse.iter().any(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: inverse.len(),
        });
    }
    let initials = fs
        .iter()
        .map(|f| f.initial_form(w))
        .collect::<Result<Vec<_>>>()?;
    let xs: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
    let member = in_subalgebra(&initials, &xs)?;
    let l = member
        .iter()
        .position(|&b| !b)
        .ok_or_else(|| Error::Inconsistency("every x_i lies in k[f^w] despite dependent initial forms".into()))?;
    // z_1..z_{n-1} for the subset, y for the remaining generator
    let mut targets = vec![0usize; n];
    for (pos, &i) in dd.subset.iter().enumerate() {
        targets[i] = pos;
    }
    targets[dd.remaining] = n - 1;
    let phi_z = UPoly::from_last_variable(&inverse[l].relabel(&targets, n));
    let phi = expand_phi(&phi_z, sub, n)?;
    if phi.apply(g)? != xs[l] {
        return Err(Error::Precondition(
            "supplied inverse images do not invert the map".into(),
        ));
    }
    let m = m_wg(&phi, g, w, MMethod::CrossCheck)?;
    if m < 1 {
        return Err(Error::Inconsistency(format!(
            "m_w^g(Φ) = 0 for Φ(g) = x{} outside k[f^w]",
            l + 1
        )));
    }
    Ok((l, m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor44Report {
    pub report: IneqReport,
    pub d1: i64,
    pub d2: i64,
    /// One degree divides the other.
    pub divisibility: bool,
    /// The inequality and the divisibility both hold.
    pub holds: bool,
}

/// `deg f_1 + deg f_2 >= lcm(deg f_1, deg f_2) + min w`, and one degree
/// divides the other, for an automorphism of `k[x1, x2]` with dependent
/// initial forms and `w >= 0` integral.
pub fn check_cor44(f1: &Polynomial, f2: &Polynomial, w: &WeightVector) -> Result<Cor44Report> {
    let ws = match w.as_ints() {
        Some(ws) if ws.len() == 2 && ws.iter().all(|&v| v >= 0) => ws,
        _ => {
            return Err(Error::Precondition(
                "need two nonnegative integer weights".into(),
            ))
        }
    };
    let fs = [f1.clone(), f2.clone()];
    if fs.iter().any(|f| f.nvars() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: if f1.nvars() != 2 { f1.nvars() } else { f2.nvars() },
        });
    }
    constant_jacobian(&fs, 2)?;
    let initials = [f1.initial_form(w)?, f2.initial_form(w)?];
    if algebraically_independent(&initials)? {
        return Err(Error::NotApplicable(
            "initial forms are algebraically independent".into(),
        ));
    }
    let d1 = integer_degree(f1, w, "f1")?;
    let d2 = integer_degree(f2, w, "f2")?;
    if d1 <= 0 || d2 <= 0 {
        return Err(Error::Inconsistency(format!(
            "degrees of an automorphism with dependent initial forms must be positive, got ({d1}, {d2})"
        )));
    }
    let lcm = d1.lcm(&d2);
    let min_w = ws[0].min(ws[1]);
    let dd = delta_data(&fs, w)?;
    if dd.value != Degree::scalar(lcm) {
        return Err(Error::Inconsistency(format!(
            "Δ = {} differs from lcm = {lcm}",
            dd.value
        )));
    }
    let mut im = Intermediates::default();
    im.put("lcm", Degree::scalar(lcm));
    im.put("min_w", Degree::scalar(min_w));
    im.put("delta", dd.value);
    let report = IneqReport::new(Degree::scalar(d1 + d2), Degree::scalar(lcm + min_w), false, im);
    let divisibility = d2 % d1 == 0 || d1 % d2 == 0;
    Ok(Cor44Report {
        holds: report.holds && divisibility,
        report,
        d1,
        d2,
        divisibility,
    })
}
