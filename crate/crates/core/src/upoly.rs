//! Polynomials `Φ = sum φ_i y^i` in one extra variable `y` over `k[x]`,
//! and the degree bookkeeping of substituting `y = g`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{rat, Degree, Gamma, Monomial, Polynomial, WeightVector};

/// `Φ = sum φ_i y^i`, dense in `y` and sparse in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly {
    nvars: usize,
    coeffs: Vec<Polynomial>,
}

impl UPoly {
    pub fn zero(nvars: usize) -> Self {
        UPoly {
            nvars,
            coeffs: Vec::new(),
        }
    }

    /// `y` itself.
    pub fn y(nvars: usize) -> Self {
        UPoly::new(nvars, vec![Polynomial::zero(nvars), Polynomial::one(nvars)])
    }

    pub fn new(nvars: usize, mut coeffs: Vec<Polynomial>) -> Self {
        assert!(coeffs.iter().all(|c| c.nvars() == nvars), "coefficient ring mismatch");
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        UPoly { nvars, coeffs }
    }

    /// Reads an `(n+1)`-variable polynomial as a polynomial in its last
    /// variable.
    pub fn from_last_variable(p: &Polynomial) -> Self {
        let n = p.nvars() - 1;
        let mut coeffs: Vec<Polynomial> = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents()[n] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Polynomial::zero(n));
            }
            let mono = Monomial::new(m.exponents()[..n].to_vec());
            coeffs[e] = &coeffs[e] + &Polynomial::monomial(n, mono, c.clone());
        }
        UPoly::new(n, coeffs)
    }

    /// The inverse of [`UPoly::from_last_variable`].
    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars;
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            for (m, a) in c.terms() {
                let mut e = m.exponents().to_vec();
                e.push(i as u32);
                terms.push((Monomial::new(e), a.clone()));
            }
        }
        Polynomial::from_terms(n + 1, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Polynomial {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    pub fn leading_coeff(&self) -> Option<&Polynomial> {
        self.coeffs.last()
    }

    /// `∂_y Φ`.
    pub fn derivative(&self) -> UPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rat(i as i64)))
            .collect();
        UPoly::new(self.nvars, coeffs)
    }

    pub fn nth_derivative(&self, k: usize) -> UPoly {
        (0..k).fold(self.clone(), |acc, _| acc.derivative())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F>(&self, nvars: usize, mut f: F) -> Result<UPoly>
    where
        F: FnMut(&Polynomial) -> Result<Polynomial>,
    {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(UPoly::new(nvars, coeffs))
    }

    /// Substitutes `z_j -> images[j]` in every coefficient.
    pub fn substitute_coeffs(&self, images: &[Polynomial]) -> Result<UPoly> {
        let nvars = images.first().map_or(self.nvars, Polynomial::nvars);
        self.map_coeffs(nvars, |c| c.substitute(images))
    }

    /// `Φ(g) = sum φ_i g^i`, by Horner's rule.
    pub fn apply(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        let mut acc = Polynomial::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + c;
        }
        Ok(acc)
    }

    /// `deg_w^g Φ = max_i deg_w(φ_i g^i)`.
    pub fn deg_wg(&self, g: &Polynomial, w: &WeightVector) -> Result<Degree> {
        self.check_ring(g)?;
        let dg = g.weighted_degree(w)?;
        let mut best = Degree::MinusInfinity;
        for (i, c) in self.coeffs.iter().enumerate() {
            // g^0 = 1 even when g = 0
            let d = c.weighted_degree(w)? + dg.times(i as u64, w.rank());
            best = best.max(d);
        }
        Ok(best)
    }

    /// `Φ^{w,g}`: the initial form of `Φ` as a polynomial in `(x, y)` under
    /// the weights `(w, deg_w g)`.
    pub fn initial_wg(&self, g: &Polynomial, w: &WeightVector) -> Result<UPoly> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("initial form of Φ"));
        }
        if g.is_zero() {
            return Err(Error::ZeroArgument("initial form with respect to g"));
        }
        let top = self.deg_wg(g, w)?;
        let dg = g.weighted_degree(w)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_zero() || c.weighted_degree(w)? + dg.times(i as u64, w.rank()) != top {
                    Ok(Polynomial::zero(self.nvars))
                } else {
                    c.initial_form(w)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UPoly::new(self.nvars, coeffs))
    }

    fn check_ring(&self, g: &Polynomial) -> Result<()> {
        if g.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: g.nvars(),
            });
        }
        Ok(())
    }

    pub fn display_with(&self, names: &[String]) -> impl fmt::Display {
        let mut all = names.to_vec();
        all.push("y".into());
        DisplayUPoly {
            poly: self.to_polynomial(),
            names: all,
        }
    }
}

struct DisplayUPoly {
    poly: Polynomial,
    names: Vec<String>,
}

impl fmt::Display for DisplayUPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.poly.display_with(&self.names);
        write!(f, "{shown}")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = crate::parse::x_names(self.nvars);
        names.push("y".into());
        let poly = self.to_polynomial();
        let shown = poly.display_with(&names);
        write!(f, "{shown}")
    }
}

/// How [`m_wg`] computes its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MMethod {
    /// Least `i` with `deg_w^g ∂_y^i Φ = deg_w (∂_y^i Φ)(g)`.
    ByDefinition,
    /// Least `i` with `(∂_y^i Φ^{w,g})(g^w) != 0`.
    ByInitial,
    /// Both, with an error on disagreement.
    CrossCheck,
}

fn check_nonzero(phi: &UPoly, g: &Polynomial) -> Result<()> {
    if phi.is_zero() {
        return Err(Error::ZeroArgument("m_w^g (Φ)"));
    }
    if g.is_zero() {
        return Err(Error::ZeroArgument("m_w^g (g)"));
    }
    Ok(())
}

fn m_by_definition(phi: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<usize> {
    let mut d = phi.clone();
    for i in 0.. {
        if d.deg_wg(g, w)? == d.apply(g)?.weighted_degree(w)? {
            return Ok(i);
        }
        d = d.derivative();
        if d.is_zero() {
            break;
        }
    }
    Err(Error::Inconsistency(
        "no derivative order attains deg_w^g; degrees must agree at deg_y Φ".into(),
    ))
}

fn m_by_initial(phi: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<usize> {
    let mut d = phi.initial_wg(g, w)?;
    let gw = g.initial_form(w)?;
    for i in 0.. {
        if !d.apply(&gw)?.is_zero() {
            return Ok(i);
        }
        d = d.derivative();
        if d.is_zero() {
            break;
        }
    }
    Err(Error::Inconsistency(
        "every derivative of Φ^{w,g} vanishes at g^w".into(),
    ))
}

/// `m_w^g(Φ)`.
pub fn m_wg(phi: &UPoly, g: &Polynomial, w: &WeightVector, method: MMethod) -> Result<usize> {
    check_nonzero(phi, g)?;
    match method {
        MMethod::ByDefinition => m_by_definition(phi, g, w),
        MMethod::ByInitial => m_by_initial(phi, g, w),
        MMethod::CrossCheck => {
            let a = m_by_definition(phi, g, w)?;
            let b = m_by_initial(phi, g, w)?;
            if a != b {
                return Err(Error::Inconsistency(format!(
                    "m_w^g by definition is {a} but by initial forms is {b}"
                )));
            }
            Ok(a)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// `m_w^g(Φ) = 0`
    pub cond1: bool,
    /// `deg_w^g Φ = deg_w Φ(g)`
    pub cond2: bool,
    /// `Φ^{w,g}(g^w) != 0`
    pub cond3: bool,
    /// `Φ(g) != 0` and `Φ(g)^w = Φ^{w,g}(g^w)`
    pub cond4: bool,
    pub all_equivalent: bool,
}

/// Evaluates the four equivalent characterizations of `m_w^g(Φ) = 0`, each
/// from scratch.
pub fn lemma32_report(phi: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<EquivalenceReport> {
    check_nonzero(phi, g)?;
    let cond1 = m_by_definition(phi, g, w)? == 0;

    let value = phi.apply(g)?;
    let cond2 = phi.deg_wg(g, w)? == value.weighted_degree(w)?;

    let initial = phi.initial_wg(g, w)?;
    let at_gw = initial.apply(&g.initial_form(w)?)?;
    let cond3 = !at_gw.is_zero();

    let cond4 = !value.is_zero() && value.initial_form(w)? == at_gw;

    Ok(EquivalenceReport {
        cond1,
        cond2,
        cond3,
        cond4,
        all_equivalent: cond1 == cond2 && cond2 == cond3 && cond3 == cond4,
    })
}

pub fn apply(phi: &UPoly, g: &Polynomial) -> Result<Polynomial> {
    phi.apply(g)
}

pub fn deg_wg(phi: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<Degree> {
    phi.deg_wg(g, w)
}

pub fn initial_wg(phi: &UPoly, g: &Polynomial, w: &WeightVector) -> Result<UPoly> {
    phi.initial_wg(g, w)
}

/// The weights `(w, deg_w g)` on `(x, y)`.
pub fn extended_weights(g: &Polynomial, w: &WeightVector) -> Result<WeightVector> {
    let dg = g
        .weighted_degree(w)?
        .finite()
        .cloned()
        .ok_or(Error::ZeroArgument("extended weights"))?;
    let mut ws: Vec<Gamma> = w.weights().to_vec();
    ws.push(dg);
    WeightVector::new(ws)
}

impl UPoly {
    pub fn mul(&self, other: &UPoly) -> UPoly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return UPoly::zero(self.nvars);
        }
        let mut coeffs = vec![Polynomial::zero(self.nvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UPoly::new(self.nvars, coeffs)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::new(self.nvars, vec![Polynomial::one(self.nvars)]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_upoly};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }
    fn u(s: &str, n: usize) -> UPoly {
        parse_upoly(s, n).unwrap()
    }
    fn w(ws: &[i64]) -> WeightVector {
        WeightVector::from_ints(ws)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            u("y^2 - x1^6", 2).apply(&p("x1^3 + x2", 2)).unwrap(),
            p("2*x1^3*x2 + x2^2", 2)
        );
        let g = p("x1*x2 - 3", 2);
        assert_eq!(UPoly::y(2).apply(&g).unwrap(), g);
        assert!(UPoly::zero(2).apply(&g).unwrap().is_zero());
    }

    #[test]
    fn deg_wg_examples() {
        let w11 = w(&[1, 1]);
        assert_eq!(
            u("y^2 - x1^6", 2).deg_wg(&p("x1^3 + x2", 2), &w11).unwrap(),
            Degree::scalar(6)
        );
        assert_eq!(u("y^2 + x1*y", 2).deg_wg(&p("x2", 2), &w11).unwrap(), Degree::scalar(2));
        assert_eq!(UPoly::zero(2).deg_wg(&p("x2", 2), &w11).unwrap(), Degree::MinusInfinity);
    }

    #[test]
    fn initial_wg_examples() {
        let w11 = w(&[1, 1]);
        let phi = u("y^2 - x1^6", 2);
        assert_eq!(phi.initial_wg(&p("x1^3 + x2", 2), &w11).unwrap(), phi);

        let phi = u("y + x1 + x1^2", 1);
        assert_eq!(phi.initial_wg(&p("x1", 1), &w(&[1])).unwrap(), u("x1^2", 1));

        let phi = u("y^2 - x1^2", 1);
        assert_eq!(phi.initial_wg(&p("x1", 1), &w(&[1])).unwrap(), phi);

        assert!(matches!(
            UPoly::zero(1).initial_wg(&p("x1", 1), &w(&[1])),
            Err(Error::ZeroArgument(_))
        ));
        assert!(matches!(
            phi.initial_wg(&Polynomial::zero(1), &w(&[1])),
            Err(Error::ZeroArgument(_))
        ));
    }

    #[test]
    fn initial_wg_matches_extended_initial_form() {
        let g = p("x1^3 + x2 + 1", 2);
        let ww = w(&[1, 2]);
        let phi = u("x2*y^2 - x1^6*x2 + y*x1 + 5", 2);
        let ext = extended_weights(&g, &ww).unwrap();
        let direct = phi.to_polynomial().initial_form(&ext).unwrap();
        assert_eq!(phi.initial_wg(&g, &ww).unwrap().to_polynomial(), direct);
    }

    #[test]
    fn m_examples() {
        let w11 = w(&[1, 1]);
        for method in [MMethod::ByDefinition, MMethod::ByInitial, MMethod::CrossCheck] {
            assert_eq!(m_wg(&u("y^2 - x1^6", 2), &p("x1^3 + x2", 2), &w11, method).unwrap(), 1);
            assert_eq!(m_wg(&u("y^2 + x1", 2), &p("x2", 2), &w11, method).unwrap(), 0);
            assert_eq!(
                m_wg(&u("(y - x1 - x2)^2", 2), &p("x1 + x2", 2), &w11, method).unwrap(),
                2
            );
        }
        assert!(matches!(
            m_wg(&UPoly::zero(2), &p("x1", 2), &w11, MMethod::CrossCheck),
            Err(Error::ZeroArgument(_))
        ));
    }

    #[test]
    fn equivalence_report_examples() {
        let w11 = w(&[1, 1]);
        let r = lemma32_report(&u("y^2 + x1", 2), &p("x2", 2), &w11).unwrap();
        assert!(r.cond1 && r.cond2 && r.cond3 && r.cond4 && r.all_equivalent);
        let r = lemma32_report(&u("y^2 - x1^6", 2), &p("x1^3 + x2", 2), &w11).unwrap();
        assert!(!r.cond1 && !r.cond2 && !r.cond3 && !r.cond4 && r.all_equivalent);
        let r = lemma32_report(&UPoly::y(2), &p("x1 + x2^3 - 2", 2), &w11).unwrap();
        assert!(r.cond1 && r.cond4 && r.all_equivalent);
    }

    #[test]
    fn last_variable_round_trip() {
        let phi = u("x1*y^3 - 2*y + x1^2", 1);
        assert_eq!(UPoly::from_last_variable(&phi.to_polynomial()), phi);
        assert_eq!(phi.to_string(), "x1*y^3 + x1^2 - 2*y");
    }
}
