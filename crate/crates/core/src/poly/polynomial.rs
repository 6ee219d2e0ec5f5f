use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::grading::{Degree, Gamma, WeightVector};
use super::monomial::{write_monomial, Monomial};
use super::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are kept in graded-lexicographic order with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Polynomial::constant(nvars, Rational::from_integer(c.into()))
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    ///
    /// Panics if `i >= nvars`.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Polynomial::monomial(nvars, Monomial::var(i, nvars), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars, "monomial has wrong variable count");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Degree in the single variable `i`, `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[i]).max()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[i] > 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Exact partial derivative in the zero-based variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.terms
                .insert(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitutes `x_i -> images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let Some(target) = images.first().map(Polynomial::nvars) else {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: bad.nvars,
            });
        }
        let terms: Vec<(&[u32], &Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.exponents(), c))
            .collect();
        Ok(horner(&terms, 0, images, target))
    }

    /// Re-embeds into `nvars` variables, sending variable `i` to `targets[i]`.
    pub fn relabel(&self, targets: &[usize], nvars: usize) -> Polynomial {
        assert_eq!(targets.len(), self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; nvars];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[targets[i]] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Appends `extra` fresh variables after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let targets: Vec<usize> = (0..self.nvars).collect();
        self.relabel(&targets, self.nvars + extra)
    }

    pub fn weighted_degree(&self, w: &WeightVector) -> Result<Degree> {
        w.check_len(self.nvars)?;
        Ok(self
            .terms
            .keys()
            .map(|m| m.weight(w))
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite))
    }

    /// The top homogeneous component `f^w`.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Polynomial> {
        w.check_len(self.nvars)?;
        if self.is_zero() {
            return Err(Error::ZeroArgument("initial form"));
        }
        let weights: Vec<Gamma> = self.terms.keys().map(|m| m.weight(w)).collect();
        let top = weights.iter().max().expect("nonzero polynomial").clone();
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .zip(&weights)
                .filter(|(_, g)| **g == top)
                .map(|((m, c), _)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn homogeneous_components(&self, w: &WeightVector) -> Result<BTreeMap<Gamma, Polynomial>> {
        w.check_len(self.nvars)?;
        let mut out: BTreeMap<Gamma, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight(w))
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn is_homogeneous(&self, w: &WeightVector) -> Result<bool> {
        Ok(self.homogeneous_components(w)?.len() <= 1)
    }

    /// `self / d` when the division is exact, `None` otherwise.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, d.nvars);
        let (dm, dc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = dm.quotient_of(m)?;
            let qc = c / dc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Writes with custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, names: Option<&[String]>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, names)?;
            }
        }
        Ok(())
    }
}

struct Named<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write(f, Some(self.names))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, None)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials of different rings");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials of different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials of different rings");
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Evaluates the terms (exponent vectors from `var` on) at `images`,
/// nesting Horner's rule one variable at a time.
fn horner(terms: &[(&[u32], &Rational)], var: usize, images: &[Polynomial], target: usize) -> Polynomial {
    if var == images.len() {
        let c = terms.iter().fold(Rational::zero(), |s, (_, c)| s + *c);
        return Polynomial::constant(target, c);
    }
    let mut groups: BTreeMap<u32, Vec<(&[u32], &Rational)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[var]).or_default().push((e, c));
    }
    let mut acc = Polynomial::zero(target);
    let mut prev: Option<u32> = None;
    for (&e, group) in groups.iter().rev() {
        if let Some(p) = prev {
            acc = &acc * &images[var].pow(p - e);
        }
        acc.add_assign(&horner(group, var + 1, images, target));
        prev = Some(e);
    }
    if let Some(p) = prev {
        if p > 0 {
            acc = &acc * &images[var].pow(p);
        }
    }
    acc
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
