//! Differential forms `sum f_I dx_I` over the polynomial ring.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Degree, Polynomial, WeightVector};

/// An element of the `grade`-th exterior power of the module of
/// differentials, stored in the `dx` basis with strictly increasing
/// (zero-based) index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffForm {
    nvars: usize,
    grade: usize,
    terms: BTreeMap<Vec<usize>, Polynomial>,
}

impl DiffForm {
    pub fn zero(nvars: usize, grade: usize) -> Self {
        DiffForm {
            nvars,
            grade,
            terms: BTreeMap::new(),
        }
    }

    /// The grade-zero form `f`.
    pub fn function(f: Polynomial) -> Self {
        let mut out = DiffForm::zero(f.nvars(), 0);
        if !f.is_zero() {
            out.terms.insert(Vec::new(), f);
        }
        out
    }

    /// `dx_{i+1}`.
    pub fn basis(i: usize, nvars: usize) -> Self {
        assert!(i < nvars);
        let mut out = DiffForm::zero(nvars, 1);
        out.terms.insert(vec![i], Polynomial::one(nvars));
        out
    }

    /// Builds `sum coeff * dx_I`; tuples need not be sorted, repeated
    /// indices give zero.
    pub fn from_terms<I>(nvars: usize, grade: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut out = DiffForm::zero(nvars, grade);
        for (idx, c) in terms {
            if idx.len() != grade {
                return Err(Error::DimensionMismatch {
                    expected: grade,
                    found: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= nvars) {
                return Err(Error::IndexOutOfRange { index: bad, nvars });
            }
            if c.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: c.nvars(),
                });
            }
            if let Some((sorted, negate)) = canonical(idx) {
                out.add_term(sorted, if negate { -c } else { c });
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Option<&Polynomial> {
        self.terms.get(idx)
    }

    pub fn scale(&self, f: &Polynomial) -> DiffForm {
        let mut out = DiffForm::zero(self.nvars, self.grade);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c * f);
        }
        out
    }

    pub fn add(&self, other: &DiffForm) -> Result<DiffForm> {
        if self.grade != other.grade || self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.grade,
                found: other.grade,
            });
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let grade = self.grade + other.grade;
        if grade > self.nvars {
            return Err(Error::GradeTooLarge {
                grade,
                nvars: self.nvars,
            });
        }
        let mut out = DiffForm::zero(self.nvars, grade);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                if let Some((sorted, negate)) = canonical(idx) {
                    let c = a * b;
                    out.add_term(sorted, if negate { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `max(deg_w f_I + sum_{i in I} w_i)`.
    pub fn degree(&self, w: &WeightVector) -> Result<Degree> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: w.len(),
            });
        }
        let mut best = Degree::MinusInfinity;
        for (idx, c) in &self.terms {
            let shift = idx.iter().fold(w.zero(), |acc, &i| &acc + w.get(i));
            let d = c.weighted_degree(w)? + Degree::Finite(shift);
            best = best.max(d);
        }
        Ok(best)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for i in idx {
                write!(f, " dx{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Sorts an index tuple, returning the sign flip, or `None` on a repeat.
fn canonical(mut idx: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut negate = false;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negate = !negate;
            j -= 1;
        }
    }
    if idx.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((idx, negate))
}

/// `df = sum (∂f/∂x_i) dx_i`.
pub fn differential(f: &Polynomial) -> DiffForm {
    let n = f.nvars();
    let mut out = DiffForm::zero(n, 1);
    for i in 0..n {
        let c = f.partial_derivative(i).expect("index in range");
        out.add_term(vec![i], c);
    }
    out
}

pub fn wedge(a: &DiffForm, b: &DiffForm) -> Result<DiffForm> {
    a.wedge(b)
}

pub fn form_degree(omega: &DiffForm, w: &WeightVector) -> Result<Degree> {
    omega.degree(w)
}

/// `df_1 ∧ ... ∧ df_s`. Empty input gives the constant form `1`; more
/// forms than variables give the zero form of grade `nvars`.
pub fn wedge_differentials(fs: &[Polynomial], nvars: usize) -> Result<DiffForm> {
    let mut acc = DiffForm::function(Polynomial::one(nvars));
    if fs.len() > nvars {
        return Ok(DiffForm::zero(nvars, nvars));
    }
    for f in fs {
        if f.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: f.nvars(),
            });
        }
        acc = acc.wedge(&differential(f))?;
        if acc.is_zero() {
            return Ok(DiffForm::zero(nvars, fs.len()));
        }
    }
    Ok(acc)
}

/// Wedge that treats forms of grade beyond the ambient dimension as zero.
pub(crate) fn wedge_or_zero(a: &DiffForm, b: &DiffForm) -> Result<DiffForm> {
    match a.wedge(b) {
        Err(Error::GradeTooLarge { nvars, .. }) => Ok(DiffForm::zero(nvars, nvars)),
        other => other,
    }
}

/// True iff `dh_1 ∧ ... ∧ dh_s != 0`, which in characteristic zero is
/// algebraic independence. More polynomials than variables are always
/// dependent.
pub fn algebraically_independent(hs: &[Polynomial]) -> Result<bool> {
    let Some(first) = hs.first() else {
        return Ok(true);
    };
    let n = first.nvars();
    if hs.len() > n {
        return Ok(false);
    }
    Ok(!wedge_differentials(hs, n)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoMaxReport {
    /// `deg η_i + deg η̃_i` for each `i`.
    pub values: Vec<Degree>,
    /// Zero-based indices of the two smallest maximizers, if the maximum
    /// is attained twice.
    pub witnesses: Option<(usize, usize)>,
    pub holds: bool,
}

/// Computes `deg η_i + deg(η_1 ∧ .. η̂_i .. ∧ η_l)` for every `i` and checks
/// that the maximum is attained at least twice.
pub fn two_max_check(etas: &[DiffForm], w: &WeightVector) -> Result<TwoMaxReport> {
    let l = etas.len();
    if l < 2 {
        return Err(Error::Precondition("need at least two forms".into()));
    }
    let n = etas[0].nvars();
    if l - 1 > n {
        return Err(Error::GradeTooLarge { grade: l - 1, nvars: n });
    }
    if let Some(bad) = etas.iter().find(|e| e.grade() != 1 || e.nvars() != n) {
        return Err(Error::Precondition(format!(
            "expected grade-1 forms in {n} variables, got grade {} in {}",
            bad.grade(),
            bad.nvars()
        )));
    }
    // prefix[i] = η_1 ∧ .. ∧ η_i, suffix[i] = η_{i+1} ∧ .. ∧ η_l
    let one = DiffForm::function(Polynomial::one(n));
    let mut prefix = vec![one.clone()];
    for e in &etas[..l - 1] {
        let next = prefix.last().unwrap().wedge(e)?;
        prefix.push(next);
    }
    let mut suffix = vec![one; l];
    for i in (0..l - 1).rev() {
        suffix[i] = etas[i + 1].wedge(&suffix[i + 1])?;
    }
    let mut values = Vec::with_capacity(l);
    for i in 0..l {
        let tilde = prefix[i].wedge(&suffix[i])?;
        values.push(etas[i].degree(w)? + tilde.degree(w)?);
    }
    let max = values.iter().max().unwrap().clone();
    let hits: Vec<usize> = (0..l).filter(|&i| values[i] == max).collect();
    let witnesses = (hits.len() >= 2).then(|| (hits[0], hits[1]));
    Ok(TwoMaxReport {
        holds: witnesses.is_some(),
        values,
        witnesses,
    })
}
