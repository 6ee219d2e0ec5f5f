//! The ordered group of weights and the degrees it induces.
//!
//! Weights live in `Z^k` with the lexicographic order; `k` is the *rank* and
//! stays fixed inside one computation. Degrees extend the group with a least
//! element standing for the degree of the zero polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// An element of `Z^k`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gamma(Vec<i64>);

impl Gamma {
    pub fn new(levels: Vec<i64>) -> Self {
        assert!(!levels.is_empty(), "Gamma needs at least one level");
        Gamma(levels)
    }

    pub fn scalar(v: i64) -> Self {
        Gamma(vec![v])
    }

    pub fn zero(rank: usize) -> Self {
        Gamma::new(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn levels(&self) -> &[i64] {
        &self.0
    }

    /// The value when the rank is one.
    pub fn as_scalar(&self) -> Option<i64> {
        match self.0.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn is_positive(&self) -> bool {
        *self > Gamma::zero(self.rank())
    }

    pub fn is_nonnegative(&self) -> bool {
        *self >= Gamma::zero(self.rank())
    }

    /// The sum of `m` copies of `self`.
    pub fn times(&self, m: i64) -> Gamma {
        Gamma(self.0.iter().map(|v| v * m).collect())
    }
}

impl PartialOrd for Gamma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gamma {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.rank(), other.rank(), "comparing weights of different rank");
        self.0.cmp(&other.0)
    }
}

impl Add for &Gamma {
    type Output = Gamma;
    fn add(self, rhs: &Gamma) -> Gamma {
        debug_assert_eq!(self.rank(), rhs.rank());
        Gamma(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Gamma {
    type Output = Gamma;
    fn add(self, rhs: Gamma) -> Gamma {
        &self + &rhs
    }
}

impl Sub for &Gamma {
    type Output = Gamma;
    fn sub(self, rhs: &Gamma) -> Gamma {
        debug_assert_eq!(self.rank(), rhs.rank());
        Gamma(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Gamma {
    type Output = Gamma;
    fn sub(self, rhs: Gamma) -> Gamma {
        &self - &rhs
    }
}

impl Neg for Gamma {
    type Output = Gamma;
    fn neg(self) -> Gamma {
        Gamma(self.0.into_iter().map(|v| -v).collect())
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_scalar() {
            return write!(f, "{v}");
        }
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Rank-one values serialize as plain integers, higher ranks as arrays.
impl Serialize for Gamma {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(v) = self.as_scalar() {
            return serializer.serialize_i64(v);
        }
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for v in &self.0 {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

/// A group element or minus infinity, the degree of zero.
///
/// The variant order makes `MinusInfinity` the least element under the
/// derived ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    Finite(Gamma),
}

impl Degree {
    pub fn scalar(v: i64) -> Self {
        Degree::Finite(Gamma::scalar(v))
    }

    pub fn zero(rank: usize) -> Self {
        Degree::Finite(Gamma::zero(rank))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    pub fn finite(&self) -> Option<&Gamma> {
        match self {
            Degree::Finite(g) => Some(g),
            Degree::MinusInfinity => None,
        }
    }

    pub fn as_scalar(&self) -> Option<i64> {
        self.finite().and_then(Gamma::as_scalar)
    }

    /// `self - rhs` for a finite `rhs`; minus infinity absorbs.
    pub fn minus(&self, rhs: &Gamma) -> Degree {
        match self {
            Degree::Finite(g) => Degree::Finite(g - rhs),
            Degree::MinusInfinity => Degree::MinusInfinity,
        }
    }

    /// The sum of `m` copies of `self`. The empty sum is the group zero,
    /// so `0 * MinusInfinity = 0`.
    pub fn times(&self, m: u64, rank: usize) -> Degree {
        if m == 0 {
            return Degree::zero(rank);
        }
        match self {
            Degree::Finite(g) => Degree::Finite(g.times(m as i64)),
            Degree::MinusInfinity => Degree::MinusInfinity,
        }
    }
}

impl From<Gamma> for Degree {
    fn from(g: Gamma) -> Self {
        Degree::Finite(g)
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(g) => g.fmt(f),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::MinusInfinity => serializer.serialize_str("-inf"),
            Degree::Finite(g) => g.serialize(serializer),
        }
    }
}

/// Weights `(w_1, ..., w_n)` of the variables, all of one rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Gamma>,
}

impl WeightVector {
    pub fn new(weights: Vec<Gamma>) -> Result<Self> {
        let rank = weights.first().map_or(1, Gamma::rank);
        if weights.iter().any(|g| g.rank() != rank) {
            return Err(Error::InconsistentRank);
        }
        Ok(WeightVector { weights })
    }

    /// Rank-one weights from plain integers.
    pub fn from_ints(ws: &[i64]) -> Self {
        WeightVector {
            weights: ws.iter().map(|&v| Gamma::scalar(v)).collect(),
        }
    }

    /// All weights equal to one: the total degree grading.
    pub fn standard(n: usize) -> Self {
        WeightVector::from_ints(&vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.weights.first().map_or(1, Gamma::rank)
    }

    pub fn weights(&self) -> &[Gamma] {
        &self.weights
    }

    pub fn get(&self, i: usize) -> &Gamma {
        &self.weights[i]
    }

    pub fn zero(&self) -> Gamma {
        Gamma::zero(self.rank())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(Gamma::is_nonnegative)
    }

    pub fn sum(&self) -> Gamma {
        self.weights.iter().fold(self.zero(), |acc, g| &acc + g)
    }

    pub fn max(&self) -> Option<&Gamma> {
        self.weights.iter().max()
    }

    pub fn min(&self) -> Option<&Gamma> {
        self.weights.iter().min()
    }

    /// Integer weights when the rank is one.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.weights.iter().map(Gamma::as_scalar).collect()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.weights.len()))?;
        for g in &self.weights {
            seq.serialize_element(g)?;
        }
        seq.end()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_infinity_is_least() {
        assert!(Degree::MinusInfinity < Degree::scalar(i64::MIN));
        assert_eq!(Degree::MinusInfinity, Degree::MinusInfinity);
        assert_eq!(
            Degree::MinusInfinity.cmp(&Degree::MinusInfinity),
            Ordering::Equal
        );
    }

    #[test]
    fn minus_infinity_absorbs() {
        let d = Degree::scalar(7);
        assert_eq!(&d + &Degree::MinusInfinity, Degree::MinusInfinity);
        assert_eq!(&Degree::MinusInfinity + &d, Degree::MinusInfinity);
        assert_eq!(Degree::MinusInfinity.times(0, 1), Degree::scalar(0));
        assert_eq!(Degree::MinusInfinity.times(2, 1), Degree::MinusInfinity);
    }

    #[test]
    fn lex_order() {
        let a = Gamma::new(vec![1, -5]);
        let b = Gamma::new(vec![0, 100]);
        assert!(a > b);
        assert!(Gamma::new(vec![0, 1]).is_positive());
        assert!(!Gamma::new(vec![0, -1]).is_nonnegative());
        assert!(Gamma::new(vec![1, -1]).is_positive());
    }

    #[test]
    fn mixed_rank_rejected() {
        let err = WeightVector::new(vec![Gamma::scalar(1), Gamma::new(vec![1, 2])]);
        assert_eq!(err, Err(Error::InconsistentRank));
    }
}
