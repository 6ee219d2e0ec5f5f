#![allow(dead_code)]

pub mod oracles;

use proptest::prelude::*;
use wgrade::{Monomial, Polynomial, Rational, WeightVector};

/// Polynomials in `n` variables with per-variable exponent at most
/// `max_exp` and at most `max_terms` terms, small integer coefficients.
pub fn poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -4i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))),
        )
    })
}

pub fn nonzero_poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(n, max_exp, max_terms.max(1)).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn nonconstant_poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(n, max_exp, max_terms.max(1)).prop_filter("nonconstant", |p| !p.is_constant())
}

pub fn weights(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(lo..=hi, n).prop_map(|ws| WeightVector::from_ints(&ws))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
