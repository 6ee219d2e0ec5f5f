//! Sparse multivariate polynomials over the rationals and their weighted
//! gradings.

mod grading;
mod monomial;
mod polynomial;

use std::collections::BTreeMap;

pub use grading::{Degree, Gamma, WeightVector};
pub use monomial::Monomial;
pub use polynomial::Polynomial;

use crate::error::Result;

/// Exact coefficients. Always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn weighted_degree(f: &Polynomial, w: &WeightVector) -> Result<Degree> {
    f.weighted_degree(w)
}

pub fn initial_form(f: &Polynomial, w: &WeightVector) -> Result<Polynomial> {
    f.initial_form(w)
}

pub fn homogeneous_components(f: &Polynomial, w: &WeightVector) -> Result<BTreeMap<Gamma, Polynomial>> {
    f.homogeneous_components(w)
}

pub fn partial_derivative(f: &Polynomial, i: usize) -> Result<Polynomial> {
    f.partial_derivative(i)
}

pub fn substitute_vars(f: &Polynomial, images: &[Polynomial]) -> Result<Polynomial> {
    f.substitute(images)
}

/// Integer to rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::parse::parse_poly;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let w21 = WeightVector::from_ints(&[2, 1]);
        assert_eq!(weighted_degree(&p("x1 + x2^2", 2), &w21).unwrap(), Degree::scalar(2));
        assert_eq!(
            weighted_degree(&Polynomial::zero(2), &w21).unwrap(),
            Degree::MinusInfinity
        );
        let core = p("x1*x3 + x2^2", 3);
        assert_eq!(
            weighted_degree(&core, &WeightVector::standard(3)).unwrap(),
            Degree::scalar(2)
        );
    }

    #[test]
    fn weighted_degree_dimension_mismatch() {
        let err = weighted_degree(&p("x1", 2), &WeightVector::standard(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn initial_form_examples() {
        let f = p("x1 + x2^2", 2);
        assert_eq!(
            initial_form(&f, &WeightVector::standard(2)).unwrap(),
            p("x2^2", 2)
        );
        assert_eq!(initial_form(&f, &WeightVector::from_ints(&[2, 1])).unwrap(), f);
        let tau2 = p("x2 + (x1*x3 + x2^2)*x3", 3);
        assert_eq!(
            initial_form(&tau2, &WeightVector::standard(3)).unwrap(),
            p("(x1*x3 + x2^2)*x3", 3)
        );
        assert_eq!(
            initial_form(&Polynomial::zero(2), &WeightVector::standard(2)),
            Err(Error::ZeroArgument("initial form"))
        );
    }

    #[test]
    fn homogeneous_components_examples() {
        let c = homogeneous_components(&p("x1 + x2^2", 2), &WeightVector::standard(2)).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[&Gamma::scalar(1)], p("x1", 2));
        assert_eq!(c[&Gamma::scalar(2)], p("x2^2", 2));
        assert!(homogeneous_components(&Polynomial::zero(2), &WeightVector::standard(2))
            .unwrap()
            .is_empty());
        let c = homogeneous_components(&p("x1*x3 + x2^2 + x3", 3), &WeightVector::standard(3)).unwrap();
        assert_eq!(c[&Gamma::scalar(1)], p("x3", 3));
        assert_eq!(c[&Gamma::scalar(2)], p("x1*x3 + x2^2", 3));
    }

    #[test]
    fn partial_derivative_examples() {
        let f = p("x1*x3 + x2^2", 3);
        assert_eq!(partial_derivative(&f, 1).unwrap(), p("2*x2", 3));
        assert_eq!(partial_derivative(&f, 0).unwrap(), p("x3", 3));
        assert!(partial_derivative(&p("7/3", 3), 2).unwrap().is_zero());
        assert_eq!(
            partial_derivative(&f, 3),
            Err(Error::IndexOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn substitute_examples() {
        let f = p("x1*x3 + x2^2", 3);
        let id: Vec<_> = (0..3).map(|i| Polynomial::var(i, 3)).collect();
        assert_eq!(substitute_vars(&f, &id).unwrap(), f);

        // y1^3 - y2^2 at (t^2, t^3)
        let cusp = p("x1^3 - x2^2", 2);
        let images = vec![p("x1^2", 1), p("x1^3", 1)];
        assert!(substitute_vars(&cusp, &images).unwrap().is_zero());

        let sym = p("x1 + x2", 2);
        let swap = vec![p("x2", 2), p("x1", 2)];
        assert_eq!(substitute_vars(&sym, &swap).unwrap(), sym);

        assert!(matches!(
            substitute_vars(&sym, &swap[..1]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            substitute_vars(&sym, &[p("x1", 1), p("x1", 2)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lex_weights() {
        // Γ = Z^2: w1 = (1,0), w2 = (0,1); x2^5 < x1
        let w = WeightVector::new(vec![Gamma::new(vec![1, 0]), Gamma::new(vec![0, 1])]).unwrap();
        let f = p("x1 + x2^5", 2);
        assert_eq!(initial_form(&f, &w).unwrap(), p("x1", 2));
        assert_eq!(
            weighted_degree(&f, &w).unwrap(),
            Degree::Finite(Gamma::new(vec![1, 0]))
        );
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2 - x2^2", 2);
        let b = p("x1 - x2", 2);
        assert_eq!(a.div_exact(&b).unwrap(), p("x1 + x2", 2));
        assert!(p("x1^2 + 1", 2).div_exact(&b).is_none());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("x2^2 + x1*x3", 3).to_string(), "x1*x3 + x2^2");
        assert_eq!(p("-1/2*x1 + 3 - x2^2", 2).to_string(), "-x2^2 - 1/2*x1 + 3");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
    }
}
