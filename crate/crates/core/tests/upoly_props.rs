mod common;

use common::{nonconstant_poly, poly, weights};
use proptest::prelude::*;
use wgrade::upoly::{lemma32_report, m_wg, MMethod};
use wgrade::{Polynomial, UPoly, WeightVector};

/// `(Φ, g)` in two variables. Half of the cases are built as
/// `(y - (g - δ))^k Ψ + R` with a low-degree `δ`, which forces
/// cancellation and therefore `m >= 1` often.
fn phi_and_g() -> impl Strategy<Value = (UPoly, Polynomial)> {
    (
        nonconstant_poly(2, 3, 3),
        poly(2, 1, 2),
        1u32..=3,
        prop::collection::vec(poly(2, 2, 2), 1..=2),
        poly(2, 1, 1),
        any::<bool>(),
        prop::collection::vec(poly(2, 2, 3), 1..=4),
    )
        .prop_map(|(g, delta, k, psi, rest, structured, random)| {
            let phi = if structured {
                let root = UPoly::new(2, vec![-&(&g - &delta), Polynomial::one(2)]);
                let psi = UPoly::new(2, psi);
                let psi = if psi.is_zero() { UPoly::new(2, vec![Polynomial::one(2)]) } else { psi };
                let mut phi = root.pow(k).mul(&psi);
                let mut cs = phi.coeffs().to_vec();
                cs[0] = &cs[0] + &rest;
                phi = UPoly::new(2, cs);
                phi
            } else {
                UPoly::new(2, random)
            };
            (phi, g)
        })
        .prop_filter("nonzero Φ", |(phi, _)| !phi.is_zero())
}

fn w2() -> impl Strategy<Value = WeightVector> {
    weights(2, -1, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn substitution_never_exceeds_deg_wg((phi, g) in phi_and_g(), w in w2()) {
        prop_assert!(phi.deg_wg(&g, &w).unwrap() >= phi.apply(&g).unwrap().weighted_degree(&w).unwrap());
    }

    #[test]
    fn derivative_recursion((phi, g) in phi_and_g(), w in w2()) {
        let m = m_wg(&phi, &g, &w, MMethod::CrossCheck).unwrap();
        if m >= 1 {
            let d = phi.derivative();
            prop_assert_eq!(m_wg(&d, &g, &w, MMethod::CrossCheck).unwrap() + 1, m);
            prop_assert_eq!(phi.deg_wg(&g, &w).unwrap(), d.deg_wg(&g, &w).unwrap() + g.weighted_degree(&w).unwrap());
        }
    }

    #[test]
    fn initial_substitution_approximates((phi, g) in phi_and_g(), w in w2()) {
        let gw = g.initial_form(&w).unwrap();
        let approx = phi.initial_wg(&g, &w).unwrap().apply(&gw).unwrap();
        let diff = &phi.apply(&g).unwrap() - &approx;
        prop_assert!(diff.weighted_degree(&w).unwrap() < phi.deg_wg(&g, &w).unwrap());
    }

    #[test]
    fn derivatives_commute_with_initial_forms((phi, g) in phi_and_g(), w in w2()) {
        let top = phi.deg_y().unwrap();
        for i in 0..=top {
            // only meaningful while the derivative of the initial form survives
            let rhs = phi.initial_wg(&g, &w).unwrap().nth_derivative(i);
            if rhs.is_zero() {
                break;
            }
            let lhs = phi.nth_derivative(i).initial_wg(&g, &w).unwrap();
            prop_assert_eq!(lhs, rhs, "order {}", i);
        }
    }

    #[test]
    fn two_methods_agree_and_bound((phi, g) in phi_and_g(), w in w2()) {
        let a = m_wg(&phi, &g, &w, MMethod::ByDefinition).unwrap();
        let b = m_wg(&phi, &g, &w, MMethod::ByInitial).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a <= phi.deg_y().unwrap());
    }

    #[test]
    fn zero_cancellation_conditions_agree((phi, g) in phi_and_g(), w in w2()) {
        prop_assert!(lemma32_report(&phi, &g, &w).unwrap().all_equivalent);
    }
}

#[test]
fn structured_cases_reach_positive_m() {
    // y^2 - x1^6 at g = x1^3 + x2 with unit weights cancels once
    let g = wgrade::parse::parse_poly("x1^3 + x2", 2).unwrap();
    let phi = wgrade::parse::parse_upoly("y^2 - x1^6", 2).unwrap();
    let w = WeightVector::standard(2);
    assert_eq!(m_wg(&phi, &g, &w, MMethod::CrossCheck).unwrap(), 1);
}
