mod common;

use common::{nonconstant_poly, oracles::eval, oracles::Mix};
use proptest::prelude::*;
use wgrade::automorph::{check_jung, compose, jacobian_det, random_tame, PolyMap};
use wgrade::ineq::check_t43;
use wgrade::{Error, Polynomial, Rational, WeightVector};

fn is_identity(sigma: &PolyMap) -> bool {
    let n = sigma.nvars();
    sigma.images().iter().enumerate().all(|(i, p)| *p == Polynomial::var(i, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_from_log_undoes_the_map(seed in any::<u64>(), n in 2usize..=3, steps in 1usize..=4) {
        let sigma = random_tame(n, steps, 2, 3, seed);
        let inv = sigma.inverse().unwrap();
        prop_assert!(is_identity(&compose(&sigma, &inv).unwrap()));
        prop_assert!(is_identity(&compose(&inv, &sigma).unwrap()));
    }

    #[test]
    fn tame_jacobian_is_a_nonzero_constant(seed in any::<u64>(), n in 2usize..=3) {
        let j = jacobian_det(&random_tame(n, 4, 3, 4, seed));
        prop_assert!(j.as_constant().is_some_and(|c| c != Rational::from_integer(0.into())));
    }

    #[test]
    fn jacobian_chain_rule(
        s in prop::collection::vec(nonconstant_poly(2, 2, 3), 2),
        t in prop::collection::vec(nonconstant_poly(2, 2, 3), 2),
        seed in any::<u64>(),
    ) {
        let sigma = PolyMap::from_images(s).unwrap();
        let tau = PolyMap::from_images(t).unwrap();
        let lhs = jacobian_det(&compose(&sigma, &tau).unwrap());
        let rhs = &jacobian_det(&sigma).substitute(tau.images()).unwrap() * &jacobian_det(&tau);
        prop_assert_eq!(&lhs, &rhs);
        // and pointwise, through the independent evaluator
        let mut mix = Mix(seed);
        let pt: Vec<Rational> = (0..2).map(|_| Rational::from_integer(mix.int(-9, 9).into())).collect();
        prop_assert_eq!(eval(&lhs, &pt), eval(&rhs, &pt));
    }

    #[test]
    fn jung_divisibility(seed in any::<u64>(), steps in 1usize..=6) {
        let r = check_jung(&random_tame(2, steps, 3, 4, seed)).unwrap();
        prop_assert!(r.divisible, "{:?}", r);
    }

    #[test]
    fn degree_inequality_on_tame_maps(seed in any::<u64>(), n in 2usize..=3, ws in prop::collection::vec(0i64..=3, 3)) {
        let sigma = random_tame(n, 3, 2, 3, seed);
        let inv = sigma.inverse().unwrap();
        let w = WeightVector::from_ints(&ws[..n]);
        match check_t43(sigma.images(), &w, Some(inv.images())) {
            Ok(r) => prop_assert!(r.holds, "{:?}", r),
            Err(Error::Precondition(_)) | Err(Error::NotApplicable(_)) => {}
            Err(e) => prop_assert!(false, "{e} for {:?}", sigma.images()),
        }
    }
}
