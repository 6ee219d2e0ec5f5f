mod common;

use common::poly;
use proptest::prelude::*;
use wgrade::parse::{parse_poly, parse_upoly};
use wgrade::UPoly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_polynomials_parse_back(p in poly(3, 4, 6)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, 3).unwrap(), p, "{}", text);
    }

    #[test]
    fn printed_upolys_parse_back(cs in prop::collection::vec(poly(2, 2, 3), 0..=3)) {
        let phi = UPoly::new(2, cs);
        let text = phi.to_string();
        prop_assert_eq!(parse_upoly(&text, 2).unwrap(), phi, "{}", text);
    }
}

#[test]
fn grammar_examples() {
    let nagata_core = parse_poly("x1*x3 + x2^2", 3).unwrap();
    assert_eq!(nagata_core.num_terms(), 2);
    let phi = parse_upoly("y^2 - x1^6", 1).unwrap();
    assert_eq!(phi.deg_y(), Some(2));
    assert!(parse_poly("x4", 3).is_err());
    assert_eq!(parse_poly("3/6*x1", 1).unwrap(), parse_poly("x1/2", 1).unwrap());
}
