//! Seeded random inputs for campaigns and invariant suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wgrade::forms::DiffForm;
use wgrade::{Gamma, Monomial, Polynomial, Rational, UPoly, WeightVector};

/// The seed of trial `t` in a run seeded with `seed` (SplitMix64 over the
/// pair).
pub fn child_seed(seed: u64, t: u64) -> u64 {
    let mut z = seed ^ t.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A nonzero integer in `[-bound, bound]`.
pub fn coeff(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return int(c);
        }
    }
}

/// A monomial of total degree exactly `d`.
pub fn monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// Up to `terms` terms of total degree at most `deg`. May be zero.
pub fn poly(rng: &mut ChaCha8Rng, n: usize, deg: u32, terms: usize) -> Polynomial {
    let t = rng.gen_range(1..=terms.max(1));
    Polynomial::from_terms(
        n,
        (0..t).map(|_| {
            let d = rng.gen_range(0..=deg);
            (monomial(rng, n, d), coeff(rng, 5))
        }),
    )
}

/// A polynomial with a term of total degree at least one.
pub fn nonconstant(rng: &mut ChaCha8Rng, n: usize, deg: u32, terms: usize) -> Polynomial {
    loop {
        let p = poly(rng, n, deg.max(1), terms);
        if !p.is_constant() {
            return p;
        }
    }
}

/// Integer weights in `[lo, hi]`.
pub fn weights(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> WeightVector {
    let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    WeightVector::from_ints(&ws)
}

/// Weights in `Z^2` under the lexicographic order.
pub fn lex_weights(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> WeightVector {
    let gs = (0..n)
        .map(|_| Gamma::new(vec![rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)]))
        .collect();
    WeightVector::new(gs).expect("uniform rank")
}

/// A grade-one form `sum c_i dx_i`.
pub fn one_form(rng: &mut ChaCha8Rng, n: usize, deg: u32, terms: usize) -> DiffForm {
    loop {
        let mut cs: Vec<(Vec<usize>, Polynomial)> = Vec::new();
        for i in 0..n {
            if rng.gen_bool(0.7) {
                cs.push((vec![i], poly(rng, n, deg, terms)));
            }
        }
        let form = DiffForm::from_terms(n, 1, cs).expect("well-formed terms");
        if !form.is_zero() {
            return form;
        }
    }
}

/// `Φ_z = (y - Z)^k Ψ + c` over `r` coordinates, which vanishes to order
/// `k` along `y = Z` up to the constant.
pub fn cancelling_phi(rng: &mut ChaCha8Rng, z: &Polynomial, k: u32, deg: u32) -> UPoly {
    let r = z.nvars();
    let root = UPoly::new(r, vec![-z, Polynomial::one(r)]);
    let psi_len = rng.gen_range(1..=2);
    let mut psi: Vec<Polynomial> = (0..psi_len).map(|_| poly(rng, r, deg, 2)).collect();
    if psi.iter().all(Polynomial::is_zero) {
        psi = vec![Polynomial::one(r)];
    }
    let phi = root.pow(k).mul(&UPoly::new(r, psi));
    let mut cs = phi.coeffs().to_vec();
    if rng.gen_bool(0.5) {
        cs[0] = &cs[0] + &Polynomial::constant(r, coeff(rng, 3));
    }
    UPoly::new(r, cs)
}

/// A random `Φ_z` with up to `max_y + 1` coefficients.
pub fn random_phi(rng: &mut ChaCha8Rng, r: usize, deg: u32, max_y: usize) -> UPoly {
    loop {
        let len = rng.gen_range(1..=max_y + 1);
        let phi = UPoly::new(r, (0..len).map(|_| poly(rng, r, deg, 2)).collect());
        if !phi.is_zero() {
            return phi;
        }
    }
}
