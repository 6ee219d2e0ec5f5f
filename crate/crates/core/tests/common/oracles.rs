//! Reference computations that share no code with the library's forms or
//! Groebner engine. Shared by the core tests and the acceptance target.

#![allow(dead_code)]

use num_traits::{One, Zero};
use wgrade::{Monomial, Polynomial, Rational};

/// SplitMix64, so the oracle does not depend on any RNG crate.
pub struct Mix(pub u64);

impl Mix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

pub fn eval(p: &Polynomial, point: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for (x, &e) in point.iter().zip(m.exponents()) {
            for _ in 0..e {
                t *= x;
            }
        }
        acc += t;
    }
    acc
}

/// Rank of a rational matrix by row reduction.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Generic rank of the Jacobian `(∂h_i/∂x_j)`: the largest rank seen at a
/// handful of random integer points. Equal to `s` exactly when the `h_i`
/// are algebraically independent (characteristic zero).
pub fn jacobian_rank(hs: &[Polynomial], n: usize, seed: u64) -> usize {
    let partials: Vec<Vec<Polynomial>> = hs
        .iter()
        .map(|h| (0..n).map(|j| h.partial_derivative(j).unwrap()).collect())
        .collect();
    let mut mix = Mix(seed);
    let mut best = 0;
    for _ in 0..6 {
        let point: Vec<Rational> = (0..n)
            .map(|_| Rational::from_integer(mix.int(-97, 97).into()))
            .collect();
        let m: Vec<Vec<Rational>> = partials
            .iter()
            .map(|row| row.iter().map(|p| eval(p, &point)).collect())
            .collect();
        best = best.max(rank(m));
        if best == hs.len().min(n) {
            break;
        }
    }
    best
}

/// Fraction-free (Bareiss) determinant over a polynomial ring.
pub fn bareiss_det(mut a: Vec<Vec<Polynomial>>, nvars: usize) -> Polynomial {
    let n = a.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    let mut sign = false;
    let mut prev = Polynomial::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return Polynomial::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Coefficients of `h(t) - y` in `t`, as polynomials in `(y1, y2)`.
fn shifted_coeffs(h: &Polynomial, slot: usize) -> Vec<Polynomial> {
    let d = h.degree_in(0).unwrap_or(0) as usize;
    let mut cs = vec![Polynomial::zero(2); d + 1];
    for (m, c) in h.terms() {
        let e = m.exponents()[0] as usize;
        cs[e] = &cs[e] + &Polynomial::constant(2, c.clone());
    }
    cs[0] = &cs[0] - &Polynomial::var(slot, 2);
    cs
}

/// `Res_t(h1(t) - y1, h2(t) - y2)` via the Sylvester matrix. For
/// nonconstant `h1, h2` this is `c Q^k` with `Q` the implicit equation.
pub fn implicit_resultant(h1: &Polynomial, h2: &Polynomial) -> Polynomial {
    assert_eq!(h1.nvars(), 1);
    let a = shifted_coeffs(h1, 0);
    let b = shifted_coeffs(h2, 1);
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    let mut m = vec![vec![Polynomial::zero(2); size]; size];
    for r in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m[db + r][r + k] = c.clone();
        }
    }
    bareiss_det(m, 2)
}

/// Whether `r = c q^k` for a nonzero scalar `c` and some `k >= 1`.
pub fn is_scalar_power(r: &Polynomial, q: &Polynomial) -> bool {
    let (Some(dr), Some(dq)) = (r.total_degree(), q.total_degree()) else {
        return false;
    };
    if dq == 0 || dr % dq != 0 {
        return false;
    }
    let k = (dr / dq) as u32;
    let qk = q.pow(k);
    let (m, c) = qk.leading_term().unwrap();
    let rc = r.coefficient(m);
    if rc.is_zero() {
        return false;
    }
    *r == qk.scale(&(&rc / c))
}

/// `x^e` as a polynomial in `n` variables.
pub fn mono(n: usize, e: &[u32], c: i64) -> Polynomial {
    Polynomial::monomial(n, Monomial::new(e.to_vec()), Rational::from_integer(c.into()))
}

pub fn is_one(p: &Polynomial) -> bool {
    p.as_constant().is_some_and(|c| c.is_one())
}
