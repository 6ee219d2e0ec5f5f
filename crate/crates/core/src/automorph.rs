//! Polynomial endomorphisms given by the images of the variables:
//! elementary and affine generators, composition with a generator log for
//! exact inversion, Jacobian determinants, the Nagata map and seeded random
//! tame maps.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poly::{rat, Monomial, Polynomial, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// One tame generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `x_index -> alpha * x_index + poly`, other variables fixed.
    Elementary {
        index: usize,
        alpha: Rational,
        poly: Polynomial,
    },
    /// `x -> matrix * x + shift`.
    Affine { matrix: Matrix, shift: Vec<Rational> },
}

/// `x_i -> images[i]`. Composition is substitution:
/// `(σ ∘ τ)(x_i) = σ(x_i)(τ(x_1), ..., τ(x_n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    images: Vec<Polynomial>,
    /// The generators whose composite is this map, when it was built from
    /// generators.
    provenance: Option<Vec<Generator>>,
}

impl PolyMap {
    pub fn identity(n: usize) -> Self {
        PolyMap {
            images: (0..n).map(|i| Polynomial::var(i, n)).collect(),
            provenance: Some(Vec::new()),
        }
    }

    /// A map with no generator log.
    pub fn from_images(images: Vec<Polynomial>) -> Result<Self> {
        let n = images.len();
        if let Some(bad) = images.iter().find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        Ok(PolyMap {
            images,
            provenance: None,
        })
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn provenance(&self) -> Option<&[Generator]> {
        self.provenance.as_deref()
    }

    pub fn is_tame_built(&self) -> bool {
        self.provenance.is_some()
    }

    pub fn total_degrees(&self) -> Vec<u64> {
        self.images.iter().map(|p| p.total_degree().unwrap_or(0)).collect()
    }

    pub fn max_total_degree(&self) -> u64 {
        self.total_degrees().into_iter().max().unwrap_or(0)
    }

    /// The inverse, reconstructed from the generator log.
    pub fn inverse(&self) -> Result<PolyMap> {
        let log = self
            .provenance
            .as_ref()
            .ok_or_else(|| Error::Precondition("map has no generator log".into()))?;
        let n = self.nvars();
        let mut acc = PolyMap::identity(n);
        for g in log.iter().rev() {
            acc = compose(&acc, &generator_map(&invert_generator(g, n)?, n)?)?;
        }
        Ok(acc)
    }
}

fn invert_generator(g: &Generator, n: usize) -> Result<Generator> {
    match g {
        Generator::Elementary { index, alpha, poly } => {
            let inv = alpha.recip();
            Ok(Generator::Elementary {
                index: *index,
                alpha: inv.clone(),
                poly: -poly.scale(&inv),
            })
        }
        Generator::Affine { matrix, shift } => {
            let a_inv = matrix_inverse(matrix)?;
            let shift = (0..n)
                .map(|i| {
                    -(0..n)
                        .map(|j| &a_inv[i][j] * &shift[j])
                        .fold(Rational::zero(), |s, t| s + t)
                })
                .collect();
            Ok(Generator::Affine {
                matrix: a_inv,
                shift,
            })
        }
    }
}

fn generator_map(g: &Generator, n: usize) -> Result<PolyMap> {
    match g {
        Generator::Elementary { index, alpha, poly } => elementary(n, *index, alpha.clone(), poly.clone()),
        Generator::Affine { matrix, shift } => affine(matrix.clone(), shift.clone()),
    }
}

/// `x_l -> alpha x_l + f` with `f` free of `x_l`; `l` is zero-based.
pub fn elementary(n: usize, l: usize, alpha: Rational, f: Polynomial) -> Result<PolyMap> {
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l, nvars: n });
    }
    if f.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    if alpha.is_zero() {
        return Err(Error::ZeroArgument("elementary automorphism scalar"));
    }
    if f.involves(l) {
        return Err(Error::Precondition(format!(
            "polynomial part of an elementary map at x{} must not involve x{}",
            l + 1,
            l + 1
        )));
    }
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
    images[l] = &images[l].scale(&alpha) + &f;
    Ok(PolyMap {
        images,
        provenance: Some(vec![Generator::Elementary {
            index: l,
            alpha,
            poly: f,
        }]),
    })
}

/// `x_i -> sum_j a_ij x_j + b_i` for invertible `A`.
pub fn affine(matrix: Matrix, shift: Vec<Rational>) -> Result<PolyMap> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: row.len(),
        });
    }
    if shift.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: shift.len(),
        });
    }
    if determinant(&matrix).is_zero() {
        return Err(Error::Singular);
    }
    let images = (0..n)
        .map(|i| {
            let mut terms: Vec<(Monomial, Rational)> = (0..n)
                .map(|j| (Monomial::var(j, n), matrix[i][j].clone()))
                .collect();
            terms.push((Monomial::one(n), shift[i].clone()));
            Polynomial::from_terms(n, terms)
        })
        .collect();
    Ok(PolyMap {
        images,
        provenance: Some(vec![Generator::Affine { matrix, shift }]),
    })
}

/// `(σ ∘ τ)(x_i) = σ(x_i)(τ(x))`. Logs concatenate when both are present.
pub fn compose(sigma: &PolyMap, tau: &PolyMap) -> Result<PolyMap> {
    if sigma.nvars() != tau.nvars() {
        return Err(Error::DimensionMismatch {
            expected: sigma.nvars(),
            found: tau.nvars(),
        });
    }
    let images = sigma
        .images
        .iter()
        .map(|p| p.substitute(&tau.images))
        .collect::<Result<Vec<_>>>()?;
    let provenance = match (&sigma.provenance, &tau.provenance) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
        _ => None,
    };
    Ok(PolyMap { images, provenance })
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(matrix: &Matrix) -> Rational {
    let n = matrix.len();
    let mut a = matrix.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Gauss-Jordan inverse.
pub fn matrix_inverse(matrix: &Matrix) -> Result<Matrix> {
    let n = matrix.len();
    let mut a: Matrix = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
        a.swap(pivot, col);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..2 * n {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn poly_det(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &poly_det(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `det (∂σ_i/∂x_j)` by cofactor expansion.
pub fn jacobian_det(sigma: &PolyMap) -> Polynomial {
    let n = sigma.nvars();
    let jac: Vec<Vec<Polynomial>> = sigma
        .images
        .iter()
        .map(|f| (0..n).map(|j| f.partial_derivative(j).expect("index in range")).collect())
        .collect();
    poly_det(&jac, n)
}

const NAGATA_CORE: &str = "(x1*x3 + x2^2)";

/// `x1 -> x1 - 2 Δ x2 - Δ^2 x3`, `x2 -> x2 + Δ x3`, `x3 -> x3` with
/// `Δ = x1 x3 + x2^2`.
pub fn nagata() -> PolyMap {
    let d = NAGATA_CORE;
    PolyMap::from_images(vec![
        parse_poly(&format!("x1 - 2*{d}*x2 - {d}^2*x3"), 3).expect("fixed input"),
        parse_poly(&format!("x2 + {d}*x3"), 3).expect("fixed input"),
        parse_poly("x3", 3).expect("fixed input"),
    ])
    .expect("three images in three variables")
}

/// The inverse of [`nagata`]: `x1 -> x1 + 2 Δ x2 - Δ^2 x3`,
/// `x2 -> x2 - Δ x3`, `x3 -> x3`.
pub fn nagata_inverse() -> PolyMap {
    let d = NAGATA_CORE;
    PolyMap::from_images(vec![
        parse_poly(&format!("x1 + 2*{d}*x2 - {d}^2*x3"), 3).expect("fixed input"),
        parse_poly(&format!("x2 - {d}*x3"), 3).expect("fixed input"),
        parse_poly("x3", 3).expect("fixed input"),
    ])
    .expect("three images in three variables")
}

/// Total degree cap for [`random_tame`].
pub const DEGREE_CAP: u64 = 60;

fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let bound = bound.max(1);
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn random_poly_without(
    rng: &mut ChaCha8Rng,
    n: usize,
    skip: usize,
    deg_bound: u32,
    coeff_bound: i64,
) -> Polynomial {
    if n == 1 {
        return Polynomial::from_int(1, rng.gen_range(-coeff_bound..=coeff_bound));
    }
    let nterms = rng.gen_range(1..=3);
    let terms: Vec<(Monomial, Rational)> = (0..nterms)
        .map(|_| {
            let total = rng.gen_range(0..=deg_bound);
            let mut e = vec![0u32; n];
            for _ in 0..total {
                let mut v = rng.gen_range(0..n - 1);
                if v >= skip {
                    v += 1;
                }
                e[v] += 1;
            }
            (Monomial::new(e), rat(nonzero_int(rng, coeff_bound)))
        })
        .collect();
    Polynomial::from_terms(n, terms)
}

fn random_affine(rng: &mut ChaCha8Rng, n: usize, coeff_bound: i64) -> Generator {
    let ident = |i: usize, j: usize| if i == j { Rational::one() } else { Rational::zero() };
    let mut m: Matrix = (0..n).map(|i| (0..n).map(|j| ident(i, j)).collect()).collect();
    // transvections, then a diagonal; a random row swap for good measure
    if n > 1 {
        for _ in 0..n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = rat(rng.gen_range(-coeff_bound..=coeff_bound));
            for col in 0..n {
                let t = &c * &m[j][col];
                m[i][col] += t;
            }
        }
        if rng.gen_bool(0.5) {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            m.swap(i, j);
        }
    }
    for row in m.iter_mut() {
        let d = rat(nonzero_int(rng, coeff_bound.min(3)));
        for v in row.iter_mut() {
            *v *= &d;
        }
    }
    let shift = (0..n).map(|_| rat(rng.gen_range(-coeff_bound..=coeff_bound))).collect();
    Generator::Affine { matrix: m, shift }
}

/// A deterministic composite of `steps` random elementary and affine
/// generators. Steps that would push the total degree past
/// [`DEGREE_CAP`] are redrawn.
pub fn random_tame(n: usize, steps: usize, deg_bound: u32, coeff_bound: i64, seed: u64) -> PolyMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeff_bound = coeff_bound.max(1);
    let mut acc = PolyMap::identity(n);
    if n == 0 {
        return acc;
    }
    for _ in 0..steps {
        let mut attempts = 0;
        loop {
            attempts += 1;
            let gen = if rng.gen_bool(0.5) && attempts < 32 {
                let l = rng.gen_range(0..n);
                let alpha = rat(nonzero_int(&mut rng, coeff_bound.min(3)));
                let poly = random_poly_without(&mut rng, n, l, deg_bound, coeff_bound);
                Generator::Elementary { index: l, alpha, poly }
            } else {
                random_affine(&mut rng, n, coeff_bound)
            };
            let step = generator_map(&gen, n).expect("generators are valid by construction");
            let next = compose(&acc, &step).expect("same dimension");
            if next.max_total_degree() <= DEGREE_CAP {
                acc = next;
                break;
            }
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JungReport {
    pub d1: u64,
    pub d2: u64,
    pub divisible: bool,
}

/// Total degrees of the two images and whether one divides the other.
pub fn check_jung(sigma: &PolyMap) -> Result<JungReport> {
    if sigma.nvars() != 2 {
        return Err(Error::Precondition(format!(
            "two-variable maps only, got {}",
            sigma.nvars()
        )));
    }
    let d = sigma.total_degrees();
    let (d1, d2) = (d[0], d[1]);
    let divisible = (d1 != 0 && d2 % d1 == 0) || (d2 != 0 && d1 % d2 == 0);
    Ok(JungReport { d1, d2, divisible })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn elementary_examples() {
        let s = elementary(2, 1, rat(1), p("x1^3", 2)).unwrap();
        assert_eq!(s.images(), &[p("x1", 2), p("x2 + x1^3", 2)]);
        let s = elementary(3, 0, rat(2), Polynomial::zero(3)).unwrap();
        assert_eq!(s.images(), &[p("2*x1", 3), p("x2", 3), p("x3", 3)]);
        assert!(matches!(
            elementary(2, 0, rat(1), p("x1", 2)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            elementary(2, 0, rat(0), p("x2", 2)),
            Err(Error::ZeroArgument(_))
        ));
    }

    #[test]
    fn affine_examples() {
        let id = affine(mat(&[&[1, 0], &[0, 1]]), vec![rat(0), rat(0)]).unwrap();
        assert_eq!(id.images(), PolyMap::identity(2).images());
        let swap = affine(mat(&[&[0, 1], &[1, 0]]), vec![rat(0), rat(0)]).unwrap();
        assert_eq!(swap.images(), &[p("x2", 2), p("x1", 2)]);
        assert_eq!(
            affine(mat(&[&[1, 2], &[2, 4]]), vec![rat(0), rat(0)]),
            Err(Error::Singular)
        );
    }

    #[test]
    fn compose_examples() {
        let tau = elementary(2, 1, rat(1), p("x1^3", 2)).unwrap();
        assert_eq!(compose(&PolyMap::identity(2), &tau).unwrap().images(), tau.images());
        let swap = affine(mat(&[&[0, 1], &[1, 0]]), vec![rat(0), rat(0)]).unwrap();
        assert_eq!(compose(&swap, &swap).unwrap().images(), PolyMap::identity(2).images());

        let a = elementary(2, 1, rat(1), p("x1^2", 2)).unwrap();
        let b = elementary(2, 0, rat(1), p("x2", 2)).unwrap();
        let ab = compose(&a, &b).unwrap();
        // a(x1) = x1 at b: x1 + x2; a(x2) = x2 + x1^2 at b: x2 + (x1 + x2)^2
        assert_eq!(ab.images(), &[p("x1 + x2", 2), p("x2 + (x1 + x2)^2", 2)]);
        assert_eq!(ab.provenance().unwrap().len(), 2);
    }

    #[test]
    fn inverse_from_log() {
        let a = elementary(2, 1, rat(3), p("x1^2 - 1", 2)).unwrap();
        let b = affine(mat(&[&[1, 2], &[0, -1]]), vec![rat(5), rat(-1)]).unwrap();
        let s = compose(&a, &b).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(compose(&s, &inv).unwrap().images(), PolyMap::identity(2).images());
        assert_eq!(compose(&inv, &s).unwrap().images(), PolyMap::identity(2).images());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&mat(&[&[2, 1], &[1, 1]])), rat(1));
        assert_eq!(determinant(&mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]])), rat(-3));
        let inv = matrix_inverse(&mat(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(inv, mat(&[&[1, -1], &[-1, 2]]));
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(jacobian_det(&PolyMap::identity(3)), Polynomial::one(3));
        assert_eq!(jacobian_det(&nagata()), Polynomial::one(3));
        let s = PolyMap::from_images(vec![p("2*x1", 2), p("x2", 2)]).unwrap();
        assert_eq!(jacobian_det(&s), Polynomial::from_int(2, 2));
    }

    #[test]
    fn nagata_map() {
        let t = nagata();
        assert_eq!(t.total_degrees(), vec![5, 3, 1]);
        assert_eq!(t.images()[2], p("x3", 3));
        let id = PolyMap::identity(3);
        assert_eq!(compose(&t, &nagata_inverse()).unwrap().images(), id.images());
        assert_eq!(compose(&nagata_inverse(), &t).unwrap().images(), id.images());
    }

    #[test]
    fn random_tame_contract() {
        assert_eq!(random_tame(3, 0, 3, 5, 1).images(), PolyMap::identity(3).images());
        let a = random_tame(3, 4, 3, 5, 42);
        let b = random_tame(3, 4, 3, 5, 42);
        assert_eq!(a, b);
        for seed in 0..20 {
            let s = random_tame(2, 4, 3, 4, seed);
            assert!(s.max_total_degree() <= DEGREE_CAP);
            let j = jacobian_det(&s);
            assert!(j.as_constant().is_some_and(|c| !c.is_zero()), "seed {seed}: {j}");
            assert!(check_jung(&s).unwrap().divisible);
            let inv = s.inverse().unwrap();
            assert_eq!(compose(&s, &inv).unwrap().images(), PolyMap::identity(2).images());
        }
    }

    #[test]
    fn jung_examples() {
        let s = PolyMap::from_images(vec![p("x1", 2), p("x2 + x1^3", 2)]).unwrap();
        assert_eq!(
            check_jung(&s).unwrap(),
            JungReport {
                d1: 1,
                d2: 3,
                divisible: true
            }
        );
        let s = PolyMap::from_images(vec![p("x1 + x2", 2), p("x2", 2)]).unwrap();
        assert!(check_jung(&s).unwrap().divisible);
        assert!(check_jung(&PolyMap::identity(3)).is_err());
    }
}
