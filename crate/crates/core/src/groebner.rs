//! Buchberger's algorithm over the rationals and the elimination tools
//! built on it: kernels of polynomial maps, principal generators,
//! minimal annihilating polynomials and subalgebra membership.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::algebraically_independent;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// The first `eliminate` variables are compared first (degree, then
    /// grevlex within the block), the rest by grevlex. Any element whose
    /// leading monomial avoids the block lies in the elimination ideal.
    Elimination { eliminate: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination { eliminate } => {
                let k = eliminate.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

/// Limits for one basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of single-term reduction steps.
    pub max_steps: usize,
    /// Maximum arithmetic work: each step costs the length of the polynomials
    /// involved times the squared coefficient size in 64-bit words, so
    /// coefficient growth is charged as well as step count.
    pub max_work: u64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_steps: usize::MAX,
        max_work: u64::MAX,
    };
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 2_000_000,
            max_work: 400_000_000,
        }
    }
}

/// An ideal given by generators; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        Ok(Ideal {
            nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Terms sorted in decreasing order; never contains zero coefficients.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self - c * m * other`, merged in order.
    fn sub_mul(&self, c: &Rational, m: &Monomial, other: &SortedPoly, ord: MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |j: usize| other.terms[j].0.mul(m);
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.extend_from_slice(&self.terms[i..]);
                break;
            }
            let sm = shifted(j);
            if i == self.terms.len() {
                out.push((sm, -(c * &other.terms[j].1)));
                j += 1;
                continue;
            }
            match ord.cmp(&self.terms[i].0, &sm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((sm, -(c * &other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - c * &other.terms[j].1;
                    if !v.is_zero() {
                        out.push((sm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SortedPoly { terms: out }
    }
}

struct Reducer<'a> {
    ord: MonomialOrder,
    budget: Budget,
    steps: &'a mut usize,
    work: u64,
}

fn words(c: &Rational) -> u64 {
    1 + (c.numer().bits() + c.denom().bits()) / 64
}

fn max_words(p: &SortedPoly) -> u64 {
    p.terms.iter().map(|(_, c)| words(c)).max().unwrap_or(1)
}

impl Reducer<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.steps += 1;
        if *self.steps > self.budget.max_steps {
            return Err(Error::Capacity(format!(
                "Groebner basis exceeded {} reduction steps",
                self.budget.max_steps
            )));
        }
        Ok(())
    }

    fn charge(&mut self, cost: u64) -> Result<()> {
        self.work = self.work.saturating_add(cost);
        if self.work > self.budget.max_work {
            return Err(Error::Capacity(format!(
                "Groebner basis exceeded {} units of arithmetic work",
                self.budget.max_work
            )));
        }
        Ok(())
    }

    /// Full reduction of `f` modulo `basis` (only the listed indices).
    fn reduce(&mut self, f: &SortedPoly, basis: &[SortedPoly], active: &[usize]) -> Result<SortedPoly> {
        let mut p = f.clone();
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        while !p.is_zero() {
            let (m, c) = p.terms[0].clone();
            let reducer = active.iter().map(|&k| &basis[k]).find(|g| g.lm().divides(&m));
            match reducer {
                Some(g) => {
                    self.tick()?;
                    let q = g.lm().quotient_of(&m).expect("divides");
                    let coef = &c / g.lc();
                    // bignum products and gcds grow roughly quadratically in size
                    let size = words(&coef) + max_words(g) + max_words(&p);
                    self.charge((p.terms.len() + g.terms.len()) as u64 * size * size)?;
                    p = p.sub_mul(&coef, &q, g, self.ord);
                }
                None => {
                    rem.push((m, c));
                    p.terms.remove(0);
                }
            }
        }
        Ok(SortedPoly { terms: rem })
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn pair(basis: &[SortedPoly], sugar: &[u64], i: usize, j: usize) -> Pair {
    let lcm = basis[i].lm().lcm(basis[j].lm());
    let d = lcm.total_degree();
    let si = sugar[i] + d - basis[i].lm().total_degree();
    let sj = sugar[j] + d - basis[j].lm().total_degree();
    Pair {
        i,
        j,
        lcm,
        sugar: si.max(sj),
    }
}

fn s_poly(a: &SortedPoly, b: &SortedPoly, lcm: &Monomial, ord: MonomialOrder) -> SortedPoly {
    let ma = a.lm().quotient_of(lcm).expect("lcm");
    let mb = b.lm().quotient_of(lcm).expect("lcm");
    let left = SortedPoly {
        terms: Vec::new(),
    }
    .sub_mul(&(-a.lc().recip()), &ma, a, ord);
    left.sub_mul(&b.lc().recip(), &mb, b, ord)
}

/// Adds `h` to the basis and updates the pair list (Gebauer-Moeller).
fn insert_element(
    h: SortedPoly,
    s: u64,
    basis: &mut Vec<SortedPoly>,
    sugar: &mut Vec<u64>,
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
) {
    basis.push(h);
    sugar.push(s);
    let hi = basis.len() - 1;
    let hm = basis[hi].lm().clone();
    let coprime = |p: &Pair| basis[p.i].lm().is_coprime(&hm);

    let mut cands: Vec<Pair> = active.iter().map(|&g| pair(basis, sugar, g, hi)).collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = cands.pop() {
        let covered = cands.iter().chain(&kept).any(|q| q.lcm.divides(&p.lcm));
        if coprime(&p) || !covered {
            kept.push(p);
        }
    }
    kept.retain(|p| !coprime(p));

    pairs.retain(|p| {
        !(hm.divides(&p.lcm)
            && basis[p.i].lm().lcm(&hm) != p.lcm
            && basis[p.j].lm().lcm(&hm) != p.lcm)
    });
    pairs.extend(kept);

    active.retain(|&g| !hm.divides(basis[g].lm()));
    active.push(hi);
}

/// Reduced Groebner basis, with the default budget.
pub fn groebner_basis(ideal: &Ideal, ord: MonomialOrder) -> Result<Ideal> {
    groebner_basis_with(ideal, ord, Budget::default())
}

/// Reduced Groebner basis: sugar selection, Gebauer-Moeller pair criteria.
pub fn groebner_basis_with(ideal: &Ideal, ord: MonomialOrder, budget: Budget) -> Result<Ideal> {
    let n = ideal.nvars;
    let mut steps = 0usize;
    let mut red = Reducer {
        ord,
        budget,
        steps: &mut steps,
        work: 0,
    };

    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<SortedPoly> = ideal
        .generators
        .iter()
        .map(|g| SortedPoly::from_poly(g, ord))
        .collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));

    for g in inputs {
        let mut h = red.reduce(&g, &basis, &active)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        let s = h.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0);
        insert_element(h, s, &mut basis, &mut sugar, &mut active, &mut pairs);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| ord.cmp(&pairs[a].lcm, &pairs[b].lcm))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        red.tick()?;
        let s = s_poly(&basis[p.i], &basis[p.j], &p.lcm, ord);
        let mut h = red.reduce(&s, &basis, &active)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        insert_element(h, p.sugar, &mut basis, &mut sugar, &mut active, &mut pairs);
    }

    // minimal, then fully interreduced
    let mut minimal: Vec<SortedPoly> = active.iter().map(|&k| basis[k].clone()).collect();
    minimal.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    let mut reduced: Vec<SortedPoly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != k)
            .map(|(_, g)| g.clone())
            .collect();
        let idx: Vec<usize> = (0..others.len()).collect();
        let head = SortedPoly {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = SortedPoly {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let tail = red.reduce(&tail, &others, &idx)?;
        let mut g = head;
        g.terms.extend(tail.terms);
        g.make_monic();
        reduced.push(g);
    }
    Ideal::new(n, reduced.iter().map(|g| g.to_poly(n)).collect())
}

fn check_reduced(basis: &Ideal, ord: MonomialOrder) -> Result<Vec<SortedPoly>> {
    let sorted: Vec<SortedPoly> = basis
        .generators
        .iter()
        .map(|g| SortedPoly::from_poly(g, ord))
        .collect();
    for (i, g) in sorted.iter().enumerate() {
        if !g.lc().is_one() {
            return Err(Error::NotInterreduced);
        }
        for (j, h) in sorted.iter().enumerate() {
            if i != j && h.terms.iter().any(|(m, _)| g.lm().divides(m)) {
                return Err(Error::NotInterreduced);
            }
        }
    }
    Ok(sorted)
}

/// Remainder of `f` modulo a reduced Groebner basis.
pub fn normal_form(f: &Polynomial, basis: &Ideal, ord: MonomialOrder) -> Result<Polynomial> {
    if f.nvars() != basis.nvars {
        return Err(Error::DimensionMismatch {
            expected: basis.nvars,
            found: f.nvars(),
        });
    }
    let sorted = check_reduced(basis, ord)?;
    let idx: Vec<usize> = (0..sorted.len()).collect();
    let mut steps = 0;
    let mut red = Reducer {
        ord,
        budget: Budget::UNLIMITED,
        steps: &mut steps,
        work: 0,
    };
    Ok(red
        .reduce(&SortedPoly::from_poly(f, ord), &sorted, &idx)?
        .to_poly(basis.nvars))
}

fn check_images(images: &[Polynomial]) -> Result<usize> {
    let n = images
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::Precondition("no images".into()))?;
    if let Some(bad) = images.iter().find(|p| p.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.nvars(),
        });
    }
    Ok(n)
}

/// The graph ideal `<y_i - images[i]>` in `(x_1..x_n, y_1..y_m)`, and its
/// basis under an order eliminating the `x` block.
fn graph_basis(images: &[Polynomial]) -> Result<(usize, Ideal)> {
    let n = check_images(images)?;
    let m = images.len();
    let gens: Vec<Polynomial> = images
        .iter()
        .enumerate()
        .map(|(i, p)| &Polynomial::var(n + i, n + m) - &p.extend_vars(m))
        .collect();
    let ideal = Ideal::new(n + m, gens)?;
    Ok((n, groebner_basis(&ideal, MonomialOrder::Elimination { eliminate: n })?))
}

/// Generators of the kernel of `k[y_1..y_m] -> k[x]`, `y_i -> images[i]`.
pub fn map_kernel(images: &[Polynomial]) -> Result<Ideal> {
    if images.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroArgument("map kernel image"));
    }
    let m = images.len();
    let (n, basis) = graph_basis(images)?;
    let drop_x: Vec<usize> = (0..n + m).map(|i| i.saturating_sub(n)).collect();
    let gens = basis
        .generators
        .iter()
        .filter(|g| (0..n).all(|i| !g.involves(i)))
        .map(|g| g.relabel(&drop_x, m))
        .collect();
    Ideal::new(m, gens)
}

/// The generator `Q` of a principal ideal, monic under grevlex.
pub fn principal_generator(ideal: &Ideal) -> Result<Polynomial> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ord = MonomialOrder::GrevLex;
    let basis = groebner_basis(ideal, ord)?;
    let q = basis
        .generators
        .iter()
        .min_by_key(|g| g.total_degree())
        .expect("nonzero ideal has a nonzero basis")
        .clone();
    // Q lies in the ideal, so dividing every basis element proves <Q> = I.
    if basis.generators.iter().any(|g| g.div_exact(&q).is_none()) {
        return Err(Error::NonPrincipal);
    }
    let lc = SortedPoly::from_poly(&q, ord).lc().clone();
    Ok(q.scale(&lc.recip()))
}

/// A generator `P` of the kernel of `k[z_1..z_r][y] -> k[x]`,
/// `z_j -> h_j`, `y -> s`, when `s` is algebraic over `k(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annihilator {
    /// Coefficients in `z_1..z_r`; leading `y`-coefficient has leading
    /// coefficient one.
    #[serde(skip)]
    pub p: Option<UPoly>,
    pub deg_y: Option<usize>,
    pub exists: bool,
}

pub fn min_annihilating(hs: &[Polynomial], s: &Polynomial) -> Result<Annihilator> {
    if s.is_zero() {
        return Err(Error::ZeroArgument("annihilated element"));
    }
    if hs.is_empty() {
        return Err(Error::Precondition("need at least one generator".into()));
    }
    if !algebraically_independent(hs)? {
        return Err(Error::Precondition("generators are algebraically dependent".into()));
    }
    let mut all = hs.to_vec();
    all.push(s.clone());
    if algebraically_independent(&all)? {
        return Ok(Annihilator {
            p: None,
            deg_y: None,
            exists: false,
        });
    }
    let q = principal_generator(&map_kernel(&all)?)?;
    let p = UPoly::from_last_variable(&q);
    let lead = p.leading_coeff().expect("kernel generator involves y");
    let (_, c) = lead.leading_term().expect("nonzero");
    let c = c.recip();
    let p = p.map_coeffs(p.nvars(), |a| Ok(a.scale(&c)))?;
    Ok(Annihilator {
        deg_y: p.deg_y(),
        p: Some(p),
        exists: true,
    })
}

/// For each target, whether it lies in the subalgebra `k[gens]`.
pub fn in_subalgebra(gens: &[Polynomial], targets: &[Polynomial]) -> Result<Vec<bool>> {
    let (n, basis) = graph_basis(gens)?;
    let m = gens.len();
    let ord = MonomialOrder::Elimination { eliminate: n };
    targets
        .iter()
        .map(|t| {
            if t.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.nvars(),
                });
            }
            let r = normal_form(&t.extend_vars(m), &basis, ord)?;
            Ok((0..n).all(|i| !r.involves(i)))
        })
        .collect()
}
