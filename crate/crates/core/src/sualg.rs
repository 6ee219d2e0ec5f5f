//! Algebraic dependence between homogeneous elements, extension degrees
//! over fraction fields of initial algebras, and generation of initial
//! algebras.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::algebraically_independent;
use crate::groebner::{in_subalgebra, min_annihilating};
use crate::poly::{Gamma, Polynomial, Rational, WeightVector};

/// Exponents and scalar with `g^{l_fg} = alpha * f^{l_gf}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogPairData {
    pub l_fg: u32,
    pub l_gf: u32,
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
}

fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Coprime `(p, q)` with `p * b = q * a`, if the two degrees are
/// proportional.
fn proportion(a: &Gamma, b: &Gamma) -> Option<(u32, u32)> {
    let lead = a.levels().iter().position(|&v| v != 0)?;
    let (x, y) = (a.levels()[lead], b.levels()[lead]);
    if x <= 0 || y <= 0 {
        return None;
    }
    let d = x.gcd(&y);
    let (p, q) = (x / d, y / d);
    if b.times(p) != a.times(q) {
        return None;
    }
    Some((u32::try_from(p).ok()?, u32::try_from(q).ok()?))
}

/// For `w`-homogeneous, algebraically dependent `f` and `g` of positive
/// degree, the coprime exponents `l(f,g)`, `l(g,f)` and the scalar `alpha`
/// with `g^{l(f,g)} = alpha f^{l(g,f)}`.
pub fn homog_pair(f: &Polynomial, g: &Polynomial, w: &WeightVector) -> Result<HomogPairData> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroArgument("homogeneous pair"));
    }
    if !f.is_homogeneous(w)? || !g.is_homogeneous(w)? {
        return Err(Error::Precondition("inputs must be w-homogeneous".into()));
    }
    let df = f.weighted_degree(w)?.finite().cloned().expect("nonzero");
    let dg = g.weighted_degree(w)?.finite().cloned().expect("nonzero");
    if !df.is_positive() || !dg.is_positive() {
        return Err(Error::Precondition(format!(
            "degrees must be positive, got {df} and {dg}"
        )));
    }
    if algebraically_independent(&[f.clone(), g.clone()])? {
        return Err(Error::Precondition("inputs are algebraically independent".into()));
    }
    // l_fg * deg g = l_gf * deg f
    let (l_fg, l_gf) = proportion(&df, &dg).ok_or_else(|| {
        Error::Inconsistency(format!("dependent homogeneous elements with non-proportional degrees {df}, {dg}"))
    })?;
    let lhs = g.pow(l_fg);
    let rhs = f.pow(l_gf);
    let (m, c) = lhs.leading_term().expect("nonzero");
    let c_rhs = rhs.coefficient(m);
    if c_rhs == Rational::from_integer(0.into()) {
        return Err(Error::Inconsistency(
            "no scalar relates the powers: leading monomials differ".into(),
        ));
    }
    let alpha = c / &c_rhs;
    if lhs != rhs.scale(&alpha) {
        return Err(Error::Inconsistency(format!(
            "g^{l_fg} is not a scalar multiple of f^{l_gf}"
        )));
    }
    Ok(HomogPairData { l_fg, l_gf, alpha })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldExtDegree {
    pub algebraic: bool,
    /// `[K^w(g^w) : K^w]`, from the minimal annihilating polynomial.
    pub n: Option<usize>,
    /// `deg h^w / gcd(deg h^w, deg g^w)` when there is one `h`, `Γ = Z`
    /// and both degrees are positive.
    pub formula_n: Option<u64>,
}

fn initial_forms(hs: &[Polynomial], w: &WeightVector) -> Result<Vec<Polynomial>> {
    hs.iter().map(|h| h.initial_form(w)).collect()
}

/// Whether `g^w` is algebraic over `k(h_1^w, ..., h_r^w)` and, if so, the
/// degree of the extension.
pub fn field_ext_degree(hs: &[Polynomial], g: &Polynomial, w: &WeightVector) -> Result<FieldExtDegree> {
    if g.is_zero() {
        return Err(Error::ZeroArgument("extension degree"));
    }
    let initials = initial_forms(hs, w)?;
    if !algebraically_independent(&initials)? {
        return Err(Error::Precondition(
            "initial forms of the generators are algebraically dependent".into(),
        ));
    }
    let gw = g.initial_form(w)?;
    let mut all = initials.clone();
    all.push(gw.clone());
    if algebraically_independent(&all)? {
        return Ok(FieldExtDegree {
            algebraic: false,
            n: None,
            formula_n: None,
        });
    }
    let ann = min_annihilating(&initials, &gw)?;
    let n = ann.deg_y.ok_or_else(|| Error::Inconsistency("dependent element without annihilator".into()))?;

    let mut formula_n = None;
    if let [h] = initials.as_slice() {
        let dh = h.weighted_degree(w)?.as_scalar();
        let dg = gw.weighted_degree(w)?.as_scalar();
        if let (Some(a), Some(b)) = (dh, dg) {
            if a > 0 && b > 0 {
                let v = (a / a.gcd(&b)) as u64;
                if v != n as u64 {
                    return Err(Error::Inconsistency(format!(
                        "extension degree {n} differs from deg h / gcd = {v}"
                    )));
                }
                formula_n = Some(v);
            }
        }
    }
    Ok(FieldExtDegree {
        algebraic: true,
        n: Some(n),
        formula_n,
    })
}

/// `(g_1^w, ..., g_r^w)`, which generate `k[g_1, ..., g_r]^w` when they are
/// algebraically independent.
pub fn initial_algebra_gens(gs: &[Polynomial], w: &WeightVector) -> Result<Vec<Polynomial>> {
    let initials = initial_forms(gs, w)?;
    if !algebraically_independent(&initials)? {
        return Err(Error::Precondition(
            "initial forms are algebraically dependent; the initial algebra may not be finitely generated".into(),
        ));
    }
    Ok(initials)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop42Report {
    pub independent: bool,
    pub initials_generate: bool,
    pub equivalent: bool,
}

/// For `f` with `k[f] = k[x]`, compares independence of the initial forms
/// with `k[f^w] = k[x]`.
pub fn prop42_check(fs: &[Polynomial], w: &WeightVector) -> Result<Prop42Report> {
    let n = w.len();
    if fs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: fs.len(),
        });
    }
    let initials = initial_forms(fs, w)?;
    let independent = algebraically_independent(&initials)?;
    let xs: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
    let initials_generate = in_subalgebra(&initials, &xs)?.into_iter().all(|b| b);
    Ok(Prop42Report {
        independent,
        initials_generate,
        equivalent: independent == initials_generate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::rat;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    fn w11() -> WeightVector {
        WeightVector::standard(2)
    }

    #[test]
    fn homog_pair_examples() {
        let d = homog_pair(&p("x1^2", 2), &p("x1^3", 2), &w11()).unwrap();
        assert_eq!((d.l_fg, d.l_gf, d.alpha), (2, 3, rat(1)));
        let d = homog_pair(&p("x2", 2), &p("5*x2", 2), &w11()).unwrap();
        assert_eq!((d.l_fg, d.l_gf, d.alpha), (1, 1, rat(5)));
        let d = homog_pair(&p("x1^2*x2^2", 2), &p("x1^3*x2^3", 2), &w11()).unwrap();
        assert_eq!((d.l_fg, d.l_gf, d.alpha), (2, 3, rat(1)));
    }

    #[test]
    fn homog_pair_scalar_and_errors() {
        // (x1^3)^2 = 1/8 (2 x1^2)^3
        let d = homog_pair(&p("2*x1^2", 2), &p("x1^3", 2), &w11()).unwrap();
        assert_eq!(d.alpha, Rational::new(1.into(), 8.into()));
        assert!(matches!(
            homog_pair(&p("x1", 2), &p("x2", 2), &w11()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            homog_pair(&p("x1 + x1^2", 2), &p("x1", 2), &w11()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            homog_pair(&p("1", 2), &p("x1", 2), &w11()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn homog_pair_lex_weights() {
        let w = WeightVector::new(vec![Gamma::new(vec![1, 2]), Gamma::new(vec![0, 1])]).unwrap();
        let d = homog_pair(&p("x1^2", 2), &p("x1^3", 2), &w).unwrap();
        assert_eq!((d.l_fg, d.l_gf), (2, 3));
    }

    #[test]
    fn field_ext_degree_examples() {
        let r = field_ext_degree(&[p("x1^2", 2)], &p("x1^3 + x2", 2), &w11()).unwrap();
        assert!(r.algebraic);
        assert_eq!(r.n, Some(2));
        assert_eq!(r.formula_n, Some(2));

        let r = field_ext_degree(&[p("x1", 2)], &p("x2", 2), &w11()).unwrap();
        assert!(!r.algebraic);

        let w21 = WeightVector::from_ints(&[2, 1]);
        let r = field_ext_degree(&[p("x1", 2)], &p("x1 + x2^2", 2), &w21).unwrap();
        assert!(!r.algebraic);

        assert!(matches!(
            field_ext_degree(&[p("x1", 2), p("x1^2", 2)], &p("x2", 2), &w11()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn initial_algebra_examples() {
        let id = vec![p("x1", 2), p("x2", 2)];
        assert_eq!(initial_algebra_gens(&id, &WeightVector::from_ints(&[3, 7])).unwrap(), id);
        let g = vec![p("x1", 2), p("x1^2 + x2", 2)];
        assert_eq!(initial_algebra_gens(&g, &WeightVector::from_ints(&[1, 2])).unwrap(), g);
        let g = vec![p("x1", 2), p("x2 + x1^2", 2)];
        assert!(matches!(initial_algebra_gens(&g, &w11()), Err(Error::Precondition(_))));
    }

    #[test]
    fn prop42_examples() {
        let id = vec![p("x1", 2), p("x2", 2)];
        let r = prop42_check(&id, &w11()).unwrap();
        assert_eq!((r.independent, r.initials_generate, r.equivalent), (true, true, true));

        let f = vec![p("x1", 2), p("x2 + x1^2", 2)];
        let r = prop42_check(&f, &w11()).unwrap();
        assert_eq!((r.independent, r.initials_generate, r.equivalent), (false, false, true));

        let d = "(x1*x3 + x2^2)";
        let nagata = vec![
            p(&format!("x1 - 2*{d}*x2 - {d}^2*x3"), 3),
            p(&format!("x2 + {d}*x3"), 3),
            p("x3", 3),
        ];
        let r = prop42_check(&nagata, &WeightVector::standard(3)).unwrap();
        assert_eq!((r.independent, r.initials_generate, r.equivalent), (false, false, true));
    }
}
