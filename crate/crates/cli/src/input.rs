//! Turning flag values into library inputs.

use wgrade::parse::{parse_poly, parse_upoly, parse_zform};
use wgrade::{Gamma, Polynomial, UPoly, WeightVector};

use crate::error::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn ints(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| bad(format!("`{}` is not an integer weight", s.trim())))
        })
        .collect()
}

/// `--w 1,2,3` for `Γ = Z`, or `--w-lex "1,0;0,1"` with one tuple per
/// variable for `Γ = Z^k`.
pub fn weights(w: Option<&str>, w_lex: Option<&str>) -> Result<WeightVector, CliError> {
    match (w, w_lex) {
        (Some(w), None) => Ok(WeightVector::from_ints(&ints(w)?)),
        (None, Some(lex)) => {
            let gammas = lex
                .split(';')
                .map(|t| ints(t).map(Gamma::new))
                .collect::<Result<Vec<_>, _>>()?;
            WeightVector::new(gammas).map_err(CliError::from)
        }
        (Some(_), Some(_)) => Err(bad("give either --w or --w-lex, not both")),
        (None, None) => Err(bad("a weight vector is required (--w or --w-lex)")),
    }
}

/// The largest `k` with `x<k>` appearing as a name in any of the texts.
pub fn max_x_index(texts: &[&str]) -> usize {
    let mut best = 0;
    for t in texts {
        let b = t.as_bytes();
        let mut i = 0;
        while i < b.len() {
            let boundary = i == 0 || !(b[i - 1].is_ascii_alphanumeric() || b[i - 1] == b'_');
            if b[i] == b'x' && boundary {
                let start = i + 1;
                let mut j = start;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                let ends = j == b.len() || !(b[j].is_ascii_alphanumeric() || b[j] == b'_');
                if j > start && ends {
                    best = best.max(t[start..j].parse().unwrap_or(0));
                }
                i = j.max(i + 1);
            } else {
                i += 1;
            }
        }
    }
    best
}

/// The ambient variable count: `--n` when given, else the length of the
/// weight vector.
pub fn nvars(n: Option<usize>, w: &WeightVector) -> Result<usize, CliError> {
    match n {
        Some(n) if n != w.len() => Err(bad(format!(
            "--n {n} disagrees with a weight vector of length {}",
            w.len()
        ))),
        Some(n) => Ok(n),
        None if w.is_empty() => Err(bad("empty weight vector")),
        None => Ok(w.len()),
    }
}

pub fn poly(text: &str, n: usize) -> Result<Polynomial, CliError> {
    Ok(parse_poly(text, n)?)
}

pub fn polys(texts: &[String], n: usize) -> Result<Vec<Polynomial>, CliError> {
    texts.iter().map(|t| poly(t, n)).collect()
}

pub fn upoly(text: &str, n: usize) -> Result<UPoly, CliError> {
    Ok(parse_upoly(text, n)?)
}

pub fn zform(text: &str, r: usize) -> Result<UPoly, CliError> {
    Ok(parse_zform(text, r)?)
}
