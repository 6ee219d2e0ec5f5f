//! Text input for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | NAME | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, which is how rational
//! literals such as `3/4` are written. Variable names are resolved against
//! a caller-supplied list (`x1..xn`, plus `y` or `z1..zr` as needed).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{Polynomial, Rational};
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Name(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError::Syntax {
                        line: l,
                        column: col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        column += i - start;
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, t: &Token, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let slash = self.next();
                    let d = self.unary()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return Err(self.error(&slash, "division by zero")),
                        None => {
                            return Err(self.error(&slash, "division by a non-constant polynomial"))
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        match &t.tok {
            Tok::Int(e) => {
                let e = e
                    .to_u32()
                    .ok_or_else(|| self.error(&t, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(self.error(&t, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.next();
        match t.tok {
            Tok::Int(ref v) => Ok(Polynomial::constant(
                self.nvars(),
                Rational::from_integer(v.clone()),
            )),
            Tok::Name(ref name) => match self.names.iter().position(|n| n == name) {
                Some(i) => Ok(Polynomial::var(i, self.nvars())),
                None => Err(ParseError::UnknownVariable {
                    name: name.clone(),
                    line: t.line,
                    column: t.column,
                }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(self.error(&close, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(self.error(&t, "unexpected end of input")),
            _ => Err(self.error(&t, "expected a number, variable or `(`")),
        }
    }
}

/// `x1, ..., xn`.
pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `z1, ..., zr`.
pub fn z_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("z{i}")).collect()
}

/// Parses over the given variable names, in order.
pub fn parse_with(text: &str, names: &[String]) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
        names,
    };
    let p = parser.expr()?;
    let t = parser.peek().clone();
    if t.tok != Tok::End {
        return Err(parser.error(&t, "unexpected trailing input"));
    }
    Ok(p)
}

/// Parses a polynomial in `x1..xn`.
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial, ParseError> {
    parse_with(text, &x_names(n))
}

/// Parses an element of `k[x1..xn][y]`.
pub fn parse_upoly(text: &str, n: usize) -> Result<UPoly, ParseError> {
    let mut names = x_names(n);
    names.push("y".into());
    Ok(UPoly::from_last_variable(&parse_with(text, &names)?))
}

/// Parses an element of `k[z1..zr][y]`, where `z_j` stands for the
/// `j`-th generator of a subalgebra.
pub fn parse_zform(text: &str, r: usize) -> Result<UPoly, ParseError> {
    let mut names = z_names(r);
    names.push("y".into());
    Ok(UPoly::from_last_variable(&parse_with(text, &names)?))
}
