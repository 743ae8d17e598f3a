//! A small parser for polynomial expressions like `x^2 - 3*y*z + 2`.
//!
//! Variables are the ring's default names (`x,y,z,w` for up to four
//! variables) and `x1..xn` is always accepted. Coefficients are integers.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

#[derive(Debug, PartialEq)]
enum Token {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        n.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let v: i64 = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {n:?}")))?;
                out.push(Token::Num(v));
            }
            c if c.is_ascii_alphabetic() => {
                let mut id = String::new();
                id.push(c);
                chars.next();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() {
                        id.push(c2);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(id));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

fn resolve_var(name: &str, ring: &Ring) -> Result<usize> {
    let names = ring.var_names();
    if let Some(i) = names.iter().position(|n| n == name) {
        return Ok(i);
    }
    // accept x1..xn and z1..zn style indexed names regardless of ring size
    for prefix in ["x", "z", "t"] {
        if let Some(num) = name.strip_prefix(prefix) {
            if let Ok(i) = num.parse::<usize>() {
                if i >= 1 && i <= ring.num_vars {
                    return Ok(i - 1);
                }
            }
        }
    }
    Err(Error::Parse(format!("unknown variable {name:?}")))
}

/// Parses a polynomial over the given ring.
pub fn parse_polynomial(input: &str, ring: &Ring) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut poly = Polynomial::zero(ring);
    let mut pos = 0;

    while pos < tokens.len() {
        // sign
        let mut sign = 1i64;
        loop {
            match tokens.get(pos) {
                Some(Token::Plus) => pos += 1,
                Some(Token::Minus) => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        // one term: factors joined by '*' or juxtaposed identifiers
        let mut coeff = sign;
        let mut exps = vec![0u32; ring.num_vars];
        let mut saw_factor = false;
        loop {
            match tokens.get(pos) {
                Some(Token::Num(n)) => {
                    coeff = coeff
                        .checked_mul(*n)
                        .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
                    pos += 1;
                    saw_factor = true;
                }
                Some(Token::Ident(name)) => {
                    let v = resolve_var(name, ring)?;
                    let mut e = 1u32;
                    if tokens.get(pos + 1) == Some(&Token::Caret) {
                        match tokens.get(pos + 2) {
                            Some(Token::Num(n)) if *n >= 0 => {
                                e = *n as u32;
                                pos += 2;
                            }
                            _ => return Err(Error::Parse("expected exponent after ^".into())),
                        }
                    }
                    exps[v] += e;
                    pos += 1;
                    saw_factor = true;
                }
                Some(Token::Star) => {
                    pos += 1;
                    continue;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(Error::Parse("expected a term".into()));
        }
        poly.add_term(Monomial(exps), ring.field.from_i64(coeff));
    }
    Ok(poly)
}

/// Parses a comma- or semicolon-separated list of polynomials.
pub fn parse_polynomial_list(input: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    input
        .split([',', ';'])
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| parse_polynomial(s, ring))
        .collect()
}
