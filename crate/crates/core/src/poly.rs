//! Multivariate polynomials with exact coefficients.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{Monomial, MonomialOrder};
use std::collections::BTreeMap;
use std::fmt;

/// Ambient polynomial ring `K[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub num_vars: usize,
    pub field: FieldSpec,
}

impl Ring {
    pub fn new(num_vars: usize, field: FieldSpec) -> Ring {
        Ring { num_vars, field }
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch(self.num_vars, other.num_vars));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Default variable names: x,y,z,w for small rings, x1..xn otherwise.
    pub fn var_names(&self) -> Vec<String> {
        if self.num_vars <= 4 {
            ["x", "y", "z", "w"][..self.num_vars]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=self.num_vars).map(|i| format!("x{i}")).collect()
        }
    }
}

/// Terms keyed by monomial; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    pub ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.add_term(Monomial::one(ring.num_vars), c);
        p
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.add_term(Monomial::var(ring.num_vars, i), ring.field.one());
        p
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.add_term(m, ring.field.one());
        p
    }

    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if self.ring.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.ring.field.add(&old, &c);
                if !self.ring.field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.field.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.ring.field.mul(a, c));
        }
        out
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m0, c0) in &self.terms {
            out.add_term(m0.mul(m), self.ring.field.mul(c0, c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            for (m0, c0) in &self.terms {
                out.add_term(m0.mul(m), self.ring.field.mul(c0, c));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Leading term under `order`, or `None` for the zero polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Splits into homogeneous components, lowest degree first.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .add_term(m.clone(), c.clone());
        }
        by_degree.into_values().collect()
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.ring.field.inv(lc);
                self.scale(&inv)
            }
        }
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.num_vars);
        let target = &images
            .first()
            .expect("substitution into an empty ring")
            .ring;
        if target.field != self.ring.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut val = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    val = val.mul(&images[i].pow(e));
                }
            }
            out = out.add(&val);
        }
        Ok(out)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // print in grevlex-descending order for readability
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in ts.iter().enumerate() {
            // print balanced residues so -1 mod p reads as -1
            let cs = match (&self.ring.field, c) {
                (FieldSpec::Prime(p), Scalar::Fp(x)) if *x > p / 2 => format!("-{}", p - x),
                _ => c.to_string(),
            };
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        names[j].clone()
                    } else {
                        format!("{}^{}", names[j], e)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&self.ring.var_names()))
    }
}
