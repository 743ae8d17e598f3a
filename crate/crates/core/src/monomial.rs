//! Monomials and monomial orders.

use std::cmp::Ordering;

/// Exponent vector; length equals the number of ambient variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Monomial {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Monomial {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

/// Total orders on monomials of a fixed ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block elimination order: the first `split` variables are eliminated.
    /// Each block is compared by grevlex, first block dominating.
    Block(usize),
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing position wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), b.num_vars());
        match self {
            MonomialOrder::Lex => lex_cmp(&a.0, &b.0),
            MonomialOrder::GrevLex => grevlex_cmp(&a.0, &b.0),
            MonomialOrder::Block(split) => {
                match grevlex_cmp(&a.0[..*split], &b.0[..*split]) {
                    Ordering::Equal => grevlex_cmp(&a.0[*split..], &b.0[*split..]),
                    ord => ord,
                }
            }
        }
    }
}

/// All monomials of total degree `d` in `num_vars` variables, lex-descending.
pub fn monomials_of_degree(num_vars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fn rec(current: &mut Vec<u32>, pos: usize, rem: u32, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = rem;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in (0..=rem).rev() {
            current[pos] = e;
            rec(current, pos + 1, rem - e, out);
        }
        current[pos] = 0;
    }
    if num_vars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(&mut current, 0, d, &mut out);
    out
}
