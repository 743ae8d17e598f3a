//! Lex-segment ideals with a prescribed Hilbert function, and the
//! restriction identity linking them to the Macaulay lower operator.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::Ideal;
use crate::macaulay::{binom, is_o_sequence};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use num::BigUint;

/// A Hilbert function on degrees `0..=D` for a ring with `num_vars`
/// variables. Behavior beyond the horizon `D` is out of contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
    pub num_vars: usize,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>, num_vars: usize) -> Result<HilbertFunction> {
        for (d, &v) in values.iter().enumerate() {
            let max: BigUint = binom((num_vars - 1 + d) as i64, d as u32);
            if BigUint::from(v) > max {
                return Err(Error::HilbertValueTooLarge {
                    degree: d,
                    got: v,
                    max: max.try_into().unwrap_or(u64::MAX),
                });
            }
        }
        match values.iter().position(|_| true) {
            Some(_) if values[0] == 1 => {}
            _ => return Err(Error::NotOSequence(0)),
        }
        if !is_o_sequence(&values) {
            let bad = (1..values.len() - 1)
                .find(|&d| !is_o_sequence(&values[..=d + 1]))
                .unwrap_or(0);
            return Err(Error::NotOSequence(bad + 1));
        }
        Ok(HilbertFunction { values, num_vars })
    }

    pub fn horizon(&self) -> u32 {
        (self.values.len() - 1) as u32
    }
}

/// The unique lex-segment monomial ideal whose quotient realizes `hf` on
/// `0..=D`. Generated degree by degree by the lex-largest monomials
/// excluded from the quotient basis.
pub fn lex_segment_ideal(hf: &HilbertFunction, field: &FieldSpec) -> Result<Ideal> {
    let n = hf.num_vars;
    let ring = Ring::new(n, field.clone());
    let mut gens: Vec<Monomial> = Vec::new();
    for d in 1..=hf.horizon() {
        let mut monos = monomials_of_degree(n, d);
        // lex-descending with X_1 > ... > X_n
        monos.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
        let total = monos.len() as u64;
        let target = hf.values[d as usize];
        if target > total {
            return Err(Error::NotOSequence(d as usize));
        }
        let cut = (total - target) as usize;
        for (i, m) in monos.iter().enumerate() {
            let in_ideal = gens.iter().any(|g| g.divides(m));
            if i < cut {
                if !in_ideal {
                    gens.push(m.clone());
                }
            } else if in_ideal {
                // the forced multiples spill past the segment: no lex
                // ideal with this Hilbert function exists
                return Err(Error::NotOSequence(d as usize));
            }
        }
    }
    Ok(Ideal::new(
        &ring,
        gens.into_iter()
            .map(|m| Polynomial::monomial(&ring, m))
            .collect(),
    ))
}

/// `dim_K (A/(I + (X_n)))_d` for a monomial ideal `I`: the count of
/// degree-`d` standard monomials free of the last variable.
pub fn lex_restricted_dim(ideal: &Ideal, d: u32) -> usize {
    let n = ideal.ring.num_vars;
    let leads: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.leading_term(MonomialOrder::GrevLex).unwrap().0.clone())
        .collect();
    monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| m.0[n - 1] == 0 && !leads.iter().any(|l| l.divides(m)))
        .count()
}
