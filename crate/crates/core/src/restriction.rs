//! The colon/sum ideal ladder, the (Gr,d) verifier and the restriction
//! bound checks.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hilbert::{ideal_component_dim, GradedQuotient};
use crate::ideal::Ideal;
use crate::lexseg::{lex_segment_ideal, HilbertFunction};
use crate::macaulay::{macaulay_lower, shifted_bound};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use num::BigUint;
use rand::Rng;
use serde::Serialize;
use std::collections::HashMap;

/// A linear form given by its coefficient vector. The zero form is
/// representable; it is exactly what degenerate structured samples produce.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm {
    pub coeffs: Vec<Scalar>,
    pub field: FieldSpec,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>, field: FieldSpec) -> LinearForm {
        LinearForm { coeffs, field }
    }

    pub fn zero(n: usize, field: &FieldSpec) -> LinearForm {
        LinearForm {
            coeffs: vec![field.zero(); n],
            field: field.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn to_polynomial(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.num_vars != self.coeffs.len() {
            return Err(Error::VarMismatch(ring.num_vars, self.coeffs.len()));
        }
        if ring.field != self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Polynomial::from_terms(
            ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(ring.num_vars, i), c.clone()))
                .collect(),
        ))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Coefficients drawn independently and uniformly; deterministic given the
/// generator state. Over the rationals the coefficients are integers in
/// `-999..=999`.
pub fn sample_linear_form(n: usize, field: &FieldSpec, rng: &mut impl Rng) -> LinearForm {
    let coeffs = (0..n)
        .map(|_| match field {
            FieldSpec::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            FieldSpec::Rationals => field.from_i64(rng.gen_range(-999..=999)),
        })
        .collect();
    LinearForm::new(coeffs, field.clone())
}

/// One step of the ladder: colon or sum by the next linear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Colon,
    Sum,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Colon => 'c',
            Letter::Sum => 's',
        }
    }
}

/// A word over {c, s} driving the ladder construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OpWord(pub Vec<Letter>);

impl OpWord {
    pub fn parse(s: &str) -> Result<OpWord> {
        s.chars()
            .map(|ch| match ch {
                'c' => Ok(Letter::Colon),
                's' => Ok(Letter::Sum),
                other => Err(Error::Parse(format!("bad ladder letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(OpWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_colon(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Colon).count()
    }

    pub fn count_sum(&self) -> usize {
        self.len() - self.count_colon()
    }

    pub fn extended(&self, l: Letter) -> OpWord {
        let mut w = self.0.clone();
        w.push(l);
        OpWord(w)
    }
}

impl std::fmt::Display for OpWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// All words of length `0..=r`, shortest first, lexicographic with c < s.
pub fn enumerate_words(r: usize) -> Vec<OpWord> {
    let mut out = vec![OpWord::default()];
    let mut frontier = vec![OpWord::default()];
    for _ in 0..r {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for w in &frontier {
            next.push(w.extended(Letter::Colon));
            next.push(w.extended(Letter::Sum));
        }
        next.sort();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The ladder ideal `I_{l,o}` as a pre-image in the ambient polynomial ring:
/// the empty word yields the defining ideal, `c` applies a colon and `s`
/// a sum by the next form. A colon by a zero form yields the unit ideal.
pub fn ladder_ideal(
    quotient: &GradedQuotient,
    forms: &[LinearForm],
    word: &OpWord,
) -> Result<Ideal> {
    if word.len() > forms.len() {
        return Err(Error::WordTooLong {
            word: word.len(),
            forms: forms.len(),
        });
    }
    let mut ideal = quotient.ideal.clone();
    for (i, &letter) in word.0.iter().enumerate() {
        ideal = ladder_step(&ideal, &forms[i], letter, &quotient.ring)?;
    }
    Ok(ideal)
}

fn ladder_step(ideal: &Ideal, form: &LinearForm, letter: Letter, ring: &Ring) -> Result<Ideal> {
    let l = form.to_polynomial(ring)?;
    match letter {
        Letter::Sum => ideal.plus_polynomial(&l),
        Letter::Colon => {
            if l.is_zero() {
                Ok(Ideal::unit(ring))
            } else {
                ideal.colon_element(&l)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GrdViolation {
    pub condition: u8,
    pub word: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderDim {
    pub word: String,
    pub degree: i64,
    pub dim: usize,
}

/// Outcome of a (Gr,d) verification. `passed` reflects conditions 1-3
/// only; condition-4 records are informational.
#[derive(Clone, Debug, Serialize)]
pub struct GrdReport {
    pub passed: bool,
    pub violations: Vec<GrdViolation>,
    pub ladder_dims: Vec<LadderDim>,
}

const WORD_BUDGET: usize = 12;

/// Checks conditions (1)-(3) of property (Gr,d) over every word of length
/// `0..=r`, and the stronger condition (4) when requested. Dimensions at
/// negative degrees are zero, making those checks vacuous. Violations are
/// data, not errors; every violated condition is listed with its witness
/// word.
pub fn verify_grd(
    quotient: &GradedQuotient,
    forms: &[LinearForm],
    d: u32,
    check_stronger: bool,
) -> Result<GrdReport> {
    let r = forms.len();
    if r > WORD_BUDGET {
        return Err(Error::WordBudget(r));
    }
    let ring = &quotient.ring;
    let words = enumerate_words(r);

    let mut ideals: HashMap<OpWord, Ideal> = HashMap::new();
    ideals.insert(OpWord::default(), quotient.ideal.clone());
    for w in &words {
        if w.is_empty() {
            continue;
        }
        let parent = OpWord(w.0[..w.len() - 1].to_vec());
        let parent_ideal = ideals[&parent].clone();
        let step = ladder_step(&parent_ideal, &forms[w.len() - 1], w.0[w.len() - 1], ring)?;
        ideals.insert(w.clone(), step);
    }

    let mut violations = Vec::new();
    let mut ladder_dims = Vec::new();

    for w in &words {
        let i = w.len();
        let ideal = &ideals[w];

        // (1): below the full length, the next form must stay outside
        if i < r && !ideal.contains_maximal_ideal() {
            let l = forms[i].to_polynomial(ring)?;
            if ideal.contains(&l) {
                violations.push(GrdViolation {
                    condition: 1,
                    word: w.to_string(),
                    detail: format!(
                        "form l_{} lies in the ladder ideal while m is not contained in it",
                        i + 1
                    ),
                });
            }
        }

        // (2): at full length with few colons the ladder must swallow m
        if i == r && (w.count_colon() as u32) < d && !ideal.contains_maximal_ideal() {
            violations.push(GrdViolation {
                condition: 2,
                word: w.to_string(),
                detail: format!(
                    "|o|_c = {} < d = {} but the ladder ideal does not contain m",
                    w.count_colon(),
                    d
                ),
            });
        }

        // (3)/(4): dimension comparison two steps out
        if i + 2 <= r {
            let t = d as i64 - w.count_colon() as i64 - 1;
            if t < 0 {
                continue;
            }
            let w_cs = w.extended(Letter::Colon).extended(Letter::Sum);
            let w_sc = w.extended(Letter::Sum).extended(Letter::Colon);
            let dim_cs = ideal_component_dim(&ideals[&w_cs], t);
            let dim_sc = ideal_component_dim(&ideals[&w_sc], t);
            ladder_dims.push(LadderDim {
                word: w_cs.to_string(),
                degree: t,
                dim: dim_cs,
            });
            ladder_dims.push(LadderDim {
                word: w_sc.to_string(),
                degree: t,
                dim: dim_sc,
            });
            if dim_cs > dim_sc {
                violations.push(GrdViolation {
                    condition: 3,
                    word: w.to_string(),
                    detail: format!("dim (I_ocs)_{t} = {dim_cs} > dim (I_osc)_{t} = {dim_sc}"),
                });
            }
            if check_stronger {
                // (I_o : l_{i+2}) + (l_{i+1}), forms swapped relative to the word
                let colon_alt = ladder_step(ideal, &forms[i + 1], Letter::Colon, ring)?;
                let alt = ladder_step(&colon_alt, &forms[i], Letter::Sum, ring)?;
                let dim_alt = ideal_component_dim(&alt, t);
                if dim_cs != dim_alt {
                    violations.push(GrdViolation {
                        condition: 4,
                        word: w.to_string(),
                        detail: format!(
                            "dim (I_ocs)_{t} = {dim_cs} != dim ((I_o:l_{}) + l_{})_{t} = {dim_alt}",
                            i + 2,
                            i + 1
                        ),
                    });
                }
            }
        }
    }

    let passed = violations.iter().all(|v| v.condition > 3);
    Ok(GrdReport {
        passed,
        violations,
        ladder_dims,
    })
}

/// lhs/rhs record of a single restriction-type bound check.
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct BoundCheck {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

fn big_to_u64(x: BigUint) -> u64 {
    x.try_into().unwrap_or(u64::MAX)
}

/// Green's bound: `dim (R/lR)_d <= (dim R_d)_<d>`.
pub fn check_green_bound(quotient: &GradedQuotient, l: &LinearForm, d: u32) -> Result<BoundCheck> {
    let c = quotient.hilbert_dim(d) as u64;
    let rhs = big_to_u64(macaulay_lower(&BigUint::from(c), d));
    let lp = l.to_polynomial(&quotient.ring)?;
    let lhs = quotient.quotient_by(&[lp])?.hilbert_dim(d) as u64;
    Ok(BoundCheck {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Iterated bound: each Macaulay coefficient shifted by the number of forms.
pub fn check_iterated_bound(
    quotient: &GradedQuotient,
    forms: &[LinearForm],
    d: u32,
) -> Result<BoundCheck> {
    let c = quotient.hilbert_dim(d) as u64;
    let p = forms.len() as u64;
    let rhs = big_to_u64(shifted_bound(&BigUint::from(c), d, p));
    let polys: Vec<Polynomial> = forms
        .iter()
        .map(|f| f.to_polynomial(&quotient.ring))
        .collect::<Result<_>>()?;
    let lhs = quotient.quotient_by(&polys)?.hilbert_dim(d) as u64;
    Ok(BoundCheck {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Degree-c form bound: `dim (A/(I+(f)))_d <= dim (A/(I_lex+(X_n^c)))_d`.
/// The zero form is treated as having degree 1.
pub fn check_gasharov_bound(
    quotient: &GradedQuotient,
    f: &Polynomial,
    d: u32,
) -> Result<BoundCheck> {
    quotient.ring.check_same(&f.ring)?;
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let c = f.homogeneous_degree().unwrap_or(1);
    let lhs = quotient.quotient_by(&[f.clone()])?.hilbert_dim(d) as u64;

    let hf = quotient.hilbert_function(d);
    let rhs = if hf[0] == 0 {
        0
    } else {
        let hf = HilbertFunction::new(hf, quotient.ring.num_vars)?;
        let lex = lex_segment_ideal(&hf, &quotient.ring.field)?;
        let n = quotient.ring.num_vars;
        let xn_power = Polynomial::monomial(
            &lex.ring,
            Monomial(
                (0..n)
                    .map(|i| if i + 1 == n { c } else { 0 })
                    .collect(),
            ),
        );
        let restricted = lex.plus_polynomial(&xn_power)?;
        crate::hilbert::standard_monomial_count(&restricted, d) as u64
    };
    Ok(BoundCheck {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn rec(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == current.len() {
            out.push(current.clone());
            return;
        }
        for i in k..current.len() {
            current.swap(k, i);
            rec(k + 1, current, out);
            current.swap(k, i);
        }
    }
    rec(0, &mut current, &mut out);
    out
}

const PERMUTATION_BUDGET: usize = 50;

/// Per-word ladder dimension profile on the degrees relevant at level `d`.
fn ladder_profile(
    quotient: &GradedQuotient,
    forms: &[LinearForm],
    d: u32,
) -> Result<Vec<(String, Vec<usize>)>> {
    let mut out = Vec::new();
    for w in enumerate_words(forms.len()) {
        let top = d as i64 - w.count_colon() as i64 - 1;
        if top < 0 {
            continue;
        }
        let ideal = ladder_ideal(quotient, forms, &w)?;
        let dims: Vec<usize> = (0..=top).map(|j| ideal_component_dim(&ideal, j)).collect();
        out.push((w.to_string(), dims));
    }
    Ok(out)
}

/// True iff every ladder dimension at the relevant degrees is invariant
/// under permutations of the forms: all permutations when there are at
/// most 6 forms, otherwise a fixed-seed sample of 50.
pub fn check_order_independence(
    quotient: &GradedQuotient,
    forms: &[LinearForm],
    d: u32,
) -> Result<bool> {
    let r = forms.len();
    if r > WORD_BUDGET {
        return Err(Error::WordBudget(r));
    }
    let reference = ladder_profile(quotient, forms, d)?;
    let perms = if r <= 6 {
        permutations(r)
    } else {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FFEE);
        (0..PERMUTATION_BUDGET)
            .map(|_| {
                let mut p: Vec<usize> = (0..r).collect();
                p.shuffle(&mut rng);
                p
            })
            .collect()
    };
    for perm in perms {
        let shuffled: Vec<LinearForm> = perm.iter().map(|&i| forms[i].clone()).collect();
        if ladder_profile(quotient, &shuffled, d)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}
