//! Randomized search for reductions at the graded fiber-cone level: the
//! numerical criterion, plain and structured form sampling, and direct
//! verification.

use crate::error::{Error, Result};
use crate::hilbert::GradedQuotient;
use crate::macaulay::binom;
use crate::monomial::Monomial;
use crate::restriction::{sample_linear_form, LinearForm};
use crate::toric::{structured_form, StructuredVariant, ToricPresentation};
use num::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Sampling strategy for the candidate elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    General,
    SegreProduct,
    VeronesePower,
    SegreVeronese,
    ChainPartialSums,
}

impl Variant {
    fn structured(self) -> Option<StructuredVariant> {
        match self {
            Variant::General => None,
            Variant::SegreProduct => Some(StructuredVariant::SegreProduct),
            Variant::VeronesePower => Some(StructuredVariant::VeronesePower),
            Variant::SegreVeronese => Some(StructuredVariant::SegreVeronese),
            Variant::ChainPartialSums => Some(StructuredVariant::ChainPartialSums),
        }
    }

    /// Variants built on powers need characteristic 0 in the source
    /// theory; small positive characteristic degenerates them.
    fn needs_large_characteristic(self) -> bool {
        matches!(
            self,
            Variant::VeronesePower | Variant::SegreVeronese | Variant::ChainPartialSums
        )
    }
}

/// The smallest prime characteristic accepted for power-type variants
/// unless explicitly overridden.
pub const CHARACTERISTIC_SAFETY_BOUND: u64 = 1 << 16;

/// A reduction search instance.
#[derive(Clone, Debug)]
pub struct ReductionProblem {
    pub algebra: GradedQuotient,
    /// power `i` whose generators are being counted
    pub power: u32,
    /// target number of elements `p`
    pub target: usize,
    pub variant: Variant,
    /// presentation backing the structured variants
    pub toric: Option<ToricPresentation>,
    /// run power-type variants below the characteristic safety bound
    /// (used by the known small-characteristic failure cases)
    pub allow_small_characteristic: bool,
}

#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub forms: Vec<LinearForm>,
    pub trials_used: usize,
    pub verified: bool,
}

/// The numerical hypothesis: `dim_K (algebra)_i < binom(i + p, i)`.
pub fn criterion_holds(algebra: &GradedQuotient, power: u32, target: usize) -> bool {
    let dim = BigUint::from(algebra.hilbert_dim(power) as u64);
    dim < binom(power as i64 + target as i64, power)
}

/// True iff the degree-`i` component of the quotient by the forms vanishes.
pub fn verify_reduction(
    algebra: &GradedQuotient,
    forms: &[LinearForm],
    power: u32,
) -> Result<bool> {
    let polys = forms
        .iter()
        .map(|f| f.to_polynomial(&algebra.ring))
        .collect::<Result<Vec<_>>>()?;
    Ok(algebra.quotient_by(&polys)?.hilbert_dim(power) == 0)
}

fn sample_candidate(
    problem: &ReductionProblem,
    rng: &mut ChaCha8Rng,
) -> Result<LinearForm> {
    match problem.variant.structured() {
        None => Ok(sample_linear_form(
            problem.algebra.ring.num_vars,
            &problem.algebra.ring.field,
            rng,
        )),
        Some(sv) => {
            let pres = problem.toric.as_ref().ok_or(Error::MissingToric)?;
            let field = pres.field();
            let underlying: Vec<LinearForm> = match sv {
                StructuredVariant::VeronesePower => {
                    vec![sample_linear_form(pres.blocks[0], field, rng)]
                }
                _ => pres
                    .blocks
                    .iter()
                    .map(|&size| sample_linear_form(size, field, rng))
                    .collect(),
            };
            structured_form(pres, &underlying, sv)
        }
    }
}

/// Samples `p`-tuples of candidate forms until one annihilates the
/// degree-`i` component. Trial `t` derives its generator from the master
/// seed and `t`, so failed searches replay exactly. Refuses to run when
/// the numerical criterion fails.
pub fn search_reduction(
    problem: &ReductionProblem,
    seed: u64,
    max_trials: usize,
) -> Result<ReductionResult> {
    let dim = problem.algebra.hilbert_dim(problem.power) as u64;
    let bound = binom(problem.power as i64 + problem.target as i64, problem.power);
    if BigUint::from(dim) >= bound {
        return Err(Error::CriterionViolated {
            dim,
            bound: bound.try_into().unwrap_or(u64::MAX),
        });
    }
    if problem.variant.needs_large_characteristic() && !problem.allow_small_characteristic {
        let ch = problem.algebra.ring.field.characteristic();
        if ch != 0 && ch < CHARACTERISTIC_SAFETY_BOUND {
            return Err(Error::SmallCharacteristic {
                min: CHARACTERISTIC_SAFETY_BOUND,
                got: ch,
            });
        }
    }
    if problem.variant.structured().is_some() {
        let pres = problem.toric.as_ref().ok_or(Error::MissingToric)?;
        if pres.presentation_vars() != problem.algebra.ring.num_vars {
            return Err(Error::VarMismatch(
                pres.presentation_vars(),
                problem.algebra.ring.num_vars,
            ));
        }
    }

    for trial in 0..max_trials {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed.wrapping_add((trial as u64).wrapping_mul(0x9E3779B97F4A7C15)));
        let forms: Vec<LinearForm> = (0..problem.target)
            .map(|_| sample_candidate(problem, &mut rng))
            .collect::<Result<_>>()?;
        if verify_reduction(&problem.algebra, &forms, problem.power)? {
            return Ok(ReductionResult {
                forms,
                trials_used: trial + 1,
                verified: true,
            });
        }
    }
    Ok(ReductionResult {
        forms: Vec::new(),
        trials_used: max_trials,
        verified: false,
    })
}

/// Number of minimal monomial generators of the `i`-th power of the
/// monomial ideal generated by `generators`.
pub fn power_generator_count(generators: &[Monomial], power: u32) -> usize {
    assert!(power >= 1);
    // all i-fold products (multisets over the generators)
    let mut products: Vec<Monomial> = vec![Monomial::one(generators[0].num_vars())];
    for _ in 0..power {
        let mut next: Vec<Monomial> = Vec::new();
        for p in &products {
            for g in generators {
                next.push(p.mul(g));
            }
        }
        next.sort();
        next.dedup();
        products = next;
    }
    products
        .iter()
        .filter(|m| {
            !products
                .iter()
                .any(|other| *other != **m && other.divides(m))
        })
        .count()
}
