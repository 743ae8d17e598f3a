//! Toric presentations of monomial subalgebras: Segre, Veronese and their
//! products, the chain ring, fiber cones of equigenerated monomial ideals,
//! and the structured linear forms they carry.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hilbert::GradedQuotient;
use crate::ideal::{kernel_of_monomial_map, Ideal};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use crate::restriction::LinearForm;

/// Which structured product a presentation's linear forms are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuredVariant {
    /// product `l_1 ... l_s`, one form per factor on disjoint blocks
    SegreProduct,
    /// power `l^b` of a single form
    VeronesePower,
    /// product of powers `l_1^{b_1} ... l_s^{b_s}` on disjoint blocks
    SegreVeronese,
    /// partial sums `l_1 (l_1 + l_2) ... (l_1 + ... + l_s)` on nested
    /// variable prefixes
    ChainPartialSums,
}

/// Exponent data of a monomial map together with its kernel.
#[derive(Clone, Debug)]
pub struct ToricPresentation {
    /// number of underlying source variables
    pub source_vars: usize,
    /// variable count seen by the form of each factor; disjoint consecutive
    /// blocks except for the chain ring, where factor i reads the prefix
    /// `1..=blocks[i]`
    pub blocks: Vec<usize>,
    /// exponent applied to each factor's form
    pub exponents: Vec<u32>,
    /// true when the factors share the source variables (chain ring)
    pub nested_blocks: bool,
    /// monomial generators of the subalgebra, lex-descending, deduplicated
    pub images: Vec<Monomial>,
    /// kernel of the monomial map, in the presentation ring
    pub presentation_ideal: Ideal,
}

impl ToricPresentation {
    fn build(
        source_vars: usize,
        blocks: Vec<usize>,
        exponents: Vec<u32>,
        nested_blocks: bool,
        mut images: Vec<Monomial>,
        field: &FieldSpec,
    ) -> Result<ToricPresentation> {
        // fixed generator order: lex-descending on exponent tuples
        images.sort_by(|a, b| MonomialOrder::Lex.cmp(b, a));
        images.dedup();
        let presentation_ideal = kernel_of_monomial_map(source_vars, &images, field)?;
        Ok(ToricPresentation {
            source_vars,
            blocks,
            exponents,
            nested_blocks,
            images,
            presentation_ideal,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.presentation_ideal.ring.field
    }

    pub fn presentation_vars(&self) -> usize {
        self.images.len()
    }

    pub fn presentation_ring(&self) -> &Ring {
        &self.presentation_ideal.ring
    }

    /// The presentation quotient as a graded algebra.
    pub fn quotient(&self) -> GradedQuotient {
        GradedQuotient::new(self.presentation_ring(), self.presentation_ideal.clone())
            .expect("kernel ideals are homogeneous")
    }

    /// Default variant suggested by the presentation shape.
    pub fn natural_variant(&self) -> StructuredVariant {
        if self.nested_blocks {
            StructuredVariant::ChainPartialSums
        } else if self.blocks.len() == 1 && self.exponents[0] > 1 {
            StructuredVariant::VeronesePower
        } else if self.exponents.iter().all(|&e| e == 1) {
            StructuredVariant::SegreProduct
        } else {
            StructuredVariant::SegreVeronese
        }
    }
}

/// Segre ring: generators `X_{1,i_1} ... X_{s,i_s}` over disjoint blocks.
pub fn segre(block_sizes: &[usize], field: &FieldSpec) -> Result<ToricPresentation> {
    assert!(!block_sizes.is_empty());
    let n: usize = block_sizes.iter().sum();
    let mut images = vec![Monomial::one(n)];
    let mut offset = 0;
    for &size in block_sizes {
        let mut next = Vec::with_capacity(images.len() * size);
        for img in &images {
            for j in 0..size {
                next.push(img.mul(&Monomial::var(n, offset + j)));
            }
        }
        images = next;
        offset += size;
    }
    ToricPresentation::build(
        n,
        block_sizes.to_vec(),
        vec![1; block_sizes.len()],
        false,
        images,
        field,
    )
}

/// Veronese ring: all monomials of degree `b` in `s` variables.
pub fn veronese(s: usize, b: u32, field: &FieldSpec) -> Result<ToricPresentation> {
    assert!(s >= 1 && b >= 1);
    let images = monomials_of_degree(s, b);
    ToricPresentation::build(s, vec![s], vec![b], false, images, field)
}

/// Segre product of Veronese rings: block `i` contributes monomials of
/// degree `b_i` in its own variables.
pub fn segre_veronese(
    block_sizes: &[usize],
    degrees: &[u32],
    field: &FieldSpec,
) -> Result<ToricPresentation> {
    assert_eq!(block_sizes.len(), degrees.len());
    assert!(!block_sizes.is_empty());
    let n: usize = block_sizes.iter().sum();
    let mut images = vec![Monomial::one(n)];
    let mut offset = 0;
    for (&size, &deg) in block_sizes.iter().zip(degrees) {
        let mut next = Vec::new();
        for img in &images {
            for local in monomials_of_degree(size, deg) {
                let mut e = img.0.clone();
                for (j, &le) in local.0.iter().enumerate() {
                    e[offset + j] += le;
                }
                next.push(Monomial(e));
            }
        }
        images = next;
        offset += size;
    }
    ToricPresentation::build(
        n,
        block_sizes.to_vec(),
        vec![1; block_sizes.len()],
        false,
        images,
        field,
    )
    .map(|mut t| {
        t.exponents = degrees.to_vec();
        t
    })
}

/// Chain ring: generators `X_{i_1} ... X_{i_s}` with `i_j <= n_j` for a
/// nondecreasing bound sequence, over the shared variables `X_1..X_{n_s}`.
/// Coinciding products are identified, so the presentation has one
/// variable per distinct monomial.
pub fn chain_toric(bounds: &[usize], field: &FieldSpec) -> Result<ToricPresentation> {
    assert!(!bounds.is_empty());
    if bounds.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BlocksNotNondecreasing);
    }
    let n = *bounds.last().unwrap();
    let mut images = vec![Monomial::one(n)];
    for &bound in bounds {
        let mut next = Vec::new();
        for img in &images {
            for i in 0..bound {
                next.push(img.mul(&Monomial::var(n, i)));
            }
        }
        images = next;
    }
    ToricPresentation::build(
        n,
        bounds.to_vec(),
        vec![1; bounds.len()],
        true,
        images,
        field,
    )
}

/// Fiber cone of an equigenerated monomial ideal: the presentation of the
/// subalgebra generated by the given monomials.
pub fn fiber_cone(generators: &[Monomial], field: &FieldSpec) -> Result<ToricPresentation> {
    assert!(!generators.is_empty());
    let deg = generators[0].degree();
    if generators.iter().any(|m| m.degree() != deg) {
        return Err(Error::NotEquigenerated);
    }
    let n = generators[0].num_vars();
    ToricPresentation::build(n, vec![n], vec![deg], false, generators.to_vec(), field)
}

/// Expands the variant's product of underlying forms in the source
/// variables and reads the result off against the monomial generators,
/// producing a linear form in presentation variables.
pub fn structured_form(
    pres: &ToricPresentation,
    underlying: &[LinearForm],
    variant: StructuredVariant,
) -> Result<LinearForm> {
    let field = pres.field().clone();
    let source = Ring::new(pres.source_vars, field.clone());

    // embed a block-local form into the source ring
    let embed = |form: &LinearForm, offset: usize, size: usize| -> Result<Polynomial> {
        if form.coeffs.len() != size {
            return Err(Error::FactorSizeMismatch {
                factor: 0,
                expected: size,
                got: form.coeffs.len(),
            });
        }
        let mut p = Polynomial::zero(&source);
        for (j, c) in form.coeffs.iter().enumerate() {
            p.add_term(Monomial::var(pres.source_vars, offset + j), c.clone());
        }
        Ok(p)
    };

    let check_arity = |expected: usize| -> Result<()> {
        if underlying.len() != expected {
            return Err(Error::FactorSizeMismatch {
                factor: underlying.len(),
                expected,
                got: underlying.len(),
            });
        }
        Ok(())
    };

    let product = match variant {
        StructuredVariant::SegreProduct | StructuredVariant::SegreVeronese => {
            check_arity(pres.blocks.len())?;
            let mut q = Polynomial::one(&source);
            let mut offset = 0;
            for (i, (&size, form)) in pres.blocks.iter().zip(underlying).enumerate() {
                let f = embed(form, offset, size).map_err(|e| match e {
                    Error::FactorSizeMismatch { expected, got, .. } => {
                        Error::FactorSizeMismatch {
                            factor: i + 1,
                            expected,
                            got,
                        }
                    }
                    other => other,
                })?;
                let power = if variant == StructuredVariant::SegreVeronese {
                    pres.exponents[i]
                } else {
                    1
                };
                q = q.mul(&f.pow(power));
                offset += size;
            }
            q
        }
        StructuredVariant::VeronesePower => {
            check_arity(1)?;
            let f = embed(&underlying[0], 0, pres.source_vars)?;
            f.pow(pres.exponents[0])
        }
        StructuredVariant::ChainPartialSums => {
            check_arity(pres.blocks.len())?;
            let mut q = Polynomial::one(&source);
            let mut partial = Polynomial::zero(&source);
            for (i, (&prefix, form)) in pres.blocks.iter().zip(underlying).enumerate() {
                // factor i is supported on the variable prefix 1..=n_i
                let f = embed(form, 0, prefix).map_err(|e| match e {
                    Error::FactorSizeMismatch { expected, got, .. } => {
                        Error::FactorSizeMismatch {
                            factor: i + 1,
                            expected,
                            got,
                        }
                    }
                    other => other,
                })?;
                partial = partial.add(&f);
                q = q.mul(&partial);
            }
            q
        }
    };

    // read off presentation coordinates
    let mut coeffs = vec![field.zero(); pres.images.len()];
    for (m, c) in product.terms() {
        match pres.images.iter().position(|img| img == m) {
            Some(i) => coeffs[i] = c.clone(),
            None => return Err(Error::UnexpectedSupport),
        }
    }
    Ok(LinearForm::new(coeffs, field))
}
