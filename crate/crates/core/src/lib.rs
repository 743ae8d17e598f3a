//! Exact computational commutative algebra at desk scale: Macaulay
//! representation arithmetic, a Groebner engine over prime fields and the
//! rationals, lex-segment ideals, the colon/sum ladder machinery behind
//! hyperplane restriction bounds, toric presentations and reduction
//! search.

pub mod error;
pub mod field;
pub mod hilbert;
pub mod ideal;
pub mod lexseg;
pub mod macaulay;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod reduction;
pub mod restriction;
pub mod toric;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use hilbert::{ideal_component_dim, standard_monomial_count, GradedQuotient};
pub use ideal::{buchberger, kernel_of_monomial_map, normal_form, Ideal};
pub use lexseg::{lex_restricted_dim, lex_segment_ideal, HilbertFunction};
pub use macaulay::{
    binom, is_o_sequence, lemma_green_inequality, macaulay_growth, macaulay_lower, macaulay_rep,
    shifted_bound, MacaulayRep,
};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};
pub use reduction::{
    criterion_holds, power_generator_count, search_reduction, verify_reduction, ReductionProblem,
    ReductionResult, Variant,
};
pub use restriction::{
    check_gasharov_bound, check_green_bound, check_iterated_bound, check_order_independence,
    enumerate_words, ladder_ideal, sample_linear_form, verify_grd, BoundCheck, GrdReport,
    GrdViolation, Letter, LinearForm, OpWord,
};
pub use toric::{
    chain_toric, fiber_cone, segre, segre_veronese, structured_form, veronese, StructuredVariant,
    ToricPresentation,
};
