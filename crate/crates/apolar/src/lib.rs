//! Exact computer algebra for Macaulay inverse systems over standard
//! (bi)graded Artinian Gorenstein algebras: apolarity, catalecticant
//! ranks, annihilator generators, Lefschetz property checks via higher
//! Hessians, Nagata hypersurface geometry, and closed-form predictions
//! for forms built from simplicial complexes.
//!
//! All linear algebra is exact over the rationals; randomized routines
//! take explicit seeds and report their certainty level.

pub mod apolarity;
pub mod error;
pub mod lefschetz;
pub mod linalg;
pub mod nagata;
pub mod parse;
pub mod ring;
pub mod simplicial;

pub use apolarity::{
    annihilator, catalecticant, catalecticant_bigraded, coset_basis, hilbert, is_annihilated,
    CatalecticantMap, GradedIdeal, HilbertData,
};
pub use error::{Error, Result};
pub use lefschetz::{
    canonical_element, check_slp, check_wlp, hessian_matrix, hessian_vanishes, multiplication_map,
    Certainty, Evidence, HessianMatrix, LefschetzConfig, LefschetzReport, MultiplicationMap,
    Strategy, Verdict,
};
pub use nagata::{
    build_nagata, restrict_to_line, sample_line_family, singular_locus_contains_alpha_space,
    IncidenceSummary, LinePencil, NagataForm,
};
pub use parse::parse_polynomial;
pub use ring::{
    basis_dim, graded_basis, monomial_basis, rat, rat_frac, DiffOperator, Monomial, Polynomial,
    Rat, VariableSplit,
};
pub use simplicial::{
    complex_from_json, complex_to_form, face_complex, predict_generators, predict_hilbert,
    verify_prediction, GeneratorFamilies, SimplicialComplex, Thm37Prediction, VerificationReport,
};
