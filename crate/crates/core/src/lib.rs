//! Exact computations with finite-dimensional Hom-algebras and Hom-bimodules
//! over the rationals: construction invariants, axiom deciders with basis
//! witnesses, standard constructions, an identity language, and a corpus of
//! named examples.

pub mod algebra;
pub mod bimodule;
pub mod construct;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use algebra::{check_algebra, check_algebra_with, hom_associator, is_algebra_morphism, AlgebraClass, HomAlgebra};
pub use bimodule::{
    check_alt_bimodule_reduced, check_equiv_forms, check_module, check_module_with, equiv_form_verdicts,
    is_bimodule_morphism, module_hom_associator, Bimodule, FormVerdicts, ModuleKind, Pattern,
};
pub use error::{Error, Result};
pub use linalg::{apply_bilinear, apply_linear, Matrix, Tensor3, Vector};
pub use report::{BasisIndex, CheckOptions, Report, Sort, Witness};
pub use scalar::Scalar;
pub use construct::{
    corollary_twist, nth_shift_bimodule, plus_algebra, plus_algebra_with, plus_bimodule, regular_bimodule,
    special_to_bimodule, split_null_extension, twist_bimodule, yau_twist, ModuleClass, PlusConvention,
};
pub use dsl::{parse_identity, polarize, verify_identity, Expr, Identity};
pub use io::Object;
