//! Exact verification and construction of q-generalized associative and
//! dendriform algebras given by structure constants over the rationals.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! verifier returns a [`CheckReport`] listing each failing identity instance
//! with its basis indices and residual.

pub mod algebra;
pub mod audit;
pub mod classify2d;
pub mod dendriform;
pub mod doubles;
pub mod error;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod matched_pairs;
pub mod notation;
pub mod operators;
pub mod rational;
pub mod report;
pub mod representations;

pub use algebra::{check_homomorphism, Fingerprint, StructureAlgebra};
pub use classify2d::{
    are_isomorphic_dim2, enumerate_2d_antiassociative, verify_paper_classification, ClassificationAudit, IsoVerdict,
};
pub use dendriform::{
    associated_algebra, check_dendriform_bimodule, check_dendriform_matched_pair, check_q_dendriform,
    dendriform_bowtie, DendriformBimodule, DendriformMatchedPairData, DendriformStructure,
};
pub use doubles::{
    build_quadratic_double, build_symplectic_double, check_dual_matched_pair_criterion, check_symplectic_criterion,
    octuple_from_symplectic_pair, verify_double_isomorphism, DoubleConstruction, DoubleKind,
};
pub use error::{Error, Result};
pub use forms::{check_invariant_symmetric, check_symplectic, natural_forms, BilinearForm, FormKind};
pub use linalg::{Matrix, Tensor3, Vector};
pub use matched_pairs::{bowtie, check_matched_pair, MatchedPairData};
pub use operators::{
    check_o_operator, check_rota_baxter, compatible_dendriform_from_o_operator, dendriform_from_symplectic,
    induced_dendriform_on_module, LinearMap,
};
pub use rational::{int, rat, Rational};
pub use report::{CheckReport, Violation};
pub use representations::{check_bimodule, dual_bimodule, semidirect_product, Bimodule};
