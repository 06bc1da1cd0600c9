//! Morita contexts, the matrix semiring of a context, trace ideals, the
//! generator and projectivity predicates, and verifiers for the two Morita
//! results.

pub mod context;
pub mod generator;
pub mod matrix;
pub mod projective;
pub mod theorems;

pub use context::{mat2, row_column_context, trivial_context, validate_context, MoritaContext};
pub use generator::{
    is_fin_generated_preceq, is_preceq_generator, module_side, preceq_generates, trace_ideal,
    Condition, FiniteGeneration, GeneratorVerdicts, Generation, Grade, TraceIdeal,
};
pub use matrix::{validate_matrix_semiring, Block, MatrixSemiring};
pub use projective::{
    check_lifting, check_preceq_projective, dual_basis_counterexample, find_dual_basis, DualBasis,
    DualBasisSearch, LiftingCheck, Projectivity,
};
pub use theorems::{verify_mor1, verify_morplus, Claim, Status, TheoremOptions, TheoremReport};
