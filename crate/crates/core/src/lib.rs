//! Finite semiring systems: semirings with a negation map and a surpassing
//! relation, their module systems, negated tensor products and Morita
//! contexts, all table-driven and checked exhaustively.

pub mod carrier;
pub mod corpus;
mod coset;
pub mod error;
pub mod format;
pub mod iso;
pub mod module;
pub mod morita;
pub mod morphism;
pub mod negation;
pub mod report;
pub mod semiring;
pub mod surpass;
pub mod system;
pub mod tensor;

pub use carrier::Carrier;
pub use error::{BilinearityError, Error, Result, SearchError, StructureError};
pub use negation::NegationMap;
pub use report::{AxiomCheck, ValidationReport, Verdict, Witness};
pub use semiring::{validate_semiring, Elem, FiniteSemiring};
pub use surpass::SurpassRelation;
pub use system::{
    quasi_zeros, surpass_circ, validate_surpass, validate_system, validate_triple, SystemDef,
    Triple,
};
pub use module::{
    direct_power, validate_module, validate_module_triple, Action, FiniteModuleSystem,
    ModuleParts, Side,
};
pub use morphism::{
    enumerate_morphisms, enumerate_morphisms_on_generators, is_null_monic, is_preceq_onto,
    preceq_image, validate_morphism, Decision, Morphism, MorphismKind, SearchOptions,
};
pub use tensor::{
    factor_bilinear, free_module, tensor_product, validate_bilinear, FormalSum,
    TensorPresentation,
};
pub use iso::{find_isomorphism, Isomorphism};
pub use morita::{
    find_dual_basis, is_fin_generated_preceq, is_preceq_generator, preceq_generates, trace_ideal,
    validate_context, verify_mor1, verify_morplus, MatrixSemiring, MoritaContext, TheoremOptions,
    TheoremReport,
};
pub use format::{dump, load_str, FormatError, Loaded, Structure};
