//! Exact computations with polynomial derivations over `Q`: commutation with
//! polynomial maps, coefficient-invariant translations, explicit `D`-stable
//! ideals, simplicity of two-variable Shamsuddin derivations, and the
//! isotropy group of `∂1 + b(x1) ∂2`.
//!
//! Variables are 0-indexed in the API (`x1` is index 0) and 1-indexed in the
//! text format.

pub mod automorphism;
pub mod corpus;
pub mod derivation;
pub mod error;
pub mod isotropy;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod simplicity;

pub use automorphism::{compose, is_inverse_pair, jacobian_det, InversePair, PolyMap};
pub use derivation::{
    principal_ideal_stable, recognize_pairwise, recognize_shamsuddin, stability_cofactor, Derivation, PairwiseForm,
    ShamsuddinForm,
};
pub use error::{Error, Result};
pub use isotropy::{
    classify_shift, commutes, decompose_triangular, invariant_translations, reduce_by_invariant_direction,
    IsotropyElementB, ShiftClass,
};
pub use poly::{int, parse, rat, Monomial, MultiPoly, Rat, VarStyle};
pub use simplicity::{
    bounded_isotropy_enumeration, necessary_condition_witness, pairwise_witness, plane_witness, shamsuddin_simple_n2,
    NonSimplicityWitness, Rationale, ShamsuddinDecision,
};
