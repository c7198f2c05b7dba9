//! Exact membership testing and constructive decomposition for the
//! Eisenstein-Picard modular group `U(3,1; Z[w])`.
//!
//! Every element is written as `C_l * w`, where `C_l = diag(l, 1, 1, l)` is a
//! unit correction and `w` is a word in four generators: the Heisenberg
//! translation `N`, the rotations `A = M_U1`, `B = M_U2` and the inversion
//! `R`. All arithmetic is exact over `Z[w]`; results are self-verified by
//! re-evaluating the word.
//!
//! ```
//! use picard::{decompose, Word};
//!
//! let g = Word::parse("N^2 R B A N^-1 R").unwrap().evaluate();
//! let d = decompose(&g).unwrap();
//! assert_eq!(d.result.evaluate(), g);
//! ```

pub mod cli;
pub mod decomposer;
pub mod eisenstein;
pub mod error;
pub mod experimental;
pub mod finite_unitary;
pub mod fuzz;
pub mod hermitian;
pub mod json;
pub mod words;

pub use decomposer::{
    choose_translation, decompose, decompose_stabilizer, decompose_translation, random_element,
    random_stabilizer, reduction_step, step_bound, verify, Decomposition, ReductionStep,
    ReductionTrace,
};
pub use eisenstein::{EisensteinFrac, EisensteinInt, SqrtThreeRational, Unit};
pub use error::{Error, Result};
pub use finite_unitary::{enumerate_group, lift, u_decompose, u_membership, FiniteUnitary, UWord};
pub use hermitian::{
    check_membership, compose_heisenberg, inversion, langlands_extract, rotation_matrix,
    translation_matrix, unit_correction, BoundaryPoint, GroupMatrix, HeisenbergParam, Matrix4,
    Translation,
};
pub use words::{DecompositionResult, Generator, Word};
