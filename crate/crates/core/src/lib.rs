//! Characters of irreducible representations of GL_mn at twisted elements
//! `t . c_n`, computed with exact cyclotomic arithmetic.
//!
//! The central result implemented here: `Theta_lambda(t . c_n)` vanishes
//! identically unless `lambda + delta_mn` meets every residue class mod `n`
//! exactly `m` times, and otherwise equals `+-prod_i Theta_{mu_i}(t^n)` for
//! explicit GL_m weights `mu_i`. See [`theorem::factorize`].

pub mod exactnum;
pub mod schur;
pub mod theorem;
pub mod verify;
pub mod weights;

pub use exactnum::{CycloMatrix, CycloNumber, CyclotomicField, ExactError, Rational};
pub use schur::{char_bialternant, char_jacobi_trudi, character_at, CharacterValue, SchurError};
pub use theorem::{
    factorize, twisted_character, verify_general_form, verify_identity, FactorizationResult,
    MatrixTuple, Sign, TheoremError, VerificationReport,
};
pub use verify::TrialConfig;
pub use weights::{ResidueClasses, TwistedPoint, Weight, WeightError};
