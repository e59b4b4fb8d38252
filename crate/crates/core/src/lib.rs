//! Exact Seifert-matrix assembly for frame-spun knots, with independently
//! checkable certificates that the assembled matrices are null-cobordant.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactmat`]: arbitrary-precision integer matrices.
//! - [`quadform`]: normal forms of unimodular forms with congruence witnesses.
//! - [`seifert`]: Seifert matrices and knot dimensions.
//! - [`framespin`]: assembly of the frame-spun Seifert matrix.
//! - [`cobordism`]: certificate construction and verification.
//! - [`oracle`]: bounded brute-force search used as ground truth.
//! - [`document`]: the JSON interchange format.
//! - [`corpus`]: named example inputs.

pub mod cli;
pub mod cobordism;
pub mod corpus;
pub mod document;
pub mod exactmat;
pub mod framespin;
pub mod oracle;
pub mod quadform;
pub mod seifert;

pub use cobordism::{certify_frame_spin, verify, SliceCertificate, Violation};
pub use exactmat::{IntMatrix, MatrixError};
pub use framespin::{assemble, BlockLayout, SpinInput};
pub use oracle::{search_null_cobordant, SearchBudget};
pub use seifert::{validate_seifert, KnotDims, SeifertData, Sign};
