//! Exact arithmetic for bicharacter-braided graded algebras and exhaustive
//! verification of the n-form identities built from a graded linear map.
//!
//! The layers, bottom up:
//!
//! - [`scalar`]: rationals, cyclotomic fields and rational functions in one
//!   variable, all in canonical form.
//! - [`grading`]: finitely generated abelian groups and bicharacters.
//! - [`algebra`]: presented chi-commutative algebras, truncated by word
//!   length.
//! - [`tensor`]: the braided tensor square.
//! - [`omega`]: graded linear maps and the forms `Omega^n_E`.
//! - [`verify`]: identity suites, prechecks and bicharacter search.
//! - [`config`], [`report`], [`cli`]: the batch front end.

pub mod algebra;
pub mod cli;
pub mod config;
pub mod error;
mod expr;
pub mod grading;
pub mod instances;
pub mod omega;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraSpec, Generator, Monomial};
pub use error::{Error, Result};
pub use grading::{Bicharacter, GroupElement, GroupSpec};
pub use omega::{CFunction, GradedLinearMap, OmegaPath};
pub use scalar::{Scalar, ScalarDomain};
pub use verify::{Bounds, Instance, Mode, SuiteId, SuiteRequest, Verdict};
