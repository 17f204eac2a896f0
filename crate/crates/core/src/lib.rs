//! Exact finite-field computations with bimodule bicategories of
//! covering-quiver Hopf algebras.
//!
//! Conventions: paths compose right to left (`βα` means "α, then β"), so
//! `e_g A` is spanned by paths ending at `g` and `A e_g` by paths starting
//! there. Right actions are stored as matrices of `m ↦ m·x`.

pub mod algebra;
pub mod bimodule;
pub mod cells;
pub mod cohomology;
pub mod hopf;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod skewcat;
pub mod sparse;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use matrix::Mat;
pub use report::{Status, ValidationReport};
