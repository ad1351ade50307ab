//! Exact multiplication-table algebra for pre-Lie, L-dendriform,
//! dendriform and quadri-algebras over ℚ.
//!
//! Algebras are finite-dimensional and given by dense structure constants;
//! every identity is checked by exhaustive basis expansion with exact
//! rational arithmetic, so a check either passes or returns the basis tuple
//! and exact residual where it fails.

pub mod algebra;
pub mod axioms;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod form;
pub mod functors;
pub mod io;
pub mod linear;
pub mod operators;
pub mod report;
pub mod representations;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use algebra::{Algebra, Op, StructureConstants};
pub use axioms::{check_class, Class};
pub use error::{Error, Result};
pub use form::BilinearForm;
pub use linear::{LinearMap, MatrixFamily};
pub use report::{CheckReport, Failure};
pub use scalar::Scalar;
pub use tensor::{SlotPair, Tensor2, Tensor3};
