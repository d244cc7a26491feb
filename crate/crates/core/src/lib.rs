//! Exact computations with `d`-way tensors over small prime fields: the
//! restriction quasi-order, rank notions, weight decompositions of the tensor
//! and symmetric powers, and restriction-closed properties given by forbidden
//! restrictions.

pub mod budget;
pub mod error;
pub mod exec;
pub mod field;
pub mod linalg;
pub mod properties;
pub mod ranks;
pub mod reptheory;
pub mod restriction;
pub mod selftest;
pub mod tensor;

pub use budget::Budget;
pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{ExponentMonoid, PrimeField, Scalar};
pub use linalg::{LinearMap, Matrix};
pub use num_rational::Ratio;
pub use tensor::Tensor;
