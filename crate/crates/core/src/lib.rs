pub mod classical;
pub mod dsl;
pub mod error;
pub mod linalg;
pub mod process;
pub mod propositions;
pub mod random;
pub mod scalar;
pub mod spin;
pub mod subspace;

pub use error::{Error, Result};
pub use linalg::{inner, Matrix, Vector};
pub use propositions::{expectation, Interval, Proposition};
pub use scalar::Scalar;
pub use subspace::{ScalarField, Subspace};
