//! Exact-arithmetic toolkit for finite-dimensional Hopf algebras, quasitriangular
//! structures, comodule algebras with K-matrices, and factorizability tests.

pub mod bundle;
pub mod comodule;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod field;
pub mod hopf;
pub mod linalg;
pub mod quasitri;
pub mod space;
pub mod tensor;
pub mod verdict;

pub use error::{Error, Result};
pub use exec::Exec;
pub use field::{Field, Scalar};
pub use linalg::{Matrix, SparseMatrix};
pub use space::{BasedSpace, MapMatrix, SparseMap};
pub use tensor::{leg_embed, tensor_invert, tensor_mult, TensorElement};
pub use verdict::{Axiom, Verdict};
