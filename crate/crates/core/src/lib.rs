//! Tetrahedron (3-simplex) and n-simplex operator families built from
//! site-local SU(2) data, the Toffoli gate families they contain, and dense
//! and matrix-free checks of the simplex equations they satisfy.

pub mod error;
pub mod gates;
pub mod io;
pub mod operators;
pub mod random;
pub mod su2;
pub mod tensor;
pub mod verifier;

pub use error::{Error, Result};
pub use tensor::{DenseOperator, Seed, SiteTuple, StateVector, Tolerance};
