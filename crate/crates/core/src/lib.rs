//! Exact Hochschild, cyclic and Chevalley-Eilenberg homology of quiver algebras.

pub mod algebra;
pub mod complexes;
pub mod error;
pub mod hochschild;
pub mod linalg;
pub mod local;
pub mod quiver;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
