//! Quasi-hereditary structure of finite-dimensional algebras over the rationals:
//! heredity chains, rejective subcategories and endomorphism-algebra constructions.

pub mod algebra;
pub mod chains;
pub mod endo;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod formats;
pub mod modules;
pub mod rejective;

pub use error::{Error, Result};
