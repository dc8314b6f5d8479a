//! Arithmetic in GF(2^n) and tools for verifying, constructing and searching
//! 2-to-1 polynomial mappings.

pub mod arith;
pub mod error;
pub mod gf2n;
pub mod lowdeg;
pub mod polyring;
pub mod search;
pub mod two2one;

pub use error::{Error, Result};
pub use gf2n::{make_field, Fe, FieldCtx};
pub use polyring::{BivarPoly, DensePoly, SparsePoly};
