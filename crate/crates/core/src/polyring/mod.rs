//! Polynomial arithmetic over a [`FieldCtx`](crate::gf2n::FieldCtx).

mod bivar;
mod dense;
mod dickson;
mod resultant;
mod sparse;
pub mod text;

pub use bivar::{count_bivariate_zeros, BivarPoly, BIVARIATE_SCAN_LIMIT};
pub use dense::DensePoly;
pub use dickson::{dickson, dickson_eval, dickson_inverse_exponent};
pub use resultant::{
    determinant, determinant_poly, determinant_poly_cofactor, resultant, resultant_eliminate, sylvester_matrix,
    sylvester_matrix_y,
};
pub use sparse::{SparsePoly, Term};
