//! Exact linear algebra over prime fields: enumeration of `GL_n(F_q)`,
//! fixed space dimensions, and regular elliptic / Singer elements.

mod enumerate;
mod matrix;
mod poly;

pub use enumerate::{
    enumerate_gl, enumerate_gl_with_budget, find_regular_elliptic, group_order, GlError,
    DEFAULT_ENUM_BITS,
};
pub use matrix::MatrixFq;
pub use poly::{char_poly, monic_irreducible_count, PolyFq};
