//! Exact coefficient domains and the universal q-calculus primitives the
//! rest of the crate consumes.

mod domain;
mod multilaurent;
mod qpoly;
mod qrational;
pub mod qseries;
mod xpoly;
mod xseries;

pub use domain::{Domain, NumericQ, SymbolicQ};
pub use multilaurent::{Exponents, MultiLaurent};
pub use qpoly::QPoly;
pub use qrational::QRational;
pub use qseries::{
    basis_falling_to_monomial, basis_monomial_to_falling, choose2, gl_order, gl_order_poly,
    pochhammer, qbin, qbinomial, qfactorial, qfactorial_poly, qhyper_terminating, qint, qint_poly,
    qmultinomial, qq_pochhammer, qq_pochhammer_poly, ExactError,
};
pub use xpoly::{falling_basis, pochhammer_marker, XPoly};
pub use xseries::{Basis, XSeries};
