//! Independent brute-force ground truth: exhaustive factorization counts in
//! `GL_n(F_q)` and `S_n`, surjection-weighted counts, and subspace-tuple
//! counts.

mod gl;
mod sn;
mod subspace;

use thiserror::Error;

pub use gl::{
    brute_count_gl, colored_count, genus_stats, surjection_count, GenusHistogram, OracleConfig,
};
pub use sn::{brute_count_sn, compose, cycle_count, inverse, long_cycle, permutations};
pub use subspace::{subspace_counts, subspace_meet_count};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("oracle budget exceeded: {needed} tuples > budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("the fixed element is not regular elliptic")]
    NotRegularElliptic,
    #[error(transparent)]
    Enumeration(#[from] crate::glnq::GlError),
}
