//! Closed-form coefficient and count formulas for factorizations of regular
//! elliptic elements, refined by fixed space dimension.

mod asymptotics;
mod closed;

pub use asymptotics::{
    a_rs_extraction, a_two_explicit, a_two_explicit_with, genus_total, growth_ratio,
    growth_ratio_sweep, p_g_polynomial, sqrt_decimal, GrowthRatio,
};
pub use closed::{
    b_multi, b_two, genus0_count, m_classical, m_q, reflection_count, CoeffError, DimVector,
};
