//! Exact counting of factorizations in the finite general linear group.
//!
//! Fix a regular elliptic element `c` of `GL_n(F_q)` (an element whose
//! characteristic polynomial is irreducible of degree `n`).  This crate
//! counts, exactly, the tuples `(u_1, ..., u_k)` with `u_1 ... u_k = c`,
//! refined by the fixed space dimension of each factor — the `GL_n(F_q)`
//! analogue of counting factorizations of a long cycle in the symmetric
//! group by number of cycles.
//!
//! Everything is computed in exact arithmetic, three independent ways:
//!
//! - closed-form coefficients in `q` ([`coeffs`]),
//! - assembly of the generating function from character values ([`genfun`]),
//! - brute-force enumeration over small groups ([`glnq`], [`oracle`]).
//!
//! The coefficient domain is either the field of rational functions in a
//! formal variable `q` ([`exact::QRational`]) or arbitrary-precision
//! rationals at a fixed integer `q` — see [`exact::Domain`].

pub mod coeffs;
pub mod exact;
pub mod genfun;
pub mod glnq;
pub mod oracle;
pub mod table;

// Chapters of the guide in book/ double as doctests so the prose can never
// drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/q-calculus.md")]
    mod q_calculus {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/group-oracle.md")]
    mod group_oracle {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
