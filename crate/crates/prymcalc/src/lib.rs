//! Exact-arithmetic verification engine for the closed-form intersection
//! theory of rank-2 moduli geometry: truncated graded algebra over the
//! rationals, pushforward Chern characters for the degree 8 spectral
//! covers, parabolic weight and tacnode corrections, Riemann-Hurwitz and
//! adjunction bookkeeping, local Higgs-field logarithmicity in blow-up
//! coordinates, and the 16_6 node/trope configuration.
//!
//! Every value is an exact rational or a polynomial over the rationals;
//! stated identities in parameters are checked as polynomial identities.
//! The [`report`] module registers all verifications; the `verify` binary
//! runs them and the `examples/` directory walks each capability.

pub mod chern;
pub mod config;
pub mod curves;
pub mod kummer;
pub mod lattice;
pub mod localforms;
pub mod poly;
pub mod rat;
pub mod report;
pub mod ring;
pub mod varieties;

pub use poly::Poly;
pub use rat::Rat;
pub use ring::{ChowPresentation, Coeff, GradedClass, Monomial, RingError};
pub use varieties::{
    builtin_presentations, BuiltinGeometry, CoverPresentation, VarietyPresentation,
};
