//! Exact combinatorial and algebraic machinery for verifying stretch-factor
//! degrees and symmetry obstructions of Dehn-twist words.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactalg`] — bigint matrices and polynomials: characteristic
//!   polynomials, fraction-free rank/determinant, factorization over the
//!   integers, and Perron-root isolation with rational enclosures.
//! * [`ribbon`] — fat graphs for filling pairs of curves: face tracing,
//!   genus/boundary bookkeeping, exhaustive automorphism enumeration.
//! * [`chains`] — abstract (r, g, k) curve configurations, their intersection
//!   matrices, and the twist words built on them.
//! * [`penner`] — transition matrices of twist words on the weight space
//!   indexed by the two multicurves, degree sweeps over the exponent.
//! * [`curvesys`] — explicit curves on the square complex of a filling pair:
//!   twisting, intersection numbers, annular twisting estimates, filling
//!   checks.
//! * [`symmetry`] — the automorphism-obstruction certificate.
//! * [`commands`] — end-to-end report-producing entry points shared by the
//!   CLI and the test suite.

pub mod chains;
pub mod commands;
pub mod curvesys;
pub mod exactalg;
pub mod penner;
pub mod ribbon;
pub mod symmetry;

pub use chains::{AdjacencyGraph, ChainConfig, TwistWord};
pub use exactalg::{DegreeCertificate, IntMatrix, IntPoly};
pub use ribbon::{FaceTrace, GraphAutomorphism, RibbonGraph};
