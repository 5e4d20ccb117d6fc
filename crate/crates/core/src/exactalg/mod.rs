//! Arbitrary-precision integer linear algebra and polynomial arithmetic.
//!
//! Everything here is exact: determinants and ranks via fraction-free
//! elimination, characteristic polynomials via the Faddeev–LeVerrier
//! recurrence, factorization over the integers via Berlekamp + Hensel +
//! subset recombination, and dominant-eigenvalue isolation via Sturm chains
//! over the rationals. No floating point enters any trusted value.

mod factor;
mod matrix;
mod perron;
mod poly;
mod sturm;

pub use factor::factor_over_z;
pub use matrix::IntMatrix;
pub use perron::{perron_degree, DegreeCertificate, PerronError};
pub use poly::IntPoly;
pub use sturm::{count_roots_in, sturm_chain, RatPoly};
