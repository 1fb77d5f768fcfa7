//! Construction and verification of LCD BCH codes of length n = (q^m + 1)/λ
//! over GF(q), where λ divides q + 1.
//!
//! The crate is organized around a brute-force oracle: [`cosets`] computes
//! coset leaders by sieving, and every closed-form leader or dimension claim
//! is checked against that sieve rather than trusted. [`gf`] supplies the
//! field tower needed for generator polynomials, [`bch`] assembles codes and
//! their LCD verification, and [`wdist`] certifies minimum distances by
//! exhaustive enumeration or the MacWilliams transform.

pub mod arith;
pub mod bch;
pub mod cosets;
mod error;
pub mod gf;
pub mod mat;
pub mod wdist;

pub use error::{Error, Result};
