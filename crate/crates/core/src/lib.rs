//! Exact big-rational engine for double sums attached to binomial transform
//! pairs.
//!
//! Everything here is exact: the only scalar type is an arbitrary-precision
//! rational, so every identity check is a machine-decidable equality. The
//! crate is organized as:
//!
//! - [`rational`]: the `Rational` scalar and small power/parsing helpers
//! - [`binom`]: factorials, binomial coefficients (integer and generalized
//!   upper argument), Kronecker delta
//! - [`poly`]: dense univariate polynomials with rational coefficients
//! - [`sequences`]: memoized exact generators (Bernoulli numbers and
//!   polynomials, Fibonacci/Lucas/Gibonacci/Horadam with negative indices,
//!   harmonic and odd harmonic numbers of any order, Catalan, Stirling
//!   numbers of the second kind, m-step recurrences)
//! - [`transform`]: the signed binomial transform, involution and
//!   self/anti-self-inverse classification, the shift identity, and the
//!   catalog of named transform pairs
//! - [`doublesum`]: evaluators for the incomplete-binomial double-sum
//!   kernels, the 2F1 series cross-check, and the hyperbolic corollaries
//!   under the t-substitution
//! - [`registry`]: the identity catalog: every cataloged double-sum
//!   identity with its parameter domain, independent left/right evaluators,
//!   and status (as-stated / amended / edge-restricted)
//!
//! The crate is `no_std`-compatible (`alloc` required): disable the default
//! `std` feature and enable `spin` to supply the memo-table locks.
//!
//! ```
//! use bintrans_core::registry::{registry, Point};
//!
//! let reg = registry();
//! let at = Point::new().with_int("n", 2);
//! let outcome = reg.evaluate("intro-bernoulli-double", &at).unwrap();
//! assert!(outcome.equal);
//! assert_eq!(outcome.lhs.to_string(), "-1/3");
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "spin")))]
compile_error!("bintrans-core requires the `std` feature (default) or `spin` for no_std builds");

pub mod binom;
pub mod doublesum;
pub mod error;
pub mod guard;
pub mod poly;
pub mod rational;
pub mod registry;
pub mod sequences;
pub mod transform;

mod sync;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::{frac, rat, Rational};
