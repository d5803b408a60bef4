//! Verification harness over the exact identity catalog: a deterministic
//! grid runner with JSON reports, plus the `bintrans` command-line front
//! end.
//!
//! - [`runner`]: evaluates catalog entries over their parameter domains by
//!   independent brute-force summation, in parallel, with deterministic
//!   report content regardless of thread count
//! - [`report`]: the report schema (exact rational strings, canonical form
//!   for byte-stable comparison)
//! - [`index`]: the exported JSON index of the catalog itself
//! - [`cli`]: argument parsing and the command implementations

pub mod cli;
pub mod index;
pub mod report;
pub mod runner;

pub use cli::run;
