//! Exact truncated multivariate series over the rationals, with partition
//! combinatorics, Macdonald polynomial evaluation and builders for
//! hook-length product identities.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exactnum;
pub mod elliptic;
pub mod hooks;
pub mod identities;
pub mod macdonald;
pub mod nekrasov;
pub mod partitions;
pub mod report;

pub use exactnum::{MultiSeries, Rational, Ring, Var};

pub use error::{Error, Result};
