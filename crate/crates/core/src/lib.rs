//! Knot invariants on Gauss codes.
//!
//! Classical and virtual knots are handled uniformly as double-occurrence
//! integer sequences: a positive entry records an over-pass, a negative entry an
//! under-pass. The crate provides
//!
//! * [`gauss`]: validation, text format, strands/overbridges, diagram moves and
//!   the rewrites used to build datasets (connected sum, virtualization,
//!   crossing switch);
//! * [`bridge`]: seed propagation and the Wirtinger upper bound for the first
//!   bridge number, plus label combination;
//! * [`biquandle`]: finite (bi)quandles as operation tables, coloring counts and
//!   the lower bounds they certify;
//! * [`bracket`]: Kauffman bracket, Jones polynomial and the virtualization
//!   identity, over exact [`poly::LaurentPolynomial`] arithmetic.
//!
//! Everything is pure and allocation-only, so the crate builds without `std`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod biquandle;
pub mod bracket;
pub mod bridge;
mod error;
pub mod gauss;
pub mod poly;

pub use biquandle::{Biquandle, ColoringKind};
pub use bridge::{BridgeBounds, WirtingerNumber};
pub use error::Error;
pub use gauss::{GaussCode, ParsedCode, Sign, SignedGaussCode, Strand};
pub use poly::LaurentPolynomial;

pub type Result<T, E = Error> = core::result::Result<T, E>;
