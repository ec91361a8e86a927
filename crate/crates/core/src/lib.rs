//! Exact finite computations around Prym curves and Nikulin surfaces.
//!
//! - [`f2`]: symplectic spaces over F2, quadratic forms with fixed polarity,
//!   Arf invariants and the theta-characteristic counts built on them.
//! - [`lattice`]: integer lattices given by Gram matrices, Smith normal form,
//!   discriminant groups, glue vectors and the Nikulin / `E8(-2)` models.
//! - [`bn`]: Brill-Noether and Prym-Brill-Noether numerology.
//!
//! The crate is `no_std` (it needs `alloc`). Every integer operation that can
//! grow is checked; overflow surfaces as [`Error::Overflow`] instead of wrapping.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod bn;
mod error;
pub mod f2;
pub mod lattice;

pub use error::{Error, Result};
