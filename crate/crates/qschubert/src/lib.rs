//! Exact combinatorics of quantum Schubert cells.
//!
//! Everything here is exact integer / rational-function arithmetic: Cartan
//! data and lattice pairings, Weyl group elements with faithful matrix
//! actions, Marsh-Rietsch positive subexpressions, the integer exponent
//! matrices attached to a reduced word and a Bruhat-smaller element,
//! quantum-torus arithmetic over rational functions in s = q^(1/2), toric
//! frames for the interval-permutation family, and a quantum-matrices
//! oracle that checks the monomial identities by explicit computation
//! inside a quantum torus.
//!
//! The crate is `no_std` (with `alloc`); all I/O lives in the companion
//! CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cartan;
pub mod error;
pub mod exponents;
pub mod frames;
pub mod qmatrix;
pub mod qtorus;
pub mod scalar;
pub mod subexpr;
pub mod twist;
pub mod weyl;

pub use cartan::{CartanData, RootVec, Weight};
pub use error::Error;
pub use weyl::WeylElement;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
