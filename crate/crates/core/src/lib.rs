//! Cyclic Steiner 2-designs and maximum cyclic packings with high
//! even-freeness.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: modular arithmetic, CRT bijections and small finite fields.
//! - [`design`]: set systems, blocks and their cyclic (base-block) form.
//! - [`verify`]: decision procedures for the Steiner property, difference
//!   coverage, difference matrices, orthogonal arrays and even-freeness.
//! - [`construct`]: direct constructions (Bose, Singer, affine packings,
//!   difference matrices, orthogonal arrays).
//! - [`compose`]: recursive product constructions building larger cyclic
//!   even-free designs from smaller ones.
//! - [`search`]: backtracking search for cyclic even-free difference families.
//! - [`cli`]: file formats, exports and the `steiner` command line.

pub mod algebra;
pub mod cli;
pub mod compose;
pub mod construct;
pub mod design;
mod error;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
