//! Tame modules over the ortho-symplectic Lie superalgebras `osp(2m+1|2n)`
//! (family B) and `osp(2m|2n)` (family D), and exact evaluation of their
//! Kac-Wakimoto characters.
//!
//! The crate is `no_std` (it needs `alloc`). With the default `std` feature
//! the Weyl group sum can be spread over a rayon thread pool.
//!
//! - [`exactnum`]: half-integers, weights and sparse Laurent polynomials.
//! - [`rootdata`]: algebras, epsilon-delta sequences, Borel subalgebras,
//!   odd reflections, the Weyl group and the diagram automorphism.
//! - [`hook`]: hook partitions and their highest weights.
//! - [`atyp`]: atypicality, tameness and the normalizing constant `j`.
//! - [`blocks`]: central characters, the dominance order and block bottoms.
//! - [`characters`]: character formulas, denominators and dimensions.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod atyp;
pub mod blocks;
pub mod characters;
mod error;
pub mod exactnum;
pub mod hook;
pub mod rootdata;

pub use error::{Error, Result};
pub use exactnum::{Exponent, HalfInt, LaurentPolynomial, Quarter, Weight};
pub use hook::{HookPartition, Partition};
pub use rootdata::{Algebra, BorelData, EpsDeltaSequence, Family, Root, WeylElement};
