//! Exact-arithmetic workbench for finite-dimensional coalgebras and Hopf
//! algebras over ℚ.
//!
//! The crate decides co-Frobenius and symmetric status of a coalgebra
//! given by structure constants, builds the ring structure transferred
//! from the dual algebra, computes Nakayama automorphisms, trivial
//! coextensions, dual Brauer-style hom functors, and Hopf-algebra
//! integrals — all with exact rational arithmetic, so every yes/no
//! verdict is certified rather than numerically guessed.
//!
//! Start with the runnable examples (`cargo run --example ...`) for a
//! tour of each capability, or the `symcoalg` binary for the file-based
//! command-line interface.

// structure-constant code is index-driven throughout
#![allow(clippy::needless_range_loop)]

pub mod brauer;
pub mod coalgebra;
pub mod coextension;
pub mod corpus;
pub mod exchange;
pub mod field;
pub mod frobenius;
pub mod hopf;
pub mod matrix;
pub mod nakayama;
pub mod ring;
pub mod search;
pub mod subspace;
pub mod tensor;

pub use coalgebra::{Coalgebra, Comodule, DualAlgebra};
pub use field::{Field, Fp, Rational};
pub use matrix::Matrix;
pub use subspace::Subspace;
