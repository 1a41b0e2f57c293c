//! Exact computations with matrix Leibniz superalgebras over associative
//! superdialgebras.
//!
//! The crate builds `gl(m, n, D)` and `sl(m, n, D)` from structure
//! constants, computes Leibniz homology through the chain complex and
//! through the non-abelian tensor square, computes the degree-one
//! Hochschild homology of `D`, and compares `HL_2(sl(m, n, D))` with
//! `HHS_1(D) + W(m, n, D)`.

pub mod chain;
pub mod error;
pub mod exactlin;
pub mod hochschild;
pub mod leibniz;
pub mod superdialg;
pub mod tensorsq;
pub mod theorems;

pub use error::{Error, Result};
