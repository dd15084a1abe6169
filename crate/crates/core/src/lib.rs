//! Exact first and second discriminants of univariate polynomials.
//!
//! The second discriminant of `f` with roots `r₁…r_n` is
//! `D₂ = Π_{i<j, k∉{i,j}} (2r_k − rᵢ − rⱼ)`; it vanishes exactly when one root
//! is the average of two others. The crate computes it (and the classical
//! `D₁`) exactly, through several independent constructions, and classifies
//! real cubics by the signs of `(D₁, D₂)`.

pub mod classify;
pub mod disc;
pub mod error;
pub mod linalg;
pub mod mpoly;
pub mod ring;
pub mod verify;

pub use classify::{CubicClass, Configuration};
pub use disc::MonicPoly;
pub use error::{Error, Result};
pub use linalg::RingMatrix;
pub use mpoly::{MPoly, Monomial, UniView, Var};
pub use ring::{Integer, Rational, Ring};
