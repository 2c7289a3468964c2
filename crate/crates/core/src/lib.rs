//! Exact-arithmetic engine for the Hochschild homology and cohomology of the
//! codimension-two quantum complete intersections
//! `A = k<X,Y> / (X^a, XY - qYX, Y^b)`.
//!
//! The crate builds the explicit minimal projective bimodule resolution of `A`,
//! tensors it with twisted coefficient modules, and computes homology and
//! cohomology dimensions by exact rank computations over the rationals, prime
//! fields, and univariate rational function fields. Everything is exact; there
//! is no floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI, and the JSON report
//! formats live in the companion `qci` binary crate.

#![cfg_attr(not(test), no_std)]
// index-driven loops over matrix/grid coordinates read better than iterator
// chains in the elimination and composition kernels
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod check;
pub mod homology;
pub mod matrix;
pub mod resolution;
pub mod ring;
pub mod scalar;

pub use algebra::{AlgebraElement, AlgebraParams, DiagonalAutomorphism};
pub use check::{Check, CheckReport};
pub use homology::{DimensionReport, InducedMap, TwistSpec};
pub use resolution::{BimoduleMatrix, TensorElement};
pub use scalar::{FieldDescriptor, FieldError, Scalar};
