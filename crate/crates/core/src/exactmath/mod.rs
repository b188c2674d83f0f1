//! Exact integer and rational linear algebra.
//!
//! Everything here runs on arbitrary-size integers: Smith normal form,
//! the signature of a symmetric integer form, and affine solving over GF(2).
//! The empty 0x0 matrix is legal everywhere and stands for the empty link.

mod gf2;
mod matrix;
mod rational;
mod signature;
mod smith;

pub use gf2::{solve_gf2, AffineSolution, BitMatrix, BitVector};
pub use matrix::IntMatrix;
pub use rational::Rational;
pub use signature::exact_signature;
pub use smith::{smith_decomposition, smith_normal_form, SmithDecomposition, SmithForm};
