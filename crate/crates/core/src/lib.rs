//! Exact-arithmetic workbench for nonassociative algebra: octonions, the
//! 27-dimensional exceptional Jordan algebra of hermitian 3x3 octonion
//! matrices, generic finite-dimensional Jordan algebras given by structure
//! constants, the free special Jordan algebra inside free associative
//! polynomials, a small language of Jordan-polynomial expressions, and the
//! two-projection path model in 2x2 symmetric matrices.
//!
//! Everything algebraic is computed over arbitrary-precision rationals; the
//! only floating-point surfaces are the grid sweeps in [`twoproj`].

pub mod albert;
pub mod checks;
pub mod findim;
pub mod freespecial;
pub mod identities;
pub mod matrix;
pub mod octonion;
pub mod rational;
pub mod twoproj;

pub use rational::Rational;
