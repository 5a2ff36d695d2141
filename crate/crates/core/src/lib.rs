//! Wall's transformation between Schur parameters on the unit disc and
//! continued fractions / Jacobi pencils on the upper half-plane.
//!
//! The numerical core is generic over the scalar type (see [`Real`]); the
//! `*64` aliases below fix it to `f64`, which is what the CLI uses.

// `!(x > 0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod contfrac;
pub mod error;
pub mod pencil;
pub mod poly;
pub mod quadrature;
pub mod ratfun;
pub mod roots;
pub mod scalar;
pub mod schur;
pub mod series;
pub mod table;
pub mod wall;
pub mod wire;

pub use error::{Error, Result};
pub use scalar::Real;

/// Fixed numerical thresholds.
pub mod tol {
    /// Distance from the unit circle at which a Schur parameter is rejected.
    pub const BOUNDARY: f64 = 1e-10;
    /// Smallest admissible Toeplitz minor in the determinant oracle.
    pub const DET: f64 = 1e-12;
    /// Denominator modulus treated as a pole.
    pub const POLE: f64 = 1e-14;
    /// Allowed deviation of `|δ_k|` from one.
    pub const UNIMODULAR: f64 = 1e-12;
    /// Largest imaginary part accepted for a real root.
    pub const REAL_ROOT: f64 = 1e-8;
    /// Relative correction size at which the root iteration stops.
    pub const ROOT_RESIDUAL: f64 = 1e-12;
    /// Iteration budget of the root finder.
    pub const ROOT_ITERATIONS: usize = 200;
}

pub type Complex64 = num_complex::Complex<f64>;
pub type SchurParams64 = schur::SchurParams<f64>;
pub type SchurParams32 = schur::SchurParams<f32>;
pub type TaylorSeries64 = series::TaylorSeries<f64>;
pub type WallParams64 = wall::WallParams<f64>;
pub type WallParams32 = wall::WallParams<f32>;
pub type DeltaSeq64 = wall::DeltaSeq<f64>;
pub type PolyC64 = poly::PolyC<f64>;
pub type PolyR64 = poly::PolyR<f64>;
pub type PencilDiagonals64 = pencil::PencilDiagonals<f64>;
pub type PencilDiagonals32 = pencil::PencilDiagonals<f32>;
pub type CFApproximant64 = contfrac::CFApproximant<f64>;
pub type PseudoJacobiSpec64 = ratfun::PseudoJacobiSpec<f64>;
