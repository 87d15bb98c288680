//! Numeric core for evidential uncertainty estimation.
//!
//! This crate holds the scalar-generic pieces of the toolkit: Dirichlet
//! opinions and their uncertainty measures ([`opinion`]), the evidential
//! training objectives ([`loss`]), binary detection metrics ([`detect`]) and
//! the per-sample in-distribution scoring kernels ([`score`]). Everything is
//! generic over [`Real`] (`f32` or `f64`); the concrete aliases below pin the
//! 64-bit instantiation used throughout the experiment stack.

pub mod detect;
pub mod error;
pub mod loss;
pub mod opinion;
pub mod real;
pub mod score;
pub mod special;

pub use error::{Error, Result};
pub use loss::{KdConfig, LossWeights};
pub use opinion::DirichletOpinion;
pub use real::Real;
pub use score::EvidentialKind;

/// Scalar used by the experiment stack. All uncertainty math runs in 64-bit
/// floating point regardless of the precision the network trains in.
pub type Scalar = f64;

/// Dirichlet opinion over `Scalar`.
pub type Opinion = DirichletOpinion<Scalar>;
