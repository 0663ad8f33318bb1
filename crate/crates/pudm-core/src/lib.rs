//! Positive-unlabeled training for denoising diffusion models.
//!
//! The crate trains a small MLP noise predictor on 2-D synthetic data under
//! four objectives (unsupervised, supervised, positive-negative, and
//! positive-unlabeled with a non-negative risk correction), samples from the
//! trained model with DDPM or DDIM schedulers, and evaluates how often the
//! samples fall into an analytically labeled sensitive region.
//!
//! All numerics are `f64`. Every operation is deterministic given its seed:
//! parallel sections reduce in a fixed order, so results are bit-identical
//! across thread counts and with the `parallel` feature disabled.

pub mod checkpoint;
pub mod data;
pub mod diffusion;
pub mod error;
pub mod metrics;
pub mod nn;
pub mod par;
pub mod pu;
pub mod rng;
pub mod samplers;
pub mod train;

pub use error::{Error, Result};
