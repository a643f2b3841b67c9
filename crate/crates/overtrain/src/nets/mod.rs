//! Network models and loss functions.
//!
//! Three models: a one-hidden-layer rectifier MLP ([`MlpParams`]), a
//! piriform-inspired variant with dropout, a feedback branch and forward
//! noise ([`BioNetParams`]), and a two-layer linear network with an explicit
//! feature-learning scale ([`Linear2Params`]). Forward passes and gradients
//! are exact, hand-derived, and checked against finite differences in the
//! tests.

mod bio;
mod checkpoint;
mod linear2;
mod loss;
mod mlp;

pub use bio::{BioBatch, BioGrads, BioNetParams};
pub use checkpoint::{Checkpoint, NamedArray};
pub use linear2::{Linear2Params, Phase};
pub use loss::{ce_loss, hinge_loss, LossKind, LossSpec};
pub use mlp::{MlpBatch, MlpGrads, MlpParams};

use nalgebra::{DMatrix, DVector};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("non-finite activation in {layer}")]
    NonFinite { layer: String },
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        got: usize,
    },
    #[error("malformed checkpoint: {0}")]
    Checkpoint(String),
}

/// Forward-pass mode. Training enables dropout and forward noise where the
/// architecture has them; evaluation is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Train,
    Eval,
}

/// A feed-forward model trainable by full-batch gradient descent.
///
/// Batches are laid out one example per column. The trainer drives the
/// forward/backward pair, scales per-example logit gradients itself, and
/// calls [`Model::step`], which guards against non-finite parameters.
pub trait Model: Clone {
    type Cache;
    type Grads;

    /// Forward pass on a batch; returns per-example logits plus whatever the
    /// backward pass needs. `rng` is required in train mode for stochastic
    /// architectures and ignored otherwise.
    fn forward_batch(
        &self,
        inputs: &DMatrix<f64>,
        mode: Mode,
        rng: Option<&mut ChaCha8Rng>,
    ) -> Result<(Self::Cache, DVector<f64>), NetError>;

    /// Parameter gradients given d(loss)/d(logit) per example.
    fn backward_batch(
        &self,
        inputs: &DMatrix<f64>,
        cache: &Self::Cache,
        dlogits: &DVector<f64>,
    ) -> Self::Grads;

    /// Gradient-descent update; errors if any parameter becomes non-finite.
    fn step(&mut self, grads: &Self::Grads, lr: f64) -> Result<(), NetError>;

    /// The representation analyzed by the population suite (units x batch),
    /// always in eval mode.
    fn representation_batch(&self, inputs: &DMatrix<f64>) -> Result<DMatrix<f64>, NetError>;

    fn input_dim(&self) -> usize;
    fn representation_dim(&self) -> usize;
}

pub(crate) fn ensure_finite_matrix(m: &DMatrix<f64>, layer: &str) -> Result<(), NetError> {
    if m.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(NetError::NonFinite { layer: layer.into() })
    }
}

pub(crate) fn ensure_finite_vector(v: &DVector<f64>, layer: &str) -> Result<(), NetError> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(NetError::NonFinite { layer: layer.into() })
    }
}
