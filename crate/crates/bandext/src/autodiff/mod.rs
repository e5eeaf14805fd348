//! Minimal reverse-mode differentiable tensor engine.
//!
//! Graphs are built eagerly per forward pass and freed when the output
//! tensors drop; nothing is reused across steps. All arithmetic is 64-bit.
//! Reductions inside every op run in a fixed index order, so results are
//! identical whether or not the data-parallel feature is enabled.

mod adam;
mod gradcheck;
mod ops;
mod tensor;

pub use adam::{adam_step, AdamState};
pub use gradcheck::{grad_check, GradCheckCase, GradCheckReport};
pub use ops::{
    activation, add, batch_norm2d, bce_loss, concat_channels, conv2d, conv_transpose2d, dense,
    l1_loss, mul_elem, reshape, scale, slice_channels, sum_all, ActivationKind, BnMode,
};
pub use tensor::{backward, Parameter, Tensor};

use thiserror::Error;

/// Errors raised by the tensor engine.
#[derive(Debug, Error)]
pub enum AutodiffError {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("stat error: {0}")]
    Stat(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("optimizer error: {0}")]
    Optimizer(String),
}
