//! Dense-array arithmetic with tape-based reverse-mode differentiation.
//!
//! The op set is exactly what a small transformer encoder classifier needs:
//! embedding lookup, dense layers, layer norm, fused scaled-dot-product
//! attention, activations, residual adds, block concat/permute for
//! partitioned feed-forward layers, and a softmax cross-entropy head.
//! Gradients accumulate into [`Parameter`]s; parameters flagged
//! non-trainable receive no gradient computation and their weight-gradient
//! activations are never retained by the tape.

mod scalar;
mod tape;
mod tensor;

pub use scalar::Scalar;
pub use tape::{Activation, ParamRef, Parameter, Tape, Value};
pub use tensor::Tensor;
