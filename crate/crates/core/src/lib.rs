// Index loops mirror tensor notation; negated comparisons reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dirac;
pub mod error;
pub mod lab;
pub mod numeric;
pub mod operators;
pub mod sampling;
pub mod spinor;
pub mod tensor;
pub mod wavepacket;

pub use error::{Error, Result};
