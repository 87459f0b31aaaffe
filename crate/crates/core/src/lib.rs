pub mod binomial;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod field;
pub mod functions;
pub mod harness;
pub mod lucas;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
