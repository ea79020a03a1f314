//! Exact computations with the braid groups of the torus and split
//! 2-valued maps of `T²`: free-group words, the hat involution, the pure and
//! full 2-string braid groups, classification of split maps, Nielsen
//! numbers, root-free lift certificates and the Hausdorff configuration
//! metric.

pub mod braid;
pub mod classify;
pub mod cli;
pub mod confmetric;
pub mod error;
pub mod fixroot;
pub mod freegroup;
pub mod hatcalc;
pub(crate) mod literal;

pub use error::{Error, Result};
