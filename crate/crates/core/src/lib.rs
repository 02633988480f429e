//! Exact Thom polynomial and SSM-class calculus for weighted-homogeneous map germs.
pub mod algebra;
pub mod chern;
pub mod database;
pub mod error;
pub mod invariants;
pub mod pushforward;
pub mod restriction;

pub use error::{Error, ErrorCategory, Result};
