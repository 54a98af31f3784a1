//! Weak Lefschetz computations for monomial ideals in three variables.

pub mod arith;
pub mod colon;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod scan;
pub mod wlp;

pub use error::{Error, Result};
