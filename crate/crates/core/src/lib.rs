//! Exact quotients of tannakian categories of finite-group representations.

pub mod error;
pub mod fixtures;
pub mod graded;
pub mod group;
pub mod linalg;
pub mod oracle;
pub mod quotient;
pub mod rep;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
