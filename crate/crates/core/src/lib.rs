//! Psi(a,b,n) polynomial sequences: exact evaluation, generalized Eight-Levels
//! expansion coefficients, sums-of-like-powers brackets, a Mersenne test
//! battery and bridges to classical sequences.

mod error;
pub mod exactmath;
pub mod multipoly;
pub mod psi;
pub mod eightlevels;
pub mod powersums;
pub mod report;
pub mod mersenne;
pub mod bridges;

pub use error::{Error, Result};
