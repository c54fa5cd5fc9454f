//! Fundamental groups of complements of real tetragonal curves in
//! Hirzebruch surfaces, computed by the Zariski–van Kampen method with
//! certified exact arithmetic.

pub mod error;
pub mod fiberscan;
pub mod group;
pub mod monodromy;
pub mod poly;
pub mod resolvent;
pub mod tracker;

pub use error::{CurveError, GroupError, PolyError};
pub use poly::{BiPoly, RatPoly, QQ};
