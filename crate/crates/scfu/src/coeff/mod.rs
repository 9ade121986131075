//! Coefficient ring: exact rational functions in q.

mod parse;
pub mod poly;
pub mod rational;

pub use poly::IntPoly;
pub use rational::RationalQ;
