//! Exact arithmetic in the Hopf monoid of superclass functions on labelled
//! set partitions, with closed-form antipodes, ribbon identities, primitive
//! elements, and the projection to symmetric functions in noncommuting
//! variables.

pub mod algebra;
pub mod closedform;
pub mod coeff;
pub mod combinatorics;
pub mod error;
pub mod notation;
pub mod pi;
pub mod primitives;
pub mod ribbon;
pub mod verify;

pub use coeff::{IntPoly, RationalQ};
pub use error::{Result, ScfError};
