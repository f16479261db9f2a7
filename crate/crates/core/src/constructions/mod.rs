//! Reductions from covering problems to tour problems, checked in the
//! forward direction.

pub mod curve;
pub mod lattice;
pub mod spanning;
pub mod triangle;
