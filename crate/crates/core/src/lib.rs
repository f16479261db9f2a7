//! Exact-arithmetic toolkit for line covers, covering tours and
//! turning-angle constructions.

pub mod adversary;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod gadget;
pub mod geom;
pub mod instance;
pub mod rng;
pub mod tour;

pub use error::{Error, Result};
