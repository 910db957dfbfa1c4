#![no_std]
extern crate alloc;

pub mod carving;
pub mod census;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod immersion;
pub mod smoothing;
pub mod tangles;
pub mod treecut;

pub use error::{Error, Result};
