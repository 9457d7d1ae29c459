pub mod choice;
pub mod classifier;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod hfs;
pub mod order;

pub use error::{Error, Result};
pub use hfs::{HfSet, RawSet};
