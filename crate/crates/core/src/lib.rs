pub mod centralizers;
pub mod error;
pub mod graded;
pub mod jordan;
pub mod kernel;
pub mod lie;
pub mod modes;
pub mod rootsys;
pub mod slices;
pub mod tables;
pub mod trivector;

pub use error::{Error, Result};
