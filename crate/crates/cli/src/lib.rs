//! Problem-file front end for the `monoext` library.

pub mod app;
pub mod commands;
pub mod error;
pub mod problem;

pub use app::{run, Execution};
pub use error::CliError;
