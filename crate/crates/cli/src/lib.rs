//! Library side of the `partfac` command: report construction and rendering.

pub mod check;
pub mod commands;
pub mod diagram;
pub mod num;
pub mod report;

pub use commands::{Failure, Outcome};
pub use report::{render, OutputFormat, Report};
