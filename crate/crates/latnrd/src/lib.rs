//! File formats, rendering, thread fan-out and the command line for
//! `latnrd-core`.

pub mod check;
pub mod cli;
mod error;
pub mod json;
pub mod parallel;
pub mod render;
pub mod table;

pub use cli::{Command, Format, Outcome, RunSpec};
pub use error::{Error, Result};
