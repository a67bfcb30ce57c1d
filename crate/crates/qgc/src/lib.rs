//! Command-line front end for `qgc-core`: argument parsing, report rendering,
//! the on-disk graded-basis cache and one runner per subcommand.

pub mod args;
pub mod cache;
pub mod commands;
pub mod fuzz;
pub mod render;
pub mod report;

pub use args::{parse, Request, Task, UsageError};
pub use report::{Report, Status};
