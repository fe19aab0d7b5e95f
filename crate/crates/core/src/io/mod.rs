//! The text format, command dispatch and reports.

pub mod emit;
pub mod parse;
pub mod report;
pub mod run;

pub use emit::emit;
pub use parse::{parse, Document, Span};
pub use report::{exit_code, Format, SCHEMA};
pub use run::{run, Command, IlArgs, Outcome, DEFAULT_SEARCH_BOUND};
