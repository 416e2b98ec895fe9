//! Formats, the verification suite and the request runner behind the
//! `ospkw` command.

pub mod json;
pub mod run;
pub mod text;
pub mod verify;

pub use run::{run, Command, OutputFormat, Request, Response};
