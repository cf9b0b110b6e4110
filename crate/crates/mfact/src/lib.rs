//! File formats, commands and the worked-example corpus behind the `mfact`
//! binary. The algorithms live in `mfact-core`.

pub mod commands;
pub mod config;
pub mod demo;
pub mod error;
pub mod schema;

pub use crate::commands::{cmd_factorize, cmd_predict, cmd_verify, parse_input};
pub use crate::config::{OutputFormat, RunConfig, VerifyChoice};
pub use crate::demo::{cmd_demo, Fixtures};
pub use crate::error::CliError;
