use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mfact::commands::{render_factorize, render_predict, render_verify};
use mfact::demo::render_demo;
use mfact::{
    cmd_demo, cmd_factorize, cmd_predict, cmd_verify, CliError, Fixtures, OutputFormat, RunConfig,
    VerifyChoice,
};
use mfact_core::refined::{Method, DEFAULT_MAX_STANDARD_MONOMIALS};
use mfact_core::{StandardVariant, YoshinoVariant, DEFAULT_TRIALS};
use serde::Serialize;

/// Exact matrix factorizations of polynomials.
#[derive(Parser)]
#[command(name = "mfact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factorize a polynomial or a { terms, products } document.
    Factorize {
        /// Polynomial text or JSON; read from --input or stdin when absent.
        expr: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check a serialized factorization { f, size, phi, psi }.
    Verify {
        /// Factorization file; same as --input.
        file: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Validate a summand-reduced input and print the predicted sizes.
    Predict {
        expr: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run the worked-example corpus and print a pass/fail table.
    Demo {
        /// Read fixtures from this directory instead of the built-in copies.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// standard, improved or refined
    #[arg(long, default_value = "refined")]
    method: Method,
    /// standard, v1, v2 or v3
    #[arg(long, default_value = "standard")]
    yoshino_variant: YoshinoVariant,
    /// standard, v1 or v2
    #[arg(long, default_value = "standard")]
    standard_variant: StandardVariant,
    /// exact, randomized or auto (exact up to size 64)
    #[arg(long, default_value = "auto")]
    verify: VerifyChoice,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = positive)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// text or structured
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Reject inputs that fail the summand-reduced conditions (exit 5).
    #[arg(long)]
    strict_validate: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_STANDARD_MONOMIALS)]
    max_standard_monomials: usize,
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        RunConfig {
            method: self.method,
            yoshino_variant: self.yoshino_variant,
            standard_variant: self.standard_variant,
            verify: self.verify,
            trials: self.trials,
            seed: self.seed,
            format: self.format,
            strict_validate: self.strict_validate,
            max_standard_monomials: self.max_standard_monomials,
        }
    }

    fn read_input(&self, inline: Option<String>) -> Result<String, CliError> {
        if let Some(text) = inline {
            return Ok(text);
        }
        match &self.input {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
                Ok(buf)
            }
        }
    }

    fn emit<T: Serialize>(
        &self,
        value: &T,
        text: impl FnOnce(&T) -> String,
    ) -> Result<(), CliError> {
        let rendered = match self.format {
            OutputFormat::Text => text(value),
            OutputFormat::Structured => {
                let mut s =
                    serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
                s.push('\n');
                s
            }
        };
        match &self.output {
            Some(path) => std::fs::write(path, rendered)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{rendered}");
                Ok(())
            }
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Factorize { expr, run } => {
            let out = cmd_factorize(&run.read_input(expr)?, &run.config())?;
            run.emit(&out, render_factorize)?;
            Ok(0)
        }
        Command::Verify { file, run } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => run.read_input(None)?,
            };
            let out = cmd_verify(&text, &run.config())?;
            run.emit(&out, render_verify)?;
            Ok(if out.verification.passed { 0 } else { 3 })
        }
        Command::Predict { expr, run } => {
            let out = cmd_predict(&run.read_input(expr)?, &run.config())?;
            run.emit(&out, render_predict)?;
            Ok(0)
        }
        Command::Demo { fixtures, run } => {
            let fx = fixtures.map_or_else(Fixtures::embedded, Fixtures::from_dir);
            let out = cmd_demo(&fx, &run.config());
            run.emit(&out, render_demo)?;
            Ok(if out.passed { 0 } else { 3 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
