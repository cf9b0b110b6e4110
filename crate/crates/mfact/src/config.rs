use std::fmt;
use std::str::FromStr;

use mfact_core::refined::{Method, PipelineOptions, DEFAULT_MAX_STANDARD_MONOMIALS};
use mfact_core::{StandardVariant, VerifyPolicy, YoshinoVariant, DEFAULT_TRIALS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VerifyChoice {
    Exact,
    Randomized,
    #[default]
    Auto,
}

impl FromStr for VerifyChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(VerifyChoice::Exact),
            "randomized" => Ok(VerifyChoice::Randomized),
            "auto" => Ok(VerifyChoice::Auto),
            _ => Err(format!(
                "unknown verify mode {s:?} (exact, randomized, auto)"
            )),
        }
    }
}

impl fmt::Display for VerifyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyChoice::Exact => "exact",
            VerifyChoice::Randomized => "randomized",
            VerifyChoice::Auto => "auto",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "structured" | "json" => Ok(OutputFormat::Structured),
            _ => Err(format!("unknown format {s:?} (text, structured)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub method: Method,
    pub yoshino_variant: YoshinoVariant,
    pub standard_variant: StandardVariant,
    pub verify: VerifyChoice,
    pub trials: usize,
    pub seed: u64,
    pub format: OutputFormat,
    pub strict_validate: bool,
    pub max_standard_monomials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            method: Method::Refined,
            yoshino_variant: YoshinoVariant::Standard,
            standard_variant: StandardVariant::Standard,
            verify: VerifyChoice::Auto,
            trials: DEFAULT_TRIALS,
            seed: 0,
            format: OutputFormat::Text,
            strict_validate: false,
            max_standard_monomials: DEFAULT_MAX_STANDARD_MONOMIALS,
        }
    }
}

impl RunConfig {
    pub fn policy(&self) -> VerifyPolicy {
        let (trials, seed) = (self.trials, self.seed);
        match self.verify {
            VerifyChoice::Exact => VerifyPolicy::Exact,
            VerifyChoice::Randomized => VerifyPolicy::Randomized { trials, seed },
            VerifyChoice::Auto => VerifyPolicy::Threshold { trials, seed },
        }
    }

    pub fn pipeline_options(&self) -> PipelineOptions {
        PipelineOptions {
            yoshino_variant: self.yoshino_variant,
            standard_variant: self.standard_variant,
            verify: self.policy(),
            max_standard_monomials: self.max_standard_monomials,
        }
    }
}
