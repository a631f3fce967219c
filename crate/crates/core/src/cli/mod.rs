//! The `qschur-hh` command line: one subcommand per pipeline, reports in table, JSON or CSV
//! form, and an optional on-disk cache for the bimodule resolution.

mod args;
mod pipelines;
mod render;

pub use args::{Cli, CommandArgs};
pub use pipelines::*;
pub use render::render;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::FieldDescriptor;

pub const TOOL_NAME: &str = "qschur-hh";

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const RUNTIME: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Algebra,
    Resolution,
    Hh,
    Ring,
    Wreath,
    KernelPi,
    Quotient,
    Blocks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected table, json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
        };
        write!(f, "{s}")
    }
}

/// Which sign conventions the `wreath` pipeline reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionChoice {
    Unsigned,
    Signed,
    Both,
}

impl FromStr for ConventionChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unsigned" => Ok(ConventionChoice::Unsigned),
            "signed" => Ok(ConventionChoice::Signed),
            "both" => Ok(ConventionChoice::Both),
            _ => Err(format!("unknown convention `{s}` (expected unsigned, signed or both)")),
        }
    }
}

/// Everything a run depends on. The cache path is storage only and is left out of reports,
/// so a cache hit and a cold run print the same bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    pub field: FieldDescriptor,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<usize>,
    pub format: Format,
    #[serde(skip)]
    pub cache_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub verify: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub convention: Option<ConventionChoice>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<String>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            e: None,
            w: None,
            n: None,
            field: FieldDescriptor::Rational,
            max_degree: None,
            format: Format::Table,
            cache_path: None,
            verify: false,
            convention: None,
            generators: None,
            partition: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Verification(_) => exit::VERIFICATION,
            CliError::Runtime(_) => exit::RUNTIME,
        }
    }
}

/// The JSON form of every report: tool identity, the config that produced it, and the
/// pipeline result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub result: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportBody {
    Algebra(AlgebraResult),
    Resolution(ResolutionResult),
    Hh(HhResult),
    Ring(crate::hochschild::PresentationReport),
    Wreath(WreathResult),
    KernelPi(crate::symwreath::KernelPiReport),
    Quotient(QuotientResult),
    Blocks(BlocksResult),
}

/// A finished run: the report, its rendering, and the failure to signal if a verification
/// inside the report did not pass.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub rendered: String,
    pub cache_hit: bool,
    pub failure: Option<CliError>,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        self.failure.as_ref().map_or(exit::OK, CliError::exit_code)
    }
}

/// Validates `config`, runs its pipeline and renders the report.
pub fn run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let (body, cache_hit, failure) = pipelines::dispatch(config)?;
    let report = Report {
        tool: TOOL_NAME.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        result: body,
    };
    let rendered = render(&report)?;
    Ok(RunOutcome {
        report,
        rendered,
        cache_hit,
        failure,
    })
}
