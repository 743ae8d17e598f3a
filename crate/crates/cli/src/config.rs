//! Flag/config-file plumbing shared by every subcommand. A run is
//! configured by an optional TOML file whose keys mirror the flags;
//! explicit flags override the file, and defaults fill the rest.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use greenlex::FieldSpec;
use serde::{Deserialize, Serialize};

/// Output format of the run artifact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// one JSON document per run
    Json,
    /// per-trial rows for spreadsheet inspection
    Csv,
}

/// Flags common to all subcommands.
#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// Coefficient field: a prime modulus or `Q` for the rationals
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Master seed; mandatory for any randomized run
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of trials
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Write the artifact to this path instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Artifact format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Run even when a theorem hypothesis (e.g. the numerical criterion)
    /// fails
    #[arg(long, global = true)]
    pub exploratory: bool,
    /// TOML configuration file mirroring the flags; flags override it
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Configuration file contents. Every key mirrors a flag of some
/// subcommand; unknown keys are rejected to catch typos.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub field: Option<String>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub format: Option<Format>,
    pub exploratory: Option<bool>,
    // green-check
    pub max_vars: Option<usize>,
    pub max_gen_degree: Option<u32>,
    pub max_degree: Option<u32>,
    pub zero_form: Option<bool>,
    // grd-verify
    pub vars: Option<usize>,
    pub forms: Option<Vec<String>>,
    pub ideal: Option<Vec<String>>,
    pub degree: Option<u32>,
    pub strict: Option<bool>,
    pub preset: Option<String>,
    // lex-restrict
    pub horizon: Option<u32>,
    // eakin-sathaye
    pub allow_small_characteristic: Option<bool>,
    // toric-demo
    pub kind: Option<String>,
    pub params: Option<Vec<usize>>,
    pub exponents: Option<Vec<u32>>,
    pub gens: Option<Vec<String>>,
}

pub fn load_file(path: Option<&Path>) -> Result<FileConfig> {
    match path {
        None => Ok(FileConfig::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading config file {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing config file {}", p.display()))
        }
    }
}

/// Fully resolved common options, echoed verbatim into every report.
#[derive(Clone, Debug)]
pub struct Common {
    pub field: FieldSpec,
    pub field_name: String,
    pub seed: Option<u64>,
    pub trials: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub exploratory: bool,
}

impl Common {
    pub fn resolve(
        args: &CommonArgs,
        file: &FileConfig,
        default_field: &str,
        default_trials: usize,
    ) -> Result<Common> {
        let field_name = args
            .field
            .clone()
            .or_else(|| file.field.clone())
            .unwrap_or_else(|| default_field.to_string());
        Ok(Common {
            field: parse_field(&field_name)?,
            field_name: canonical_field_name(&field_name),
            seed: args.seed.or(file.seed),
            trials: args.trials.or(file.trials).unwrap_or(default_trials),
            out: args.out.clone(),
            format: args.format.or(file.format).unwrap_or(Format::Json),
            exploratory: args.exploratory || file.exploratory.unwrap_or(false),
        })
    }

    /// The seed, which randomized runs must supply.
    pub fn require_seed(&self) -> Result<u64> {
        self.seed
            .context("--seed is required for randomized runs")
    }
}

pub fn parse_field(name: &str) -> Result<FieldSpec> {
    match name.trim() {
        "Q" | "q" => Ok(FieldSpec::Rationals),
        s => {
            let p: u64 = s
                .parse()
                .with_context(|| format!("field must be a prime modulus or Q, got {s:?}"))?;
            Ok(FieldSpec::prime(p).map_err(|e| anyhow::anyhow!("{e}"))?)
        }
    }
}

fn canonical_field_name(name: &str) -> String {
    match name.trim() {
        "Q" | "q" => "Q".to_string(),
        s => s.to_string(),
    }
}

/// Splits a flag value like `"x + y, x - y"` into polynomial sources.
pub fn split_list(s: &str) -> Vec<String> {
    s.split([',', ';'])
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Parses a flag value like `"2,2"` into sizes.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad size {t:?}"))
        })
        .collect()
}

/// Rejects size lists that are empty or contain zeros.
pub fn check_sizes(params: &[usize]) -> Result<()> {
    if params.is_empty() {
        bail!("at least one size parameter is required");
    }
    if params.contains(&0) {
        bail!("size parameters must be positive");
    }
    Ok(())
}
