use std::num::NonZeroUsize;

use clap::{Args, ValueEnum};
use lmpoly_core::corpus::DEFAULT_SEED;
use lmpoly_core::CheckConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
}

/// Settings shared by every subcommand. Each has an `LMPOLY_*` environment override.
#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Width of reported root intervals and Perron enclosures, in (0, 1).
    #[arg(long, global = true, env = "LMPOLY_TOL", default_value_t = 1e-9, value_parser = parse_tol)]
    pub tol: f64,

    /// Largest order for the exact longest-path search.
    #[arg(long, global = true, env = "LMPOLY_LONGEST_PATH_LIMIT", default_value = "16")]
    pub longest_path_limit: NonZeroUsize,

    /// Largest path-tree that is built.
    #[arg(long, global = true, env = "LMPOLY_PATH_TREE_LIMIT", default_value = "1000000")]
    pub path_tree_limit: NonZeroUsize,

    /// Largest path-tree whose characteristic polynomial is formed.
    #[arg(long, global = true, env = "LMPOLY_CHARPOLY_GATE", default_value = "1500")]
    pub charpoly_gate: NonZeroUsize,

    /// Largest order for brute-force matching enumeration.
    #[arg(long, global = true, env = "LMPOLY_ENUMERATION_LIMIT", default_value = "14")]
    pub enumeration_limit: NonZeroUsize,

    #[arg(long, global = true, env = "LMPOLY_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Worker threads for `scan` (default: available cores).
    #[arg(long, global = true, env = "LMPOLY_JOBS")]
    pub jobs: Option<NonZeroUsize>,

    #[arg(long, global = true, env = "LMPOLY_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t > 0.0 && t < 1.0 {
        Ok(t)
    } else {
        Err(format!("tolerance must lie in (0, 1), got {t}"))
    }
}

impl Config {
    pub fn check_config(&self) -> CheckConfig {
        CheckConfig {
            tol: self.tol,
            longest_path_limit: self.longest_path_limit.get(),
            path_tree_limit: self.path_tree_limit.get(),
            charpoly_gate: self.charpoly_gate.get(),
            ..CheckConfig::default()
        }
    }

    /// Decimal places matching the tolerance.
    pub fn digits(&self) -> usize {
        ((-self.tol.log10()).ceil().max(1.0) as usize).min(30)
    }

    pub fn jobs(&self) -> usize {
        self.jobs
            .map(NonZeroUsize::get)
            .or_else(|| std::thread::available_parallelism().ok().map(NonZeroUsize::get))
            .unwrap_or(1)
    }
}
