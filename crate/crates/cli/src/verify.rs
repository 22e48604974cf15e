use std::collections::HashSet;
use std::io::Write;

use clap::Args;
use lmpoly_core::verify::run_applicable;
use lmpoly_core::{CheckKind, Targets};

use crate::config::{Config, Format};
use crate::input::GraphInput;
use crate::report::{self, Tally};

/// Checker selection shared by `verify` and `scan`.
#[derive(Debug, Clone, Args)]
pub struct Selection {
    /// Check to run (repeatable; default: every applicable check).
    #[arg(long = "check", value_name = "NAME", value_parser = parse_check)]
    pub checks: Vec<CheckKind>,

    /// Run edge-targeted checks on every edge instead of the first.
    #[arg(long)]
    pub all_edges: bool,

    /// Run the path-tree check from every root instead of vertex 0.
    #[arg(long)]
    pub all_roots: bool,
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown check `{s}`; expected one of {}", names.join(", "))
    })
}

impl Selection {
    pub fn kinds(&self) -> Vec<CheckKind> {
        if self.checks.is_empty() {
            CheckKind::ALL.to_vec()
        } else {
            let mut seen = HashSet::new();
            self.checks.iter().copied().filter(|k| seen.insert(*k)).collect()
        }
    }

    pub fn targets(&self) -> Targets {
        Targets {
            all_edges: self.all_edges,
            all_roots: self.all_roots,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphInput,

    #[command(flatten)]
    pub selection: Selection,
}

/// Writes every report; `Ok(false)` when some check failed.
pub fn run(args: &VerifyArgs, cfg: &Config, out: &mut dyn Write) -> Result<bool, String> {
    let g = args.input.load()?;
    let check_cfg = cfg.check_config();
    let mut tally = Tally::default();
    let mut text = String::new();
    if cfg.format == Format::Text {
        text += &format!("graph {} (n = {}, m = {})\n", g.to_graph6(), g.n(), g.m());
    }
    for kind in args.selection.kinds() {
        let reports = run_applicable(&g, &[kind], args.selection.targets(), &check_cfg);
        if reports.is_empty() && cfg.format == Format::Text {
            text += &format!("{:<8}{kind} (not applicable to this graph)\n", "n/a");
        }
        for r in &reports {
            tally.add(r);
            text += &match cfg.format {
                Format::Text => report::text(r),
                Format::Jsonl => report::jsonl(r),
            };
        }
    }
    if cfg.format == Format::Text {
        let [p, f, k] = tally.totals();
        text += &format!("summary: {p} pass, {f} fail, {k} skipped\n");
    }
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(tally.fails() == 0)
}
