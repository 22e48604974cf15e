use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::Args;
use lmpoly_core::verify::run_applicable;
use lmpoly_core::{CheckConfig, CheckKind, Graph, Targets, VerificationReport};
use rayon::prelude::*;

use crate::config::{Config, Format};
use crate::report::{self, Tally};
use crate::verify::Selection;

const BATCH: usize = 512;

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// graph6 file, one graph per line; `-` or omitted reads stdin.
    pub path: Option<PathBuf>,

    #[command(flatten)]
    pub selection: Selection,

    /// Exit non-zero when any line fails to parse.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Default)]
pub struct ScanSummary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub tally: Tally,
}

enum Line {
    Blank,
    Bad(String),
    Done(Vec<VerificationReport>),
}

fn process(line: &str, kinds: &[CheckKind], targets: Targets, cfg: &CheckConfig) -> Line {
    let t = line.trim().trim_start_matches(">>graph6<<");
    if t.is_empty() {
        return Line::Blank;
    }
    match Graph::from_graph6(t) {
        Ok(g) => Line::Done(run_applicable(&g, kinds, targets, cfg)),
        Err(e) => Line::Bad(e.to_string()),
    }
}

fn render(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Jsonl => report::jsonl(r),
        Format::Text => {
            let mut s = format!("{}\t{}\t{}", r.graph, r.verdict, r.check);
            if let Some(t) = &r.target {
                s += &format!("\t{t}");
            }
            for f in &r.flags {
                s += &format!("\t[{f}]");
            }
            s.push('\n');
            s
        }
    }
}

/// Streams reports to `out` and diagnostics plus the summary to `err`.
pub fn run(args: &ScanArgs, cfg: &Config, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool, String> {
    let reader: Box<dyn BufRead> = match &args.path {
        Some(p) if p.as_os_str() != "-" => {
            Box::new(BufReader::new(File::open(p).map_err(|e| format!("{}: {e}", p.display()))?))
        }
        _ => Box::new(BufReader::new(std::io::stdin())),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs())
        .build()
        .map_err(|e| e.to_string())?;
    let kinds = args.selection.kinds();
    let targets = args.selection.targets();
    let check_cfg = cfg.check_config();
    let io = |e: std::io::Error| e.to_string();

    let mut summary = ScanSummary::default();
    let mut lines = reader.lines().enumerate();
    loop {
        let batch: Vec<(usize, String)> = lines
            .by_ref()
            .take(BATCH)
            .map(|(i, l)| l.map(|l| (i + 1, l)))
            .collect::<Result<_, _>>()
            .map_err(io)?;
        if batch.is_empty() {
            break;
        }
        let results: Vec<Line> = pool.install(|| {
            batch
                .par_iter()
                .map(|(_, l)| process(l, &kinds, targets, &check_cfg))
                .collect()
        });
        for ((no, _), res) in batch.iter().zip(results) {
            match res {
                Line::Blank => {}
                Line::Bad(msg) => {
                    summary.parse_errors += 1;
                    writeln!(err, "line {no}: {msg} (skipped)").map_err(io)?;
                }
                Line::Done(reports) => {
                    summary.graphs += 1;
                    for r in &reports {
                        summary.tally.add(r);
                        out.write_all(render(r, cfg.format).as_bytes()).map_err(io)?;
                    }
                }
            }
        }
    }
    out.flush().map_err(io)?;
    writeln!(
        err,
        "scanned {} graphs, {} parse error{} skipped",
        summary.graphs,
        summary.parse_errors,
        if summary.parse_errors == 1 { "" } else { "s" }
    )
    .map_err(io)?;
    err.write_all(summary.tally.table().as_bytes()).map_err(io)?;
    Ok(summary.tally.fails() == 0 && !(args.strict && summary.parse_errors > 0))
}
