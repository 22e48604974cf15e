use std::io::Write;

use clap::{Args, ValueEnum};
use lmpoly_core::corpus::{all_labeled_graphs, connected_classes, random_connected_graph, random_graph, random_tree, rng};

use crate::config::Config;
use crate::input::family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// One graph per isomorphism class of connected graphs (order <= 8).
    Connected,
    /// Every labeled graph (order <= 6).
    Labeled,
    /// Seeded G(n, 1/2) samples.
    Random,
    /// Seeded connected G(n, 1/2) samples.
    RandomConnected,
    /// Seeded uniform labeled trees.
    Trees,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum, required_unless_present = "family")]
    pub kind: Option<Kind>,

    /// Number of vertices.
    #[arg(long, short = 'n', required_unless_present = "family")]
    pub order: Option<usize>,

    /// Number of samples for the random kinds.
    #[arg(long, default_value_t = 100)]
    pub count: usize,

    /// Emit one named family member instead.
    #[arg(long, conflicts_with = "kind")]
    pub family: Option<String>,
}

/// Writes graph6 lines.
pub fn run(args: &GenerateArgs, cfg: &Config, out: &mut dyn Write) -> Result<bool, String> {
    let io = |e: std::io::Error| e.to_string();
    if let Some(f) = &args.family {
        writeln!(out, "{}", family(f)?.to_graph6()).map_err(io)?;
        return Ok(true);
    }
    let (kind, n) = (args.kind.expect("clap requires it"), args.order.expect("clap requires it"));
    let mut r = rng(cfg.seed);
    let graphs: Box<dyn Iterator<Item = lmpoly_core::Graph>> = match kind {
        Kind::Connected if (1..=8).contains(&n) => Box::new(connected_classes(n).into_iter()),
        Kind::Connected => return Err("connected classes are available for 1 <= n <= 8".into()),
        Kind::Labeled if n <= 6 => Box::new(all_labeled_graphs(n)),
        Kind::Labeled => return Err("labeled enumeration is limited to n <= 6".into()),
        Kind::Random => Box::new((0..args.count).map(move |_| random_graph(n, 0.5, &mut r))),
        Kind::RandomConnected if n >= 1 => Box::new((0..args.count).map(move |_| random_connected_graph(n, &mut r))),
        Kind::RandomConnected => return Err("connected samples need n >= 1".into()),
        Kind::Trees if n >= 1 => Box::new((0..args.count).map(move |_| random_tree(n, &mut r))),
        Kind::Trees => return Err("trees need n >= 1".into()),
    };
    for g in graphs {
        writeln!(out, "{}", g.to_graph6()).map_err(io)?;
    }
    Ok(true)
}
