use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use lmpoly_core::graph::families;
use lmpoly_core::{bethe_tree, Graph};

/// Exactly one graph source.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Edge list: `n;u v;u v;...`.
    #[arg(long)]
    pub edges: Option<String>,

    #[arg(long)]
    pub graph6: Option<String>,

    /// path:n, cycle:n, complete:n, star:n or bethe:d,k.
    #[arg(long)]
    pub family: Option<String>,

    /// File holding an edge list or a graph6 line; `-` reads stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, String> {
        if let Some(e) = &self.edges {
            return Graph::from_edge_list_text(e).map_err(|e| e.to_string());
        }
        if let Some(s) = &self.graph6 {
            return Graph::from_graph6(s.trim()).map_err(|e| e.to_string());
        }
        if let Some(f) = &self.family {
            return family(f);
        }
        let path = self.file.as_ref().expect("clap enforces one source");
        let text = read_source(path)?;
        parse_graph_text(&text)
    }
}

pub fn read_source(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// An edge list when the first data line is a lone vertex count, graph6 otherwise.
pub fn parse_graph_text(text: &str) -> Result<Graph, String> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && *l != ">>graph6<<")
        .ok_or("no graph in input")?;
    let lone_count = first.split(';').next().is_some_and(|t| t.trim().parse::<usize>().is_ok());
    if lone_count {
        Graph::from_edge_list_text(text).map_err(|e| e.to_string())
    } else {
        Graph::from_graph6(first.trim_start_matches(">>graph6<<")).map_err(|e| e.to_string())
    }
}

pub fn family(spec: &str) -> Result<Graph, String> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| format!("family `{spec}` needs the form name:args"))?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("family `{spec}`: {e}")))
        .collect::<Result<_, _>>()?;
    match (name, nums.as_slice()) {
        ("path", [n]) => Ok(families::path(*n)),
        ("cycle", [n]) if *n >= 3 => Ok(families::cycle(*n)),
        ("cycle", [_]) => Err("cycle:n needs n >= 3".into()),
        ("complete", [n]) => Ok(families::complete(*n)),
        ("star", [n]) if *n >= 1 => Ok(families::star(*n)),
        ("star", [_]) => Err("star:n needs n >= 1".into()),
        ("bethe", [d, k]) => bethe_tree(*d, *k).map_err(|e| e.to_string()),
        _ => Err(format!(
            "unknown family `{spec}`; expected path:n, cycle:n, complete:n, star:n or bethe:d,k"
        )),
    }
}
