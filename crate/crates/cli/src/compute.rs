use std::io::Write;

use clap::Args;
use lmpoly_core::poly::rational_from_f64;
use lmpoly_core::{
    laplacian_matching_polynomial, lm_bruteforce, matching_bruteforce, matching_polynomial, IntPoly,
    RootSet,
};
use serde_json::{json, Value};

use crate::config::{Config, Format};
use crate::input::GraphInput;

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: GraphInput,

    /// Also print M(S(G), x) for the subdivision S(G).
    #[arg(long)]
    pub subdivision: bool,

    /// Cross-check both polynomials by enumerating matchings.
    #[arg(long)]
    pub oracle: bool,
}

fn root_rows(p: &IntPoly, cfg: &Config) -> Result<Vec<(String, usize)>, String> {
    let rs = RootSet::isolate(p, &rational_from_f64(cfg.tol)).map_err(|e| e.to_string())?;
    Ok(rs
        .roots
        .iter()
        .map(|r| {
            let v = if r.is_exact() {
                r.interval.lo.to_string()
            } else {
                r.decimal(cfg.digits())
            };
            (v, r.multiplicity)
        })
        .collect())
}

/// Writes the report; `Ok(false)` when the enumeration oracle disagrees.
pub fn run(args: &ComputeArgs, cfg: &Config, out: &mut dyn Write) -> Result<bool, String> {
    let g = args.input.load()?;
    let m = matching_polynomial(&g);
    let lm = laplacian_matching_polynomial(&g);
    let roots = root_rows(&lm, cfg)?;
    let sub = args.subdivision.then(|| matching_polynomial(&g.subdivide().result));
    let oracle = if args.oracle {
        let limit = cfg.enumeration_limit.get();
        let bm = matching_bruteforce(&g, limit).map_err(|e| e.to_string())?;
        let blm = lm_bruteforce(&g, limit).map_err(|e| e.to_string())?;
        Some(bm == m && blm == lm)
    } else {
        None
    };

    let text = match cfg.format {
        Format::Jsonl => {
            let mut v = json!({
                "graph": g.to_graph6(),
                "n": g.n(),
                "m": g.m(),
                "matching": m.to_string(),
                "laplacian_matching": lm.to_string(),
                "coefficients": lm.to_decimal_strings(),
                "roots": roots.iter().map(|(v, k)| json!({"value": v, "multiplicity": k})).collect::<Vec<Value>>(),
            });
            if let Some(s) = &sub {
                v["subdivision_matching"] = json!(s.to_string());
            }
            if let Some(ok) = oracle {
                v["oracle_agrees"] = json!(ok);
            }
            format!("{v}\n")
        }
        Format::Text => {
            let mut s = format!("graph {} (n = {}, m = {})\n", g.to_graph6(), g.n(), g.m());
            s += &format!("M(G, x)    = {m}\n");
            s += &format!("LM(G, x)   = {lm}\n");
            if let Some(p) = &sub {
                s += &format!("M(S(G), x) = {p}\n");
            }
            s += "roots of LM(G, x):\n";
            for (v, k) in &roots {
                s += &format!("  {v} (×{k})\n");
            }
            if let Some(ok) = oracle {
                s += &format!("enumeration oracle: {}\n", if ok { "agrees" } else { "DISAGREES" });
            }
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(oracle != Some(false))
}
