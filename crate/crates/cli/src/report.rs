use std::collections::BTreeMap;
use std::fmt::Write as _;

use lmpoly_core::{CheckKind, Verdict, VerificationReport};

/// Multi-line text rendering of one report.
pub fn text(r: &VerificationReport) -> String {
    let mut s = format!("{:<8}{}", r.verdict.to_string(), r.check);
    if let Some(t) = &r.target {
        let _ = write!(s, " ({t})");
    }
    for f in &r.flags {
        let _ = write!(s, " [{f}]");
    }
    s.push('\n');
    if let Some(reason) = &r.reason {
        let _ = writeln!(s, "        reason: {reason}");
    }
    for (k, v) in &r.witnesses {
        let _ = writeln!(s, "        {k}: {v}");
    }
    s
}

pub fn jsonl(r: &VerificationReport) -> String {
    let mut s = serde_json::to_string(r).expect("reports serialize");
    s.push('\n');
    s
}

/// Verdict counts per check.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    counts: BTreeMap<CheckKind, [usize; 3]>,
}

impl Tally {
    pub fn add(&mut self, r: &VerificationReport) {
        let slot = match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Skipped => 2,
        };
        self.counts.entry(r.check).or_default()[slot] += 1;
    }

    pub fn totals(&self) -> [usize; 3] {
        self.counts.values().fold([0; 3], |mut acc, c| {
            for i in 0..3 {
                acc[i] += c[i];
            }
            acc
        })
    }

    pub fn fails(&self) -> usize {
        self.totals()[1]
    }

    pub fn table(&self) -> String {
        let mut s = format!("{:<28}{:>8}{:>8}{:>8}\n", "check", "pass", "fail", "skipped");
        for (k, c) in &self.counts {
            let _ = writeln!(s, "{:<28}{:>8}{:>8}{:>8}", k.name(), c[0], c[1], c[2]);
        }
        let [p, f, k] = self.totals();
        let _ = writeln!(s, "total: {p} pass, {f} fail, {k} skipped");
        s
    }
}
