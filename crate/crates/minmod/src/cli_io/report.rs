//! Result and statistics serialization: the JSON solve report, the
//! diff-friendly text rendering, and the bench table.
//!
//! The JSON schema is stable — exactly the keys `mode`, `models`,
//! `count`, `stats{leaves, nodes, max_depth, candidates}`, `wall_ms` —
//! because scripts depend on it.  Text output lists each model as its
//! space-separated sorted atom names, one per line, followed by a
//! `models: K` trailer.

use std::fmt::Write as _;

use serde::Serialize;

use crate::engine::{BranchStats, Enumeration};
use crate::theory::Symbols;

/// The result of one solve run, ready to serialize.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    /// `minimal`, `stable`, or `answer`.
    pub mode: String,
    /// Each model as its sorted atom names; the list itself is sorted
    /// lexicographically.
    pub models: Vec<Vec<String>>,
    /// `models.len()`, for consumers that skip the list.
    pub count: usize,
    /// Branching-tree statistics from the engine.
    pub stats: ReportStats,
    /// Engine wall time in milliseconds.
    pub wall_ms: u64,
    /// FNV-1a fingerprint of the input text; not part of the JSON
    /// schema, surfaced only by the text stats block.
    #[serde(skip)]
    pub fingerprint: String,
}

/// The stable serialized view of [`BranchStats`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReportStats {
    /// Leaves of the branching tree, dead ends included.
    pub leaves: u64,
    /// All tree nodes visited.
    pub nodes: u64,
    /// Deepest branch, in literals added.
    pub max_depth: u32,
    /// Distinct candidate models the tree emitted.
    pub candidates: u64,
}

impl From<&BranchStats> for ReportStats {
    fn from(s: &BranchStats) -> ReportStats {
        ReportStats {
            leaves: s.leaves,
            nodes: s.nodes,
            max_depth: s.max_depth,
            candidates: s.candidates_after_dedup,
        }
    }
}

impl SolveReport {
    /// Assemble a report from an engine run.
    pub fn new(
        mode: &str,
        e: &Enumeration,
        symbols: &Symbols,
        wall_ms: u64,
        fingerprint: String,
    ) -> SolveReport {
        let mut models: Vec<Vec<String>> = e
            .models
            .iter()
            .map(|m| {
                let mut names: Vec<String> =
                    m.iter().map(|&a| symbols.name(a).to_string()).collect();
                names.sort_unstable();
                names
            })
            .collect();
        models.sort_unstable();
        SolveReport {
            mode: mode.to_string(),
            count: models.len(),
            models,
            stats: ReportStats::from(&e.stats),
            wall_ms,
            fingerprint,
        }
    }

    /// The stable JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// The golden-file-friendly text form; `with_stats` appends the
    /// tree statistics and the input fingerprint after the trailer.
    pub fn to_text(&self, with_stats: bool) -> String {
        let mut out = String::new();
        for m in &self.models {
            out.push_str(&m.join(" "));
            out.push('\n');
        }
        writeln!(out, "models: {}", self.count).unwrap();
        if with_stats {
            writeln!(out, "leaves: {}", self.stats.leaves).unwrap();
            writeln!(out, "nodes: {}", self.stats.nodes).unwrap();
            writeln!(out, "max depth: {}", self.stats.max_depth).unwrap();
            writeln!(out, "candidates: {}", self.stats.candidates).unwrap();
            writeln!(out, "input: {}", self.fingerprint).unwrap();
        }
        out
    }
}

/// One line of the bench table.
#[derive(Clone, Debug)]
pub struct BenchRow {
    /// Family label: `E`, `F`, or `random`.
    pub family: String,
    /// The swept parameter (atoms for `E`, components for `F`, atoms
    /// for `random`).
    pub param: u32,
    /// Atom count of the built instance.
    pub n: u32,
    /// Models found.
    pub models: u64,
    /// Branching-tree leaves.
    pub leaves: u64,
    /// The applicable leaf bound for this instance.
    pub bound: f64,
    /// Best engine wall time over the repetitions, in milliseconds.
    pub wall_ms: u64,
}

/// Render bench rows as CSV.
pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,param,n,models,leaves,bound,wall_ms\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.1},{}",
            r.family, r.param, r.n, r.models, r.leaves, r.bound, r.wall_ms
        )
        .unwrap();
    }
    out
}

/// Render bench rows as an aligned text table.
pub fn bench_text(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<8} {:>6} {:>4} {:>10} {:>10} {:>14} {:>8}\n",
        "family", "param", "n", "models", "leaves", "bound", "wall_ms"
    );
    for r in rows {
        writeln!(
            out,
            "{:<8} {:>6} {:>4} {:>10} {:>10} {:>14.1} {:>8}",
            r.family, r.param, r.n, r.models, r.leaves, r.bound, r.wall_ms
        )
        .unwrap();
    }
    out
}

/// 64-bit FNV-1a of the input text, as fixed-width hex.
pub fn fingerprint(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{min_mod, EngineOptions};
    use crate::generators::{gen_f, GenMode};
    use crate::instance::Instance;

    fn sample() -> SolveReport {
        let Instance::Cnf { theory, symbols } = gen_f(2, 1, GenMode::Cnf).unwrap() else {
            unreachable!()
        };
        let e = min_mod(&theory, &EngineOptions::default());
        SolveReport::new("minimal", &e, &symbols, 7, fingerprint("sample"))
    }

    #[test]
    fn json_schema_is_exact() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["count", "mode", "models", "stats", "wall_ms"]);
        let mut stats: Vec<&str> =
            obj["stats"].as_object().unwrap().keys().map(String::as_str).collect();
        stats.sort_unstable();
        assert_eq!(stats, ["candidates", "leaves", "max_depth", "nodes"]);
        assert_eq!(obj["count"], 3);
        assert_eq!(obj["mode"], "minimal");
        assert_eq!(obj["models"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn models_are_name_sorted() {
        let r = sample();
        assert_eq!(
            r.models,
            [
                ["x1_1", "x1_2"],
                ["x1_1", "x1_3"],
                ["x1_2", "x1_3"],
            ]
        );
        let mut sorted = r.models.clone();
        sorted.sort();
        assert_eq!(r.models, sorted);
    }

    #[test]
    fn text_form_is_line_oriented() {
        let r = sample();
        assert_eq!(
            r.to_text(false),
            "x1_1 x1_2\nx1_1 x1_3\nx1_2 x1_3\nmodels: 3\n"
        );
        let with = r.to_text(true);
        assert!(with.contains("leaves: 3\n"));
        assert!(with.contains(&format!("input: {}\n", fingerprint("sample"))));
    }

    #[test]
    fn bench_renderings() {
        let rows = vec![BenchRow {
            family: "F".into(),
            param: 3,
            n: 9,
            models: 27,
            leaves: 27,
            bound: 27.0,
            wall_ms: 1,
        }];
        let csv = bench_csv(&rows);
        assert_eq!(
            csv,
            "family,param,n,models,leaves,bound,wall_ms\nF,3,9,27,27,27.0,1\n"
        );
        let text = bench_text(&rows);
        assert!(text.starts_with("family"));
        assert!(text.contains("27.0"));
    }

    #[test]
    fn fingerprint_is_stable() {
        assert_eq!(fingerprint(""), "cbf29ce484222325");
        assert_eq!(fingerprint("a"), fingerprint("a"));
        assert_ne!(fingerprint("a"), fingerprint("b"));
    }
}
