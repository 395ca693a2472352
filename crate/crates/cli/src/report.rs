//! Report records and rendering.
//!
//! JSON reports are JSON-lines: a header object, one record object per
//! line, then a summary object. TSV reports carry the columns case_id,
//! order, o3_tag, obstructions, verdict. Rendering is byte-deterministic:
//! record order is fixed by the suites and all maps serialize with sorted
//! keys.

use std::path::PathBuf;

use serde::Serialize;

use o3sym_core::invariants::InvariantVector;
use o3sym_core::obstructions::Obstruction;

/// Outcome of one verification case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The group classifies into the O(3) catalog (and passed any
    /// case-specific target checks).
    #[serde(rename = "PASS_CATALOG")]
    PassCatalog,
    /// A blocking obstruction kernel was detected.
    #[serde(rename = "PASS_OBSTRUCTED")]
    PassObstructed,
    /// Neither in the catalog nor obstructed: a counterexample.
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionOut {
    pub spec: String,
    pub witness: Vec<usize>,
    pub placement_ok: bool,
}

impl ObstructionOut {
    pub fn from_obstruction(o: &Obstruction) -> ObstructionOut {
        ObstructionOut {
            spec: o.spec.to_string(),
            witness: o.witness.elements().to_vec(),
            placement_ok: o.placement_ok,
        }
    }
}

/// One verification case in a report.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub case_id: String,
    pub group_dump_ref: Option<String>,
    pub invariants: InvariantVector,
    pub o3_tag: Option<String>,
    pub obstructions: Vec<ObstructionOut>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Tsv => "tsv",
        }
    }
}

/// Suite parameters. `jobs` changes scheduling only, never report bytes.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_n: Option<usize>,
    pub jobs: usize,
    pub format: Format,
    pub order_cap: usize,
    pub dump_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: None,
            jobs: 1,
            format: Format::Json,
            order_cap: o3sym_core::DEFAULT_ORDER_CAP,
            dump_dir: None,
        }
    }
}

/// A rendered suite run.
pub struct Report {
    pub suite: String,
    /// Effective per-suite bound (max n or order bound).
    pub bound: usize,
    pub order_cap: usize,
    pub records: Vec<VerdictRecord>,
}

impl Report {
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for r in &self.records {
            match r.verdict {
                Verdict::PassCatalog => c.0 += 1,
                Verdict::PassObstructed => c.1 += 1,
                Verdict::Fail => c.2 += 1,
            }
        }
        c
    }

    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.verdict == Verdict::Fail)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Tsv => self.render_tsv(),
        }
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        // serde_json maps have sorted keys, so header bytes are stable
        let header = serde_json::json!({
            "suite": self.suite,
            "config": { "bound": self.bound, "order_cap": self.order_cap },
        });
        out.push_str(&header.to_string());
        out.push('\n');
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        let (pc, po, f) = self.counts();
        let summary = serde_json::json!({
            "summary": { "pass_catalog": pc, "pass_obstructed": po, "fail": f },
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    fn render_tsv(&self) -> String {
        let mut out = String::from("case_id\torder\to3_tag\tobstructions\tverdict\n");
        for r in &self.records {
            let obstructions = if r.obstructions.is_empty() {
                "-".to_string()
            } else {
                r.obstructions.iter().map(|o| o.spec.clone()).collect::<Vec<_>>().join(";")
            };
            let verdict = match r.verdict {
                Verdict::PassCatalog => "PASS_CATALOG",
                Verdict::PassObstructed => "PASS_OBSTRUCTED",
                Verdict::Fail => "FAIL",
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.case_id,
                r.invariants.order,
                r.o3_tag.as_deref().unwrap_or("-"),
                obstructions,
                verdict
            ));
        }
        out
    }
}

/// Renders several suite reports back to back and computes the process
/// exit code: 0 when no record failed, 1 otherwise.
pub fn render_all(reports: &[Report], format: Format) -> (String, u8) {
    let mut out = String::new();
    let mut code = 0u8;
    for r in reports {
        out.push_str(&r.render(format));
        if r.has_failures() {
            code = 1;
        }
    }
    (out, code)
}
