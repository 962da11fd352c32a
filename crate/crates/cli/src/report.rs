//! Verdicts, dimension tables and their two renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

pub const TOOL: &str = "liecyclic";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictLine {
    pub name: String,
    pub ok: bool,
    /// Informational verdicts never affect the exit code.
    pub required: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub source: String,
    pub seed: u64,
    pub verdicts: Vec<VerdictLine>,
    /// Dimensions indexed by degree.
    pub tables: BTreeMap<String, Vec<usize>>,
    /// Exact values as `p/q` strings, and other named facts.
    pub values: BTreeMap<String, String>,
    /// Free text printed after the tables, e.g. matrix blocks.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub body: String,
}

impl Report {
    pub fn new(command: &str, source: &str, seed: u64) -> Self {
        Self {
            tool: TOOL,
            version: VERSION,
            command: command.to_string(),
            source: source.to_string(),
            seed,
            verdicts: Vec::new(),
            tables: BTreeMap::new(),
            values: BTreeMap::new(),
            body: String::new(),
        }
    }

    pub fn require(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.verdicts.push(VerdictLine { name: name.into(), ok, required: true, detail: detail.into() });
    }

    pub fn inform(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.verdicts.push(VerdictLine { name: name.into(), ok, required: false, detail: detail.into() });
    }

    pub fn table(&mut self, name: &str, dims: Vec<usize>) {
        self.tables.insert(name.into(), dims);
    }

    pub fn value(&mut self, name: &str, v: impl Into<String>) {
        self.values.insert(name.into(), v.into());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().filter(|v| v.required).all(|v| v.ok)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}  source={}  seed={}", self.tool, self.version, self.command, self.source, self.seed);
        let width = self.verdicts.iter().map(|v| v.name.chars().count()).max().unwrap_or(0).max(7);
        if !self.verdicts.is_empty() {
            let _ = writeln!(s, "{:width$}  result", "verdict");
            for v in &self.verdicts {
                let result = match (v.ok, v.required) {
                    (true, _) => "ok",
                    (false, true) => "FAIL",
                    (false, false) => "no",
                };
                let _ = write!(s, "{:width$}  {result}", v.name);
                if !v.detail.is_empty() {
                    let _ = write!(s, "  ({})", v.detail);
                }
                s.push('\n');
            }
        }
        for (name, dims) in &self.tables {
            let cells: Vec<String> = dims.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "{name}: {}", cells.join(" "));
        }
        for (name, v) in &self.values {
            let _ = writeln!(s, "{name}: {v}");
        }
        s.push_str(&self.body);
        s
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
