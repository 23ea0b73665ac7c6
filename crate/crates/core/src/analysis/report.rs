use std::collections::BTreeMap;
use std::fmt::Write;

use crate::lattice::Cell;

/// Cells listed per section in serialized reports; totals are always exact.
pub const MAX_LISTED_CELLS: usize = 100;

/// Outcome of checking one claim against a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, String>,
    passed: bool,
    counterexamples: Vec<Cell>,
    pub counts: BTreeMap<String, u64>,
    /// Cells worth reporting that do not fail the claim (the informational
    /// direction of a one-sided check).
    pub observations: Vec<Cell>,
}

impl VerificationReport {
    pub fn new(claim_id: &str) -> VerificationReport {
        VerificationReport {
            claim_id: claim_id.to_string(),
            parameters: BTreeMap::new(),
            passed: true,
            counterexamples: Vec::new(),
            counts: BTreeMap::new(),
            observations: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn fail(&mut self, cell: Cell) {
        self.counterexamples.push(cell);
        self.passed = false;
    }

    /// Sorts and de-duplicates the cell lists.
    pub(crate) fn finish(mut self) -> Self {
        self.counterexamples.sort_unstable();
        self.counterexamples.dedup();
        self.observations.sort_unstable();
        self.observations.dedup();
        self
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn counterexamples(&self) -> &[Cell] {
        &self.counterexamples
    }

    /// Text form:
    ///
    /// ```text
    /// [claim symmetry]
    /// param generation = 64
    /// param lattice = square
    /// passed = true
    /// count live_cells = 11541
    /// counterexamples = 0
    /// observations = 0
    /// ```
    ///
    /// followed by up to 100 `counterexample <cell>` and `observation <cell>`
    /// lines each.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "[claim {}]", self.claim_id).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "param {k} = {v}").unwrap();
        }
        writeln!(out, "passed = {}", self.passed).unwrap();
        for (k, v) in &self.counts {
            writeln!(out, "count {k} = {v}").unwrap();
        }
        writeln!(out, "counterexamples = {}", self.counterexamples.len()).unwrap();
        writeln!(out, "observations = {}", self.observations.len()).unwrap();
        for c in self.counterexamples.iter().take(MAX_LISTED_CELLS) {
            writeln!(out, "counterexample {c}").unwrap();
        }
        for c in self.observations.iter().take(MAX_LISTED_CELLS) {
            writeln!(out, "observation {c}").unwrap();
        }
        out
    }

    /// One-line summary for terminals.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{} {} [{}] counterexamples={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim_id,
            params.join(" "),
            self.counterexamples.len()
        )
    }
}

/// Reports separated by blank lines.
pub fn write_reports(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .map(VerificationReport::to_text)
        .collect::<Vec<_>>()
        .join("\n")
}
