use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one check. Failures always carry a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails { witness: Value },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fails { .. })
    }

    /// `Holds` when `ok`, otherwise a failure with the witness produced by `witness`.
    pub fn from_bool(ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails { witness: witness() }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Supporting data, e.g. the odd bond showing a set is not orthogonal to `B`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

/// Result of an experiment. Every numeric series has one entry per radius in `radii`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub experiment: String,
    pub parameters: BTreeMap<String, Value>,
    pub radii: Vec<usize>,
    pub checks: Vec<Check>,
    pub series: BTreeMap<String, Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    pub fn new(experiment: &str) -> Self {
        Report {
            experiment: experiment.to_string(),
            parameters: BTreeMap::new(),
            radii: Vec::new(),
            checks: Vec::new(),
            series: BTreeMap::new(),
            note: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            verdict,
            detail: None,
        });
        self
    }

    pub fn check_with(
        &mut self,
        name: impl Into<String>,
        verdict: Verdict,
        detail: Value,
    ) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            verdict,
            detail: Some(detail),
        });
        self
    }

    pub fn push_series(&mut self, name: &str, value: i64) {
        self.series.entry(name.to_string()).or_default().push(value);
    }

    pub fn series(&self, name: &str) -> &[i64] {
        self.series.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict.is_fail())
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Holds)
    }

    /// Series whose length differs from the radii list; empty for a well-formed report.
    pub fn malformed_series(&self) -> Vec<&str> {
        self.series
            .iter()
            .filter(|(_, v)| v.len() != self.radii.len())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }

    /// One line per check: `<status> <name>`, with the witness for failures.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let line = match &c.verdict {
                Verdict::Holds => format!("holds        {}", c.name),
                Verdict::Fails { witness } => {
                    format!("FAILS        {}  witness: {witness}", c.name)
                }
                Verdict::Inconclusive { reason } => format!("inconclusive {}  ({reason})", c.name),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

pub(crate) fn non_decreasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

pub(crate) fn strictly_increasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}
