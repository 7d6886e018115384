//! One report value per command, rendered either as JSON or as text.

use std::fmt::Write as _;

use serde::Serialize;

use novikov_core::checks::CheckReport;
use novikov_core::series::SeriesReport;
use novikov_core::Algebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Checks passed, or the prover decided the question.
    Ok,
    /// A check failed, a certificate did not replay, or the input was rejected.
    Failed,
    /// The prover could not decide.
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraLine {
    pub name: String,
    pub dim: usize,
    pub has_product: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessLine {
    /// One-based.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessLine>,
}

impl CheckLine {
    /// `basis` renders the witness vectors with the algebra's labels.
    pub fn new(r: &CheckReport, basis: &Algebra) -> Self {
        CheckLine {
            check: r.kind.name().to_string(),
            passed: r.passed,
            witness: r.witness.as_ref().map(|w| WitnessLine {
                indices: w.indices.iter().map(|i| i + 1).collect(),
                lhs: basis.render(&w.lhs),
                rhs: basis.render(&w.rhs),
                note: w.note.clone(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesLine {
    pub series: String,
    pub ranks: Vec<usize>,
    /// Absent when the series stalls.
    pub class: Option<usize>,
}

impl SeriesLine {
    pub fn new(name: &str, r: &SeriesReport) -> Self {
        SeriesLine {
            series: name.to_string(),
            ranks: r.ranks(),
            class: r.class,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageLine {
    pub stage: String,
    pub free: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofLine {
    pub grading_zeros: usize,
    pub stages: Vec<StageLine>,
    /// `certificate`, `structure` or `inconclusive`.
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<ContradictionLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualLine>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContradictionLine {
    pub source: String,
    pub constant: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualLine {
    pub quadratics: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe_failure: Option<String>,
    pub branches_explored: usize,
    pub branches_refuted: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub series: Vec<SeriesLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof: Option<ProofLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub written: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub messages: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            algebra: None,
            checks: Vec::new(),
            series: Vec::new(),
            proof: None,
            written: Vec::new(),
            messages: Vec::new(),
            status: Status::Ok,
            exit_code: 0,
        }
    }

    pub fn finish(mut self, status: Status) -> Self {
        self.status = status;
        self.exit_code = status.exit_code();
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "command: {}", self.command.join(" ")).unwrap();
        if let Some(a) = &self.algebra {
            let kind = if a.has_product {
                "lie + product"
            } else {
                "lie"
            };
            writeln!(w, "algebra: {} (dim {}, {kind})", a.name, a.dim).unwrap();
        }
        for c in &self.checks {
            writeln!(
                w,
                "check {}: {}",
                c.check,
                if c.passed { "pass" } else { "FAIL" }
            )
            .unwrap();
            if let Some(x) = &c.witness {
                let ix: Vec<String> = x.indices.iter().map(ToString::to_string).collect();
                writeln!(
                    w,
                    "  witness ({}): lhs = {}, rhs = {}",
                    ix.join(", "),
                    x.lhs,
                    x.rhs
                )
                .unwrap();
                if let Some(note) = &x.note {
                    writeln!(w, "  note: {note}").unwrap();
                }
            }
        }
        for s in &self.series {
            let ranks: Vec<String> = s.ranks.iter().map(ToString::to_string).collect();
            let class = s.class.map_or("none".to_string(), |c| c.to_string());
            writeln!(w, "{} ranks: {}; class {class}", s.series, ranks.join(" ")).unwrap();
        }
        if let Some(p) = &self.proof {
            writeln!(w, "grading zeros: {}", p.grading_zeros).unwrap();
            for s in &p.stages {
                writeln!(w, "free after {}: {}", s.stage, s.free).unwrap();
            }
            writeln!(w, "outcome: {}", p.outcome).unwrap();
            if let Some(c) = &p.contradiction {
                writeln!(w, "contradiction: {} reduces to {}", c.source, c.constant).unwrap();
            }
            if let Some(r) = &p.residual {
                writeln!(w, "residual quadratics: {}", r.quadratics).unwrap();
                if let Some(f) = &r.probe_failure {
                    writeln!(w, "zero probe fails: {f}").unwrap();
                }
                writeln!(
                    w,
                    "case-split branches: {} explored, {} refuted",
                    r.branches_explored, r.branches_refuted
                )
                .unwrap();
            }
        }
        for path in &self.written {
            writeln!(w, "wrote: {path}").unwrap();
        }
        for m in &self.messages {
            writeln!(w, "{m}").unwrap();
        }
        writeln!(
            w,
            "status: {} (exit {})",
            status_name(self.status),
            self.exit_code
        )
        .unwrap();
        out
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Failed => "failed",
        Status::Inconclusive => "inconclusive",
    }
}
