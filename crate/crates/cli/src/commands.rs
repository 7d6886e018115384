use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

use novikov_core::checks::{
    check_compatibility, check_left_symmetric, check_lie, check_novikov, check_operator_identity,
};
use novikov_core::constructions::by_name;
use novikov_core::lemmas::check_lemmas;
use novikov_core::series::{derived_series, lower_central_series, upper_central_series};
use novikov_core::solver::{
    prove, verify_certificate, NonexistenceCertificate, Outcome, SolverConfig,
};

use crate::document::{AlgebraDocument, Loaded};
use crate::report::{
    AlgebraLine, CheckLine, ContradictionLine, ProofLine, ResidualLine, RunReport, SeriesLine,
    StageLine, Status,
};

fn read_source(input: &str) -> Result<String> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

/// A document path, `-` for standard input, or a registered name such as `free3:4`.
pub fn load(input: &str) -> Result<Loaded> {
    if input == "-" || Path::new(input).is_file() {
        let text = read_source(input)?;
        let doc = AlgebraDocument::from_json(&text).with_context(|| format!("parsing {input}"))?;
        return doc.decode().with_context(|| format!("decoding {input}"));
    }
    match by_name(input) {
        Ok(a) => Ok(Loaded {
            name: a.name.clone(),
            lie: a.lie().clone(),
            novikov: a.novikov().cloned(),
        }),
        Err(novikov_core::Error::UnknownAlgebra(_)) => {
            bail!("`{input}` is neither a readable file nor a registered algebra name")
        }
        Err(e) => Err(e.into()),
    }
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn algebra_line(a: &Loaded) -> AlgebraLine {
    AlgebraLine {
        name: a.name.clone(),
        dim: a.lie.dim(),
        has_product: a.novikov.is_some(),
    }
}

/// Returns the document text when no output path is given, for printing as is.
pub fn make(report: &mut RunReport, name: &str, output: Option<&Path>) -> Result<Option<String>> {
    let a = by_name(name)?;
    let doc = match a.novikov() {
        Some(s) => AlgebraDocument::from_novikov(&a.name, s),
        None => AlgebraDocument::from_lie(&a.name, a.lie()),
    };
    report.algebra = Some(AlgebraLine {
        name: a.name.clone(),
        dim: a.dim(),
        has_product: a.novikov().is_some(),
    });
    let text = doc.to_json();
    match output {
        Some(path) => {
            write_output(path, &text)?;
            report.written.push(path.display().to_string());
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckSelection {
    pub lie: bool,
    pub lsa: bool,
    pub novikov: bool,
    pub compat: bool,
    pub opid: bool,
    pub lemmas: bool,
}

impl CheckSelection {
    fn none(&self) -> bool {
        !(self.lie || self.lsa || self.novikov || self.compat || self.opid || self.lemmas)
    }

    fn needs_product(&self) -> bool {
        self.lsa || self.novikov || self.compat || self.opid || self.lemmas
    }
}

pub fn check(
    report: &mut RunReport,
    input: &str,
    all: bool,
    mut sel: CheckSelection,
) -> Result<Status> {
    let a = load(input)?;
    report.algebra = Some(algebra_line(&a));
    let everything = all || sel.none();
    if everything {
        sel = CheckSelection {
            lie: true,
            lsa: true,
            novikov: true,
            compat: true,
            opid: true,
            lemmas: true,
        };
    }
    let mut results = Vec::new();
    if sel.lie {
        results.push(check_lie(&a.lie));
    }
    match &a.novikov {
        Some(s) => {
            if sel.lsa {
                results.push(check_left_symmetric(s.product()));
            }
            if sel.novikov {
                results.push(check_novikov(s.product()));
            }
            if sel.compat {
                results.push(check_compatibility(s.product(), s.lie())?);
            }
            if sel.opid {
                results.push(check_operator_identity(s));
            }
            if sel.lemmas {
                results.extend(check_lemmas(s));
            }
        }
        None if everything => report
            .messages
            .push("no product block: only the Lie identity applies".to_string()),
        None if sel.needs_product() => {
            bail!("{} has no product block; product checks need one", a.name)
        }
        None => {}
    }
    report.checks = results.iter().map(|r| CheckLine::new(r, &a.lie)).collect();
    Ok(if results.iter().all(|r| r.passed) {
        Status::Ok
    } else {
        Status::Failed
    })
}

pub fn series(report: &mut RunReport, input: &str) -> Result<Status> {
    let a = load(input)?;
    report.algebra = Some(algebra_line(&a));
    report.series = vec![
        SeriesLine::new("lower-central", &lower_central_series(&a.lie)),
        SeriesLine::new("derived", &derived_series(&a.lie)),
        SeriesLine::new("upper-central", &upper_central_series(&a.lie)),
    ];
    Ok(Status::Ok)
}

pub struct ProveOptions {
    pub config: SolverConfig,
    pub emit_certificate: Option<PathBuf>,
    pub emit_structure: Option<PathBuf>,
}

pub fn prove_command(
    report: &mut RunReport,
    input: &str,
    options: &ProveOptions,
) -> Result<Status> {
    let a = load(input)?;
    report.algebra = Some(algebra_line(&a));
    // only the bracket goes in; a shipped product is never consulted
    let r = prove(&a.lie, &a.name, &options.config)?;
    let mut line = ProofLine {
        grading_zeros: r.grading_zeros,
        stages: r
            .stage_counts()
            .iter()
            .map(|s| StageLine {
                stage: s.stage.clone(),
                free: s.free,
            })
            .collect(),
        outcome: r.outcome.name().to_string(),
        contradiction: None,
        residual: None,
    };
    let status = match &r.outcome {
        Outcome::Certificate(c) => {
            line.contradiction = Some(ContradictionLine {
                source: c.contradiction.source.to_string(),
                constant: novikov_core::scalar::format(&c.contradiction.constant),
            });
            if let Some(path) = &options.emit_certificate {
                write_output(path, &c.to_json())?;
                report.written.push(path.display().to_string());
            }
            Status::Ok
        }
        Outcome::Structure(s) => {
            if let Some(path) = &options.emit_structure {
                write_output(path, &AlgebraDocument::from_novikov(&a.name, s).to_json())?;
                report.written.push(path.display().to_string());
            }
            Status::Ok
        }
        Outcome::Inconclusive(res) => {
            line.residual = Some(ResidualLine {
                quadratics: res.quadratics.len(),
                probe_failure: res.probe_failure.map(|k| k.name().to_string()),
                branches_explored: res.branches_explored,
                branches_refuted: res.branches_refuted,
            });
            Status::Inconclusive
        }
    };
    if options.emit_certificate.is_some() && r.certificate().is_none() {
        report
            .messages
            .push("no certificate produced; nothing written".to_string());
    }
    if options.emit_structure.is_some() && !matches!(r.outcome, Outcome::Structure(_)) {
        report
            .messages
            .push("no structure found; nothing written".to_string());
    }
    report.proof = Some(line);
    Ok(status)
}

pub fn verify_cert(report: &mut RunReport, path: &str, algebra: Option<&str>) -> Result<Status> {
    let text = read_source(path)?;
    let cert =
        NonexistenceCertificate::from_json(&text).with_context(|| format!("parsing {path}"))?;
    let (name, lie) = match algebra {
        Some(input) => {
            let a = load(input)?;
            (a.name, a.lie)
        }
        None => (cert.algebra.clone(), cert.lie.clone()),
    };
    report.algebra = Some(AlgebraLine {
        name,
        dim: lie.dim(),
        has_product: false,
    });
    let ok = verify_certificate(&cert, &lie)?;
    report.messages.push(format!(
        "certificate {}: {} steps, {} = {}",
        if ok { "replays" } else { "does not replay" },
        cert.steps.len(),
        cert.contradiction.source,
        novikov_core::scalar::format(&cert.contradiction.constant)
    ));
    Ok(if ok { Status::Ok } else { Status::Failed })
}
