//! Nonexistence certificates: serialization and independent replay.
//!
//! A certificate records the Lie algebra, the grading-forced zeros, every elimination step
//! in application order and the constraint that ends in a nonzero constant. Replaying it
//! needs nothing beyond the structure constants: each step is checked against its
//! regenerated source constraint, then the contradiction is recomputed.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::constraints::{grading_zeros, ConstraintId, ConstraintSystem, Family};
use super::elimination::{StageCount, Step};
use super::forms::{AffineForm, QuadraticForm, Unknown};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

pub const CERTIFICATE_FORMAT: &str = "novikov-nonexistence-certificate";
pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub source: ConstraintId,
    /// The source constraint after every substitution: a nonzero constant.
    pub constant: Rational,
}

impl Contradiction {
    /// The pair `(i, j)` of a right-commutation source.
    pub fn pair(&self) -> Option<(usize, usize)> {
        (self.source.family == Family::RightCommutation)
            .then(|| (self.source.indices[0], self.source.indices[1]))
    }

    /// The `(row, column)` entry of a right-commutation source.
    pub fn entry(&self) -> Option<(usize, usize)> {
        (self.source.family == Family::RightCommutation)
            .then(|| (self.source.indices[2], self.source.indices[3]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub algebra: String,
    pub lie: Algebra,
    pub stage_counts: Vec<StageCount>,
    pub forced_zero: Vec<Unknown>,
    pub steps: Vec<Step>,
    pub contradiction: Contradiction,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    i: usize,
    j: usize,
    k: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    dim: usize,
    basis: Vec<String>,
    bracket: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StageDoc {
    stage: String,
    free: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SourceDoc {
    family: Family,
    indices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    unknown: [usize; 3],
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormDoc {
    constant: String,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepDoc {
    source: SourceDoc,
    pivot: [usize; 3],
    form: FormDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ContradictionDoc {
    source: SourceDoc,
    constant: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    format: String,
    version: u32,
    /// Human-readable reminder of the index convention.
    unknowns: String,
    algebra: AlgebraDoc,
    stage_counts: Vec<StageDoc>,
    forced_zero: Vec<[usize; 3]>,
    steps: Vec<StepDoc>,
    contradiction: ContradictionDoc,
}

const UNKNOWNS_NOTE: &str =
    "x(i,j,k) is the coefficient of b_k in b_i * b_j; all indices one-based";

fn source_doc(id: &ConstraintId) -> SourceDoc {
    SourceDoc {
        family: id.family,
        indices: id.indices.iter().map(|i| i + 1).collect(),
    }
}

fn source_from(doc: SourceDoc, dim: usize) -> Result<ConstraintId> {
    if doc.indices.contains(&0) {
        return Err(Error::Certificate(
            "constraint indices are one-based".into(),
        ));
    }
    let id = ConstraintId::new(doc.family, doc.indices.iter().map(|i| i - 1).collect());
    id.validate(dim)?;
    Ok(id)
}

fn unknown_from(u: [usize; 3], dim: usize) -> Result<Unknown> {
    let v = Unknown::from_one_based(u)
        .ok_or_else(|| Error::Certificate(format!("unknown {u:?} is not one-based")))?;
    if v.i >= dim || v.j >= dim || v.k >= dim {
        return Err(Error::Certificate(format!(
            "unknown {u:?} out of range for dimension {dim}"
        )));
    }
    Ok(v)
}

fn form_doc(f: &AffineForm) -> FormDoc {
    FormDoc {
        constant: scalar::format(&f.constant),
        terms: f
            .terms()
            .iter()
            .map(|(u, c)| TermDoc {
                unknown: u.one_based(),
                coeff: scalar::format(c),
            })
            .collect(),
    }
}

fn form_from(doc: FormDoc, dim: usize) -> Result<AffineForm> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    let mut seen = BTreeSet::new();
    for t in doc.terms {
        let u = unknown_from(t.unknown, dim)?;
        let c = scalar::parse(&t.coeff)?;
        if c.is_zero() || !seen.insert(u) {
            return Err(Error::Certificate(format!(
                "form term {u} is zero or repeated"
            )));
        }
        terms.push((u, c));
    }
    Ok(AffineForm::from_terms(scalar::parse(&doc.constant)?, terms))
}

impl NonexistenceCertificate {
    /// Deterministic pretty-printed JSON.
    pub fn to_json(&self) -> String {
        let lie = &self.lie;
        let doc = CertificateDoc {
            format: CERTIFICATE_FORMAT.into(),
            version: CERTIFICATE_VERSION,
            unknowns: UNKNOWNS_NOTE.into(),
            algebra: AlgebraDoc {
                name: self.algebra.clone(),
                dim: lie.dim(),
                basis: lie.labels().to_vec(),
                bracket: lie
                    .entries()
                    .map(|(i, j, k, c)| EntryDoc {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        coeff: scalar::format(c),
                    })
                    .collect(),
            },
            stage_counts: self
                .stage_counts
                .iter()
                .map(|s| StageDoc {
                    stage: s.stage.clone(),
                    free: s.free,
                })
                .collect(),
            forced_zero: self.forced_zero.iter().map(|u| u.one_based()).collect(),
            steps: self
                .steps
                .iter()
                .map(|s| StepDoc {
                    source: source_doc(&s.source),
                    pivot: s.pivot.one_based(),
                    form: form_doc(&s.form),
                })
                .collect(),
            contradiction: ContradictionDoc {
                source: source_doc(&self.contradiction.source),
                constant: scalar::format(&self.contradiction.constant),
            },
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("certificate serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDoc = serde_json::from_str(text)
            .map_err(|e| Error::Certificate(format!("malformed document: {e}")))?;
        if doc.format != CERTIFICATE_FORMAT || doc.version != CERTIFICATE_VERSION {
            return Err(Error::Certificate(format!(
                "unsupported format `{}` version {}",
                doc.format, doc.version
            )));
        }
        let dim = doc.algebra.dim;
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut entries = Vec::new();
        let mut seen = BTreeSet::new();
        for e in doc.algebra.bracket {
            if e.i == 0 || e.j == 0 || e.k == 0 || e.i > dim || e.j > dim || e.k > dim {
                return Err(Error::Certificate(format!(
                    "bracket entry ({}, {}, {}) out of range",
                    e.i, e.j, e.k
                )));
            }
            if !seen.insert((e.i, e.j, e.k)) {
                return Err(Error::Certificate(format!(
                    "duplicate bracket entry ({}, {}, {})",
                    e.i, e.j, e.k
                )));
            }
            entries.push((e.i - 1, e.j - 1, e.k - 1, scalar::parse(&e.coeff)?));
        }
        let lie = Algebra::from_entries(doc.algebra.basis, entries)?;
        let forced_zero = doc
            .forced_zero
            .into_iter()
            .map(|u| unknown_from(u, dim))
            .collect::<Result<Vec<_>>>()?;
        let steps = doc
            .steps
            .into_iter()
            .map(|s| {
                Ok(Step {
                    source: source_from(s.source, dim)?,
                    pivot: unknown_from(s.pivot, dim)?,
                    form: form_from(s.form, dim)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NonexistenceCertificate {
            algebra: doc.algebra.name,
            lie,
            stage_counts: doc
                .stage_counts
                .into_iter()
                .map(|s| StageCount {
                    stage: s.stage,
                    free: s.free,
                })
                .collect(),
            forced_zero,
            steps,
            contradiction: Contradiction {
                source: source_from(doc.contradiction.source, dim)?,
                constant: scalar::parse(&doc.contradiction.constant)?,
            },
        })
    }
}

/// Applies substitutions one after another, keeping every recorded value in the unknowns
/// that are still free.
struct Replay {
    zeros: BTreeSet<Unknown>,
    values: HashMap<Unknown, AffineForm>,
}

impl Replay {
    fn value(&self, u: &Unknown) -> AffineForm {
        if self.zeros.contains(u) {
            AffineForm::zero()
        } else {
            self.values
                .get(u)
                .cloned()
                .unwrap_or_else(|| AffineForm::unknown(*u))
        }
    }

    fn apply(&mut self, pivot: Unknown, form: &AffineForm) {
        for v in self.values.values_mut() {
            v.substitute(&pivot, form);
        }
        self.values.insert(pivot, form.clone());
    }

    fn evaluate(&self, q: &QuadraticForm) -> QuadraticForm {
        let mut out = QuadraticForm::zero();
        out.constant = q.constant.clone();
        for (u, c) in q.linear() {
            out.add_affine(c, &self.value(u));
        }
        for ((u, v), c) in q.quadratic() {
            out.add_product(c, &self.value(u), &self.value(v));
        }
        out
    }
}

/// Replays `cert` against `lie`.
///
/// Errors when the certificate has nothing to replay or was produced for a different
/// algebra. Otherwise returns whether every step follows from its source constraint and
/// the contradiction reduces exactly to the recorded nonzero constant.
pub fn verify_certificate(cert: &NonexistenceCertificate, lie: &Algebra) -> Result<bool> {
    if cert.steps.is_empty() && cert.forced_zero.is_empty() {
        return Err(Error::Certificate("no substitutions to replay".into()));
    }
    if cert.lie.dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            argument: "certificate algebra",
            expected: lie.dim(),
            found: cert.lie.dim(),
        });
    }
    if !cert.lie.entries().eq(lie.entries()) {
        return Err(Error::Certificate(
            "structure constants differ from the given algebra".into(),
        ));
    }
    let allowed = grading_zeros(lie)?;
    if cert.forced_zero.iter().any(|u| !allowed.contains(u)) {
        return Ok(false);
    }
    let system = ConstraintSystem::new(lie);
    let mut replay = Replay {
        zeros: cert.forced_zero.iter().copied().collect(),
        values: HashMap::new(),
    };
    for step in &cert.steps {
        if step.form.terms().contains_key(&step.pivot) {
            return Ok(false);
        }
        let reduced = replay.evaluate(&system.raw(&step.source)?);
        let Some(row) = reduced.to_affine() else {
            return Ok(false);
        };
        let scale = row.coefficient(&step.pivot);
        if scale.is_zero() {
            return Ok(false);
        }
        let expected = AffineForm::unknown(step.pivot)
            .sub(&step.form)
            .scale(&scale);
        if row != expected {
            return Ok(false);
        }
        replay.apply(step.pivot, &step.form);
    }
    let last = replay.evaluate(&system.raw(&cert.contradiction.source)?);
    Ok(last.is_contradiction() && last.constant == cert.contradiction.constant)
}
