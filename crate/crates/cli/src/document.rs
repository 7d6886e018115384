//! The algebra interchange document: basis labels plus one-based structure-constant
//! records with exact rational coefficients.

use std::collections::BTreeSet;

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use novikov_core::scalar::{format, parse};
use novikov_core::{Algebra, NovikovStructure};

pub const SCHEMA: &str = "novikov-algebra";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `"p/q"`, or `"p"` when the denominator is 1.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema: String,
    pub version: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[b_i, b_j] = Σ coeff b_k`, every nonzero ordered pair listed.
    pub bracket: Vec<Entry>,
    /// `b_i · b_j`, present for Novikov structures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<Entry>>,
}

/// What a document decodes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub name: String,
    pub lie: Algebra,
    pub novikov: Option<NovikovStructure>,
}

fn entries(a: &Algebra) -> Vec<Entry> {
    a.entries()
        .map(|(i, j, k, c)| Entry {
            i: i + 1,
            j: j + 1,
            k: k + 1,
            coeff: format(c),
        })
        .collect()
}

fn decode(block: &str, labels: &[String], list: &[Entry]) -> Result<Algebra> {
    let dim = labels.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let at = || format!("{block} entry {} ({}, {}, {})", n + 1, e.i, e.j, e.k);
        for index in [e.i, e.j, e.k] {
            ensure!(
                (1..=dim).contains(&index),
                "{}: index {index} outside 1..={dim}",
                at()
            );
        }
        ensure!(seen.insert((e.i, e.j, e.k)), "{}: duplicate entry", at());
        let c = parse(&e.coeff).with_context(at)?;
        out.push((e.i - 1, e.j - 1, e.k - 1, c));
    }
    Ok(Algebra::from_entries(labels.to_vec(), out)?)
}

impl AlgebraDocument {
    pub fn from_lie(name: &str, lie: &Algebra) -> Self {
        AlgebraDocument {
            schema: SCHEMA.to_string(),
            version: SCHEMA_VERSION,
            name: name.to_string(),
            dim: lie.dim(),
            basis: lie.labels().to_vec(),
            bracket: entries(lie),
            product: None,
        }
    }

    pub fn from_novikov(name: &str, s: &NovikovStructure) -> Self {
        AlgebraDocument {
            product: Some(entries(s.product())),
            ..Self::from_lie(name, s.lie())
        }
    }

    /// Pretty JSON with a trailing newline. Entry order follows the algebra, so the bytes
    /// are a function of the algebra alone.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDocument =
            serde_json::from_str(text).context("malformed algebra document")?;
        if doc.schema != SCHEMA {
            bail!(
                "unknown document schema `{}`, expected `{SCHEMA}`",
                doc.schema
            );
        }
        if doc.version != SCHEMA_VERSION {
            bail!(
                "unsupported document version {}, expected {SCHEMA_VERSION}",
                doc.version
            );
        }
        ensure!(
            doc.basis.len() == doc.dim,
            "dim is {} but {} basis labels are given",
            doc.dim,
            doc.basis.len()
        );
        Ok(doc)
    }

    pub fn decode(&self) -> Result<Loaded> {
        let lie = decode("bracket", &self.basis, &self.bracket)?;
        let novikov = match &self.product {
            None => None,
            Some(list) => {
                let product = decode("product", &self.basis, list)?;
                Some(NovikovStructure::from_parts(lie.clone(), product)?)
            }
        };
        Ok(Loaded {
            name: self.name.clone(),
            lie,
            novikov,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use novikov_core::constructions::by_name;

    #[test]
    fn factory_outputs_round_trip() {
        for name in [
            "cex13",
            "novikov-free3:3",
            "filiform910:6:e",
            "abelian:2",
            "solvt:2",
        ] {
            let a = by_name(name).unwrap();
            let doc = match a.novikov() {
                Some(s) => AlgebraDocument::from_novikov(name, s),
                None => AlgebraDocument::from_lie(name, a.lie()),
            };
            let text = doc.to_json();
            let back = AlgebraDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            let loaded = back.decode().unwrap();
            assert_eq!(&loaded.lie, a.lie());
            assert_eq!(loaded.novikov.as_ref(), a.novikov());
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        let doc = AlgebraDocument::from_lie("h", by_name("free3:2").unwrap().lie());
        let text = doc.to_json();
        let cases = [
            text.replace("\"version\": 1", "\"version\": 2"),
            text.replace("novikov-algebra", "other"),
            text.replace("\"dim\": 5", "\"dim\": 4"),
            text.replacen("\"k\": 3", "\"k\": 9", 1),
            text.replacen("\"coeff\": \"1\"", "\"coeff\": \"0.5\"", 1),
        ];
        for bad in cases {
            assert_ne!(bad, text);
            let result = AlgebraDocument::from_json(&bad).and_then(|d| d.decode());
            assert!(result.is_err(), "accepted {bad}");
        }
        let mut dup = doc.clone();
        dup.bracket.push(dup.bracket[0].clone());
        let err = dup.decode().unwrap_err().to_string();
        assert!(err.contains("duplicate"), "{err}");
    }

    #[test]
    fn errors_name_the_record() {
        let mut doc = AlgebraDocument::from_lie("h", by_name("free3:2").unwrap().lie());
        doc.bracket[2].coeff = "x".into();
        let err = format!("{:#}", doc.decode().unwrap_err());
        assert!(err.contains("bracket entry 3"), "{err}");
    }
}
