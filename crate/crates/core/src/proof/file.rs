//! JSON derivation documents.
//!
//! ```json
//! {
//!   "hypotheses": ["N p", "N(p -> q)"],
//!   "lines": [
//!     {"formula": "p -> (p -> q) -> q", "rule": "taut"},
//!     {"formula": "N(p -> q) -> N p -> N q", "rule": "axiom:Distributivity",
//!      "args": {"phi": "p", "psi": "q"}},
//!     {"formula": "N p", "rule": "hyp:0"},
//!     {"formula": "N p -> N q", "rule": "mp:1,2"}
//!   ],
//!   "conclusion": "N q"
//! }
//! ```
//!
//! `conclusion` may be omitted, in which case the last line is the
//! conclusion.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Derivation, Justification, Line};
use crate::degree::Degree;
use crate::formula::{parse_coalition, parse_formula, Formula, ParseError};
use crate::schema::{AxiomSchema, Bindings};

#[derive(Debug, Error)]
pub enum DerivationFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed derivation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("{location}: {error}")]
    Formula { location: String, error: ParseError },
    #[error("line {line}: unknown rule `{rule}`")]
    Rule { line: usize, rule: String },
    #[error("line {line}: {message}")]
    Args { line: usize, message: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivationDoc {
    #[serde(default)]
    hypotheses: Vec<String>,
    lines: Vec<LineDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conclusion: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineDoc {
    formula: String,
    rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    args: Option<ArgsDoc>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArgsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    psi: Option<String>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    d: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<Degree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<Degree>,
}

fn formula_at(text: &str, location: impl FnOnce() -> String) -> Result<Formula, DerivationFileError> {
    parse_formula(text).map_err(|error| DerivationFileError::Formula {
        location: location(),
        error,
    })
}

fn parse_rule(line: usize, rule: &str, args: Option<ArgsDoc>) -> Result<Justification, DerivationFileError> {
    let bad = || DerivationFileError::Rule {
        line,
        rule: rule.to_string(),
    };
    let index = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let justification = match rule.split_once(':') {
        None if rule == "taut" => Justification::Tautology,
        Some(("axiom", name)) => {
            let schema: AxiomSchema = name.parse().map_err(|_| bad())?;
            let bindings = args.map(|a| parse_args(line, a)).transpose()?;
            return Ok(Justification::Axiom { schema, bindings });
        }
        Some(("hyp", i)) => Justification::Hypothesis(index(i)?),
        Some(("nec", i)) => Justification::Necessitation(index(i)?),
        Some(("mp", pair)) => {
            let (i, j) = pair.split_once(',').ok_or_else(bad)?;
            Justification::ModusPonens {
                minor: index(i)?,
                major: index(j)?,
            }
        }
        _ => return Err(bad()),
    };
    if args.is_some() {
        return Err(DerivationFileError::Args {
            line,
            message: format!("rule `{rule}` takes no args"),
        });
    }
    Ok(justification)
}

fn parse_args(line: usize, a: ArgsDoc) -> Result<Bindings, DerivationFileError> {
    let formula = |text: Option<String>, slot: &str| {
        text.map(|t| formula_at(&t, || format!("line {line}, args.{slot}")))
            .transpose()
    };
    let coalition = |text: Option<String>| {
        text.map(|t| {
            parse_coalition(&t).map_err(|e| DerivationFileError::Args {
                line,
                message: format!("bad coalition `{t}`: {e}"),
            })
        })
        .transpose()
    };
    Ok(Bindings {
        phi: formula(a.phi, "phi")?,
        psi: formula(a.psi, "psi")?,
        c: coalition(a.c)?,
        d: coalition(a.d)?,
        s: a.s,
        t: a.t,
    })
}

impl Derivation {
    pub fn from_json_str(text: &str) -> Result<Derivation, DerivationFileError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: DerivationDoc = serde_path_to_error::deserialize(de).map_err(|e| DerivationFileError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        let hypotheses = doc
            .hypotheses
            .iter()
            .enumerate()
            .map(|(i, h)| formula_at(h, || format!("hypothesis {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut lines = Vec::with_capacity(doc.lines.len());
        for (pos, l) in doc.lines.into_iter().enumerate() {
            let k = pos + 1;
            let formula = formula_at(&l.formula, || format!("line {k}"))?;
            let justification = parse_rule(k, &l.rule, l.args)?;
            lines.push(Line::new(formula, justification));
        }
        let conclusion = match doc.conclusion {
            Some(c) => formula_at(&c, || "conclusion".to_string())?,
            None => match lines.last() {
                Some(l) => l.formula.clone(),
                None => {
                    return Err(DerivationFileError::Schema {
                        path: "lines".into(),
                        message: "no lines and no conclusion".into(),
                    })
                }
            },
        };
        Ok(Derivation {
            hypotheses,
            lines,
            conclusion,
        })
    }

    pub fn to_json_string(&self) -> String {
        let doc = DerivationDoc {
            hypotheses: self.hypotheses.iter().map(Formula::to_string).collect(),
            lines: self
                .lines
                .iter()
                .map(|l| LineDoc {
                    formula: l.formula.to_string(),
                    rule: l.justification.to_string(),
                    args: match &l.justification {
                        Justification::Axiom { bindings: Some(b), .. } => Some(ArgsDoc {
                            phi: b.phi.as_ref().map(Formula::to_string),
                            psi: b.psi.as_ref().map(Formula::to_string),
                            c: b.c.as_ref().map(|c| c.to_string()),
                            d: b.d.as_ref().map(|d| d.to_string()),
                            s: b.s.clone(),
                            t: b.t.clone(),
                        }),
                        _ => None,
                    },
                })
                .collect(),
            conclusion: Some(self.conclusion.to_string()),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("derivation serializes");
        out.push('\n');
        out
    }
}

pub fn load_derivation(path: impl AsRef<Path>) -> Result<Derivation, DerivationFileError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DerivationFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Derivation::from_json_str(&text)
}
