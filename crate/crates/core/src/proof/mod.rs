//! Hilbert-style derivations: checking, the deduction transformation and
//! replayable lemma fixtures.
//!
//! Lines are numbered from 1; hypotheses are indexed from 0. Necessitation
//! may only be applied to *theorem lines*, lines whose support contains no
//! hypothesis. This keeps the deduction theorem admissible.

mod deduction;
mod file;
mod fixtures;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::{is_tautology, Formula, TautologyError};
use crate::schema::{instantiate, match_schema, AxiomSchema, Bindings, SchemaError};

pub use deduction::{deduction_transform, DeductionError};
pub use file::{load_derivation, DerivationFileError};
pub use fixtures::{lemma_fixtures, replay_lemma_fixtures, FixtureReport, FixtureResult};

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Justification {
    Tautology,
    /// With bindings, the line must equal their instantiation; without,
    /// the line must match the schema.
    Axiom {
        schema: AxiomSchema,
        bindings: Option<Bindings>,
    },
    /// Index into the hypothesis list.
    Hypothesis(usize),
    /// Line `major` must be `minor -> this`.
    ModusPonens {
        minor: usize,
        major: usize,
    },
    Necessitation(usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Tautology => write!(f, "taut"),
            Justification::Axiom { schema, .. } => write!(f, "axiom:{schema}"),
            Justification::Hypothesis(i) => write!(f, "hyp:{i}"),
            Justification::ModusPonens { minor, major } => write!(f, "mp:{minor},{major}"),
            Justification::Necessitation(i) => write!(f, "nec:{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub formula: Formula,
    pub justification: Justification,
}

impl Line {
    pub fn new(formula: Formula, justification: Justification) -> Line {
        Line { formula, justification }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub hypotheses: Vec<Formula>,
    pub lines: Vec<Line>,
    pub conclusion: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofErrorKind {
    #[error("derivation has no lines")]
    Empty,
    #[error("bad reference: {0}")]
    BadReference(String),
    #[error("formula mismatch")]
    FormulaMismatch,
    #[error("not a tautology")]
    NotATautology,
    #[error(transparent)]
    Tautology(#[from] TautologyError),
    #[error("not an instance of {0}")]
    NotAnInstance(AxiomSchema),
    #[error("incomplete bindings: {0}")]
    Bindings(String),
    #[error("side-condition failure: {schema} requires {condition}")]
    SideCondition {
        schema: AxiomSchema,
        condition: &'static str,
    },
    #[error("necessitation-over-hypothesis")]
    NecessitationOverHypothesis,
    #[error("conclusion mismatch")]
    ConclusionMismatch,
}

/// A rejected derivation: the first offending line (1-based) and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ProofError {
    pub line: usize,
    pub kind: ProofErrorKind,
}

/// A derivation that passed [`check_derivation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckedDerivation {
    /// Hypothesis indices each line depends on.
    pub supports: Vec<BTreeSet<usize>>,
}

impl CheckedDerivation {
    /// Whether 1-based line `k` depends on no hypothesis.
    pub fn is_theorem_line(&self, k: usize) -> bool {
        self.supports[k - 1].is_empty()
    }
}

pub fn check_derivation(d: &Derivation) -> Result<CheckedDerivation, ProofError> {
    if d.lines.is_empty() {
        return Err(ProofError {
            line: 0,
            kind: ProofErrorKind::Empty,
        });
    }
    let mut supports: Vec<BTreeSet<usize>> = Vec::with_capacity(d.lines.len());
    for (pos, line) in d.lines.iter().enumerate() {
        let k = pos + 1;
        let fail = |kind| Err(ProofError { line: k, kind });
        let earlier = |i: usize| -> Result<usize, ProofError> {
            if i == 0 || i >= k {
                Err(ProofError {
                    line: k,
                    kind: ProofErrorKind::BadReference(format!("line {i} does not precede line {k}")),
                })
            } else {
                Ok(i - 1)
            }
        };
        let support = match &line.justification {
            Justification::Tautology => match is_tautology(&line.formula) {
                Ok(true) => BTreeSet::new(),
                Ok(false) => return fail(ProofErrorKind::NotATautology),
                Err(e) => return fail(e.into()),
            },
            Justification::Axiom { schema, bindings } => {
                if let Err(kind) = check_axiom(*schema, bindings.as_ref(), &line.formula) {
                    return fail(kind);
                }
                BTreeSet::new()
            }
            Justification::Hypothesis(i) => {
                let Some(h) = d.hypotheses.get(*i) else {
                    return fail(ProofErrorKind::BadReference(format!(
                        "hypothesis {i} does not exist ({} given)",
                        d.hypotheses.len()
                    )));
                };
                if *h != line.formula {
                    return fail(ProofErrorKind::FormulaMismatch);
                }
                BTreeSet::from([*i])
            }
            Justification::ModusPonens { minor, major } => {
                let (a, b) = (earlier(*minor)?, earlier(*major)?);
                match &d.lines[b].formula {
                    Formula::Implies(x, y) if **x == d.lines[a].formula && **y == line.formula => {}
                    _ => return fail(ProofErrorKind::FormulaMismatch),
                }
                supports[a].union(&supports[b]).copied().collect()
            }
            Justification::Necessitation(i) => {
                let a = earlier(*i)?;
                match &line.formula {
                    Formula::Nec(x) if **x == d.lines[a].formula => {}
                    _ => return fail(ProofErrorKind::FormulaMismatch),
                }
                if !supports[a].is_empty() {
                    return fail(ProofErrorKind::NecessitationOverHypothesis);
                }
                BTreeSet::new()
            }
        };
        supports.push(support);
    }
    if d.lines.last().map(|l| &l.formula) != Some(&d.conclusion) {
        return Err(ProofError {
            line: d.lines.len(),
            kind: ProofErrorKind::ConclusionMismatch,
        });
    }
    Ok(CheckedDerivation { supports })
}

fn check_axiom(schema: AxiomSchema, bindings: Option<&Bindings>, f: &Formula) -> Result<(), ProofErrorKind> {
    let from_schema = |e: SchemaError| match e {
        SchemaError::SideCondition { schema, condition } => ProofErrorKind::SideCondition { schema, condition },
        SchemaError::MissingBinding { .. } => ProofErrorKind::Bindings(e.to_string()),
        _ => ProofErrorKind::NotAnInstance(schema),
    };
    match bindings {
        Some(b) => {
            let expected = instantiate(schema, b).map_err(from_schema)?;
            if expected != *f {
                return Err(ProofErrorKind::FormulaMismatch);
            }
            Ok(())
        }
        None => match_schema(schema, f).map(|_| ()).map_err(from_schema),
    }
}
