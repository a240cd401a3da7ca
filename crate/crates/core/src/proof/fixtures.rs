//! Shipped derivations of the logic's standard lemmas, at concrete sizes.
//!
//! | name           | statement                                                                |
//! |----------------|--------------------------------------------------------------------------|
//! | `lemma1_n2`    | `~NB[{a1};1]q, ~NB[{a2};1]r, q∨r ⊢ B[{a1,a2};2](q∨r)`                    |
//! | `lemma2_n2`    | `N p, N(p -> q) ⊢ N q`                                                   |
//! | `lemma3`       | `⊢ N p -> NN p`                                                          |
//! | `lemma4_inner` | `~NB[{a1};1]q, ~NB[{a2};1]r, N(p -> q∨r), p ⊢ B[{a1,a2};2]p`             |
//! | `lemma4_n2`    | `~NB[{a1};1]q, ~NB[{a2};1]r, N(p -> q∨r) ⊢ N(p -> B[{a1,a2};2]p)`        |

use super::{check_derivation, deduction_transform, Derivation, ProofError};
use crate::formula::Formula;

const SOURCES: [(&str, &str); 5] = [
    ("lemma1_n2", include_str!("../../fixtures/lemma1_n2.json")),
    ("lemma2_n2", include_str!("../../fixtures/lemma2_n2.json")),
    ("lemma3", include_str!("../../fixtures/lemma3.json")),
    ("lemma4_inner", include_str!("../../fixtures/lemma4_inner.json")),
    ("lemma4_n2", include_str!("../../fixtures/lemma4_n2.json")),
];

/// The shipped fixtures, parsed.
pub fn lemma_fixtures() -> Vec<(&'static str, Derivation)> {
    SOURCES
        .iter()
        .map(|(name, text)| {
            let d = Derivation::from_json_str(text).unwrap_or_else(|e| panic!("fixture {name} is malformed: {e}"));
            (*name, d)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct FixtureResult {
    pub name: String,
    pub lines: usize,
    pub outcome: Result<(), String>,
}

#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub results: Vec<FixtureResult>,
}

impl FixtureReport {
    pub fn all_ok(&self) -> bool {
        self.results.iter().all(|r| r.outcome.is_ok())
    }
}

/// Checks every fixture, plus the derivation obtained by discharging the
/// hypothesis `p` from `lemma4_inner`.
pub fn replay_lemma_fixtures() -> FixtureReport {
    let mut results = Vec::new();
    let mut inner = None;
    for (name, d) in lemma_fixtures() {
        let outcome = check_derivation(&d).map(|_| ()).map_err(|e: ProofError| e.to_string());
        results.push(FixtureResult {
            name: name.to_string(),
            lines: d.lines.len(),
            outcome,
        });
        if name == "lemma4_inner" {
            inner = Some(d);
        }
    }
    let inner = inner.expect("lemma4_inner is shipped");
    let discharged = deduction_transform(&inner, &Formula::var("p"));
    results.push(FixtureResult {
        name: "lemma4_inner/discharge p".to_string(),
        lines: discharged.as_ref().map_or(0, |d| d.lines.len()),
        outcome: discharged.map(|_| ()).map_err(|e| e.to_string()),
    });
    FixtureReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    #[test]
    fn all_fixtures_check() {
        let report = replay_lemma_fixtures();
        for r in &report.results {
            assert!(r.outcome.is_ok(), "{}: {:?}", r.name, r.outcome);
        }
        assert_eq!(report.results.len(), 6);
    }

    #[test]
    fn conclusions() {
        let expect = [
            ("lemma1_n2", "B[{a1,a2}; 2](q | r)"),
            ("lemma2_n2", "N q"),
            ("lemma3", "N p -> NN p"),
            ("lemma4_inner", "B[{a1,a2}; 2] p"),
            ("lemma4_n2", "N(p -> B[{a1,a2}; 2] p)"),
        ];
        for ((name, d), (want_name, want)) in lemma_fixtures().into_iter().zip(expect) {
            assert_eq!(name, want_name);
            assert_eq!(d.conclusion, parse_formula(want).unwrap(), "{name}");
        }
    }

    #[test]
    fn discharging_cause_hypothesis() {
        let (_, inner) = lemma_fixtures()
            .into_iter()
            .find(|(n, _)| *n == "lemma4_inner")
            .unwrap();
        let out = deduction_transform(&inner, &Formula::var("p")).unwrap();
        assert_eq!(out.hypotheses.len(), 3);
        assert_eq!(out.conclusion, parse_formula("p -> B[{a1,a2}; 2] p").unwrap());
    }
}
