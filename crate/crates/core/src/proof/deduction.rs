//! Discharging a hypothesis: from `X, φ ⊢ ψ` build `X ⊢ φ -> ψ`.

use thiserror::Error;

use super::{check_derivation, Derivation, Justification, Line, ProofError};
use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("input derivation does not check: {0}")]
    Invalid(ProofError),
    #[error("`{0}` is not among the hypotheses")]
    NotAHypothesis(Formula),
    #[error("transformed derivation does not check: {0}")]
    Output(ProofError),
}

/// Standard line-by-line construction. Each line `ψ` becomes `φ -> ψ`:
/// hypothesis-free-of-`φ` lines are copied and weakened, the hypothesis
/// `φ` itself becomes the tautology `φ -> φ`, and modus ponens steps go
/// through the tautology `(φ -> (A -> B)) -> (φ -> A) -> φ -> B`.
/// Every occurrence of `φ` in the hypothesis list is removed.
pub fn deduction_transform(d: &Derivation, phi: &Formula) -> Result<Derivation, DeductionError> {
    let checked = check_derivation(d).map_err(DeductionError::Invalid)?;
    let discharged: Vec<bool> = d.hypotheses.iter().map(|h| h == phi).collect();
    if !discharged.contains(&true) {
        return Err(DeductionError::NotAHypothesis(phi.clone()));
    }
    let mut remap = Vec::with_capacity(d.hypotheses.len());
    let mut hypotheses = Vec::new();
    for (h, &gone) in d.hypotheses.iter().zip(&discharged) {
        remap.push(if gone { None } else { Some(hypotheses.len()) });
        if !gone {
            hypotheses.push(h.clone());
        }
    }

    let mut out: Vec<Line> = Vec::new();
    let push = |out: &mut Vec<Line>, formula: Formula, justification| {
        out.push(Line::new(formula, justification));
        out.len()
    };
    // 1-based output line numbers of each input line's copy and of `φ -> line`.
    let mut plain: Vec<usize> = Vec::with_capacity(d.lines.len());
    let mut weakened: Vec<usize> = Vec::with_capacity(d.lines.len());
    for (pos, line) in d.lines.iter().enumerate() {
        let psi = &line.formula;
        let uses_phi = checked.supports[pos].iter().any(|&i| discharged[i]);
        let target = Formula::implies(phi.clone(), psi.clone());
        if !uses_phi {
            let justification = match &line.justification {
                Justification::Hypothesis(i) => Justification::Hypothesis(remap[*i].expect("not discharged")),
                Justification::ModusPonens { minor, major } => Justification::ModusPonens {
                    minor: plain[minor - 1],
                    major: plain[major - 1],
                },
                Justification::Necessitation(i) => Justification::Necessitation(plain[i - 1]),
                other => other.clone(),
            };
            let copy = push(&mut out, psi.clone(), justification);
            let weaken = push(
                &mut out,
                Formula::implies(psi.clone(), target.clone()),
                Justification::Tautology,
            );
            plain.push(copy);
            weakened.push(push(
                &mut out,
                target,
                Justification::ModusPonens {
                    minor: copy,
                    major: weaken,
                },
            ));
            continue;
        }
        plain.push(0);
        match &line.justification {
            Justification::Hypothesis(_) => {
                weakened.push(push(&mut out, target, Justification::Tautology));
            }
            Justification::ModusPonens { minor, major } => {
                let a = &d.lines[minor - 1].formula;
                let phi_a = Formula::implies(phi.clone(), a.clone());
                let phi_ab = Formula::implies(phi.clone(), Formula::implies(a.clone(), psi.clone()));
                let rest = Formula::implies(phi_a, target.clone());
                let scaffold = push(
                    &mut out,
                    Formula::implies(phi_ab, rest.clone()),
                    Justification::Tautology,
                );
                let step = push(
                    &mut out,
                    rest,
                    Justification::ModusPonens {
                        minor: weakened[major - 1],
                        major: scaffold,
                    },
                );
                weakened.push(push(
                    &mut out,
                    target,
                    Justification::ModusPonens {
                        minor: weakened[minor - 1],
                        major: step,
                    },
                ));
            }
            // Only hypotheses and modus ponens can carry a hypothesis in
            // their support; the checker guarantees necessitation cannot.
            _ => unreachable!("line with hypothesis support is a hypothesis or modus ponens"),
        }
    }

    let result = Derivation {
        hypotheses,
        lines: out,
        conclusion: Formula::implies(phi.clone(), d.conclusion.clone()),
    };
    check_derivation(&result).map_err(DeductionError::Output)?;
    Ok(result)
}
