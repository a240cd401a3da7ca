//! Propositional tautology check with modal subformulas treated as atoms.

use std::collections::HashMap;

use thiserror::Error;

use super::Formula;

pub const DEFAULT_ATOM_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TautologyError {
    #[error("formula has {atoms} propositional atoms, above the cap of {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },
}

/// True iff `f` is a propositional tautology, where every variable and
/// every maximal `N`/`B` subformula is an opaque atom.
pub fn is_tautology(f: &Formula) -> Result<bool, TautologyError> {
    is_tautology_with_cap(f, DEFAULT_ATOM_CAP)
}

pub fn is_tautology_with_cap(f: &Formula, cap: usize) -> Result<bool, TautologyError> {
    let mut atoms: HashMap<&Formula, usize> = HashMap::new();
    collect_atoms(f, &mut atoms);
    let k = atoms.len();
    if k > cap {
        return Err(TautologyError::TooManyAtoms { atoms: k, cap });
    }
    Ok((0u64..1u64 << k).all(|assignment| eval(f, &atoms, assignment)))
}

fn collect_atoms<'a>(f: &'a Formula, atoms: &mut HashMap<&'a Formula, usize>) {
    match f {
        Formula::Not(a) => collect_atoms(a, atoms),
        Formula::Implies(a, b) => {
            collect_atoms(a, atoms);
            collect_atoms(b, atoms);
        }
        Formula::Var(_) | Formula::Nec(_) | Formula::Blame(..) => {
            let next = atoms.len();
            atoms.entry(f).or_insert(next);
        }
    }
}

fn eval(f: &Formula, atoms: &HashMap<&Formula, usize>, assignment: u64) -> bool {
    match f {
        Formula::Not(a) => !eval(a, atoms, assignment),
        Formula::Implies(a, b) => !eval(a, atoms, assignment) || eval(b, atoms, assignment),
        atom => (assignment >> atoms[atom]) & 1 == 1,
    }
}
