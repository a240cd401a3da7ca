//! Satisfaction of formulas at plays of a game.
//!
//! Propositions are read off the valuation, `!` and `->` are classical,
//! `N φ` holds iff `φ` holds at every play, and `B[C; s] φ` holds at a play
//! iff `φ` holds there and some profile of `C` costing at most `s` is
//! agreed with only by plays where `φ` fails. A profile that no play agrees
//! with prevents `φ` vacuously.
//!
//! Evaluation works on extensions (the set of plays satisfying a formula),
//! computed bottom-up and cached per [`Evaluator`] session. The prevention
//! search behind `B` is independent of the current play, so it runs once
//! per blame subformula.

mod prevention;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::degree::Degree;
use crate::formula::{Coalition, Formula};
use crate::game::{ActionProfile, Game};

pub use prevention::Prevention;

/// The set of plays at which a formula holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Extension {
    members: Vec<bool>,
}

impl Extension {
    fn empty(n: usize) -> Self {
        Extension {
            members: vec![false; n],
        }
    }

    fn full(n: usize) -> Self {
        Extension { members: vec![true; n] }
    }

    pub fn contains(&self, play: usize) -> bool {
        self.members.get(play).copied().unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// True when every play of the game is a member.
    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    /// Number of plays in the game this extension belongs to.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn to_set(&self) -> BTreeSet<usize> {
        self.iter().collect()
    }

    /// Least play index outside the extension.
    pub fn first_missing(&self) -> Option<usize> {
        self.members.iter().position(|&m| !m)
    }
}

/// Deliberate corruptions of the semantics, used to check that the
/// soundness harness actually detects broken evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticMutation {
    /// `B[C; s] φ` no longer requires `φ` to hold at the current play.
    DropTruthConjunct,
    /// Every action, the zero action included, costs one unit more.
    UniformTax,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Treat propositions missing from the valuation as false everywhere
    /// instead of reporting an error.
    pub lenient: bool,
    pub mutation: Option<SemanticMutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("play index out of range: {index} (game has {plays} plays)")]
    PlayOutOfRange { index: usize, plays: usize },
}

/// Outcome of a blame query at one play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlameVerdict {
    pub holds: bool,
    /// A cheapest preventing profile, when `φ` holds here and one exists.
    pub witness: Option<ActionProfile>,
    /// Least degree at which the coalition is blameable for `φ` here.
    pub minimal_degree: Option<Degree>,
}

/// An evaluation session over one game with its own extension cache.
pub struct Evaluator<'g> {
    game: &'g Game,
    options: EvalOptions,
    cache: HashMap<Formula, Extension>,
    prevention_cache: HashMap<(Coalition, Formula), Option<Prevention>>,
}

impl<'g> Evaluator<'g> {
    pub fn new(game: &'g Game) -> Self {
        Self::with_options(game, EvalOptions::default())
    }

    pub fn with_options(game: &'g Game, options: EvalOptions) -> Self {
        Evaluator {
            game,
            options,
            cache: HashMap::new(),
            prevention_cache: HashMap::new(),
        }
    }

    pub fn game(&self) -> &'g Game {
        self.game
    }

    /// Checks agents and (unless lenient) propositions of `f` against the game.
    pub fn validate(&self, f: &Formula) -> Result<(), EvalError> {
        if let Some(a) = f.agents().into_iter().find(|a| !self.game.has_agent(a)) {
            return Err(EvalError::UnknownAgent(a.to_string()));
        }
        if !self.options.lenient {
            if let Some(p) = f
                .propositions()
                .into_iter()
                .find(|p| !self.game.valuation().contains_key(p))
            {
                return Err(EvalError::UnknownProposition(p));
            }
        }
        Ok(())
    }

    fn validate_coalition(&self, c: &Coalition) -> Result<(), EvalError> {
        match c.iter().find(|a| !self.game.has_agent(a)) {
            Some(a) => Err(EvalError::UnknownAgent(a.to_string())),
            None => Ok(()),
        }
    }

    fn check_play(&self, play: usize) -> Result<(), EvalError> {
        let plays = self.game.plays().len();
        if play >= plays {
            return Err(EvalError::PlayOutOfRange { index: play, plays });
        }
        Ok(())
    }

    pub fn extension(&mut self, f: &Formula) -> Result<Extension, EvalError> {
        self.validate(f)?;
        Ok(self.compute(f))
    }

    pub fn eval(&mut self, play: usize, f: &Formula) -> Result<bool, EvalError> {
        self.check_play(play)?;
        Ok(self.extension(f)?.contains(play))
    }

    /// Cheapest profile of `c` under which every agreeing play falsifies `f`.
    pub fn prevention_cost(&mut self, c: &Coalition, f: &Formula) -> Result<Option<Prevention>, EvalError> {
        self.validate_coalition(c)?;
        self.validate(f)?;
        Ok(self.prevention(c, f))
    }

    pub fn blame_verdict(
        &mut self,
        play: usize,
        c: &Coalition,
        s: &Degree,
        f: &Formula,
    ) -> Result<BlameVerdict, EvalError> {
        self.check_play(play)?;
        self.validate_coalition(c)?;
        self.validate(f)?;
        let here = self.compute(f).contains(play);
        let drop_truth = self.options.mutation == Some(SemanticMutation::DropTruthConjunct);
        let prevention = if here || drop_truth {
            self.prevention(c, f)
        } else {
            None
        };
        let holds = self.blame_holds_at(here, prevention.as_ref(), s);
        let (witness, minimal_degree) = match prevention {
            Some(p) => (Some(p.witness), Some(p.cost)),
            None => (None, None),
        };
        Ok(BlameVerdict {
            holds,
            witness,
            minimal_degree,
        })
    }

    fn blame_holds_at(&self, phi_here: bool, prevention: Option<&Prevention>, s: &Degree) -> bool {
        let truth = phi_here || self.options.mutation == Some(SemanticMutation::DropTruthConjunct);
        truth && prevention.is_some_and(|p| p.cost <= *s)
    }

    fn prevention(&mut self, c: &Coalition, f: &Formula) -> Option<Prevention> {
        let key = (c.clone(), f.clone());
        if let Some(hit) = self.prevention_cache.get(&key) {
            return hit.clone();
        }
        let ext = self.compute(f);
        let tax = self.options.mutation == Some(SemanticMutation::UniformTax);
        let result = prevention::cheapest_preventing_profile(self.game, c, &ext, tax);
        self.prevention_cache.insert(key, result.clone());
        result
    }

    fn compute(&mut self, f: &Formula) -> Extension {
        if let Some(hit) = self.cache.get(f) {
            return hit.clone();
        }
        let n = self.game.plays().len();
        let ext = match f {
            Formula::Var(p) => {
                let mut ext = Extension::empty(n);
                if let Some(set) = self.game.valuation().get(p) {
                    for &i in set {
                        ext.members[i] = true;
                    }
                }
                ext
            }
            Formula::Not(a) => {
                let mut ext = self.compute(a);
                ext.members.iter_mut().for_each(|m| *m = !*m);
                ext
            }
            Formula::Implies(a, b) => {
                let ea = self.compute(a);
                let eb = self.compute(b);
                Extension {
                    members: ea.members.iter().zip(&eb.members).map(|(&x, &y)| !x || y).collect(),
                }
            }
            Formula::Nec(a) => {
                if self.compute(a).is_full() {
                    Extension::full(n)
                } else {
                    Extension::empty(n)
                }
            }
            Formula::Blame(c, s, a) => {
                let ea = self.compute(a);
                let prevention = self.prevention(c, a);
                Extension {
                    members: (0..n)
                        .map(|i| self.blame_holds_at(ea.members[i], prevention.as_ref(), s))
                        .collect(),
                }
            }
        };
        self.cache.insert(f.clone(), ext.clone());
        ext
    }
}

/// Whether `f` holds at play `play` of `g`.
pub fn eval(g: &Game, play: usize, f: &Formula) -> Result<bool, EvalError> {
    Evaluator::new(g).eval(play, f)
}

pub fn extension(g: &Game, f: &Formula) -> Result<Extension, EvalError> {
    Evaluator::new(g).extension(f)
}

pub fn prevention_cost(g: &Game, c: &Coalition, f: &Formula) -> Result<Option<Prevention>, EvalError> {
    Evaluator::new(g).prevention_cost(c, f)
}

pub fn blame_verdict(g: &Game, play: usize, c: &Coalition, s: &Degree, f: &Formula) -> Result<BlameVerdict, EvalError> {
    Evaluator::new(g).blame_verdict(play, c, s, f)
}
