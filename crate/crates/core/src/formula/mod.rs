//! Formula language: AST, concrete syntax, canonical printer and the
//! propositional tautology check.
//!
//! The AST keeps only `!`, `->`, `N` and `B[C; s]` as primitives. The
//! connectives `&`, `|` and the dual modality `~N` are expanded by the
//! parser (and by the helper constructors below) into that core:
//!
//! ```text
//! a & b   ==  !(a -> !b)
//! a | b   ==  !a -> b
//! ~N a    ==  !N!a
//! ```

mod parse;
mod print;
mod taut;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::Degree;

pub use parse::{parse_coalition, parse_formula, ParseError, ParseErrorKind};
pub use taut::{is_tautology, is_tautology_with_cap, TautologyError, DEFAULT_ATOM_CAP};

/// Agent name: a letter followed by letters, digits or underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AgentId(String);

impl AgentId {
    /// Returns `None` when `name` is not a valid token.
    pub fn new(name: impl Into<String>) -> Option<Self> {
        let name = name.into();
        is_ident(&name).then_some(AgentId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite set of agents. The empty coalition is allowed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coalition(BTreeSet<AgentId>);

impl Coalition {
    pub fn empty() -> Self {
        Coalition(BTreeSet::new())
    }

    /// Builds a coalition from names; panics on an invalid name.
    pub fn of<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Coalition(
            names
                .into_iter()
                .map(|n| {
                    let n = n.into();
                    AgentId::new(n.clone()).unwrap_or_else(|| panic!("invalid agent name `{n}`"))
                })
                .collect(),
        )
    }

    pub fn from_agents(agents: impl IntoIterator<Item = AgentId>) -> Self {
        Coalition(agents.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &AgentId) -> bool {
        self.0.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &AgentId> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Coalition) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        Coalition(self.0.union(&other.0).cloned().collect())
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.as_str())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a Coalition {
    type Item = &'a AgentId;
    type IntoIter = std::collections::btree_set::Iter<'a, AgentId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// Universal modality: true at every play of the game.
    Nec(Box<Formula>),
    /// `B[C; s] φ`: coalition `C` is blameable for `φ` with degree `s`.
    Blame(Coalition, Degree, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn nec(f: Formula) -> Formula {
        Formula::Nec(Box::new(f))
    }

    pub fn blame(c: Coalition, s: Degree, f: Formula) -> Formula {
        Formula::Blame(c, s, Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::implies(a, Formula::not(b)))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::implies(Formula::not(a), b)
    }

    /// `~N f`, i.e. `!N!f`.
    pub fn possible(f: Formula) -> Formula {
        Formula::not(Formula::nec(Formula::not(f)))
    }

    /// Parses the concrete syntax; see [`parse_formula`].
    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        parse_formula(text)
    }

    /// Distinct subformulas, children before parents.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.collect_subformulas(&mut seen, &mut out);
        out
    }

    fn collect_subformulas<'a>(&'a self, seen: &mut HashSet<&'a Formula>, out: &mut Vec<Formula>) {
        if seen.contains(self) {
            return;
        }
        match self {
            Formula::Var(_) => {}
            Formula::Not(a) | Formula::Nec(a) | Formula::Blame(_, _, a) => a.collect_subformulas(seen, out),
            Formula::Implies(a, b) => {
                a.collect_subformulas(seen, out);
                b.collect_subformulas(seen, out);
            }
        }
        seen.insert(self);
        out.push(self.clone());
    }

    /// Proposition names occurring in the formula.
    pub fn propositions(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Var(p) = f {
                out.insert(p.clone());
            }
        });
        out
    }

    /// Agents named in any coalition of the formula.
    pub fn agents(&self) -> BTreeSet<AgentId> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Blame(c, _, _) = f {
                out.extend(c.iter().cloned());
            }
        });
        out
    }

    /// Degree constants appearing in the formula.
    pub fn degrees(&self) -> BTreeSet<Degree> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Blame(_, s, _) = f {
                out.insert(s.clone());
            }
        });
        out
    }

    /// Nesting depth of `N` and `B` operators.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Not(a) => a.modal_depth(),
            Formula::Implies(a, b) => a.modal_depth().max(b.modal_depth()),
            Formula::Nec(a) | Formula::Blame(_, _, a) => 1 + a.modal_depth(),
        }
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Var(_) => {}
            Formula::Not(a) | Formula::Nec(a) | Formula::Blame(_, _, a) => a.visit(f),
            Formula::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print_formula(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// Canonical text of a formula; `parse_formula(&print_formula(f)) == f`.
pub fn print_formula(f: &Formula) -> String {
    print::print_formula(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn subformulas_are_topological_and_deduplicated() {
        assert_eq!(p("p").subformulas(), vec![p("p")]);
        assert_eq!(p("p -> p").subformulas(), vec![p("p"), p("p -> p")]);
        assert_eq!(
            p("B[{a1}; 1] !p").subformulas(),
            vec![p("p"), p("!p"), p("B[{a1}; 1] !p")]
        );
    }

    #[test]
    fn collects_agents_props_and_degrees() {
        let f = p("B[{a1,a2}; 3/2] (q -> N B[{a3}; 1] r)");
        assert_eq!(f.propositions().into_iter().collect::<Vec<_>>(), vec!["q", "r"]);
        assert_eq!(f.agents().len(), 3);
        assert_eq!(f.degrees().len(), 2);
        assert_eq!(f.modal_depth(), 3);
    }

    #[test]
    fn agent_names_are_validated() {
        assert!(AgentId::new("a1").is_some());
        assert!(AgentId::new("agent_7").is_some());
        assert!(AgentId::new("1a").is_none());
        assert!(AgentId::new("").is_none());
        assert!(AgentId::new("a-b").is_none());
    }
}
