//! Finite cost-annotated strategic games.
//!
//! A game fixes a set of agents, a set of actions with nonnegative costs
//! (one of which is a designated zero-cost action), a set of outcomes, a
//! set of plays (complete action profile plus outcome) and a valuation
//! mapping proposition names to sets of plays.

mod figure1;
mod file;
pub(crate) mod generate;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degree::Degree;
use crate::formula::{is_ident, AgentId, Coalition};

pub use figure1::figure1_game;
pub use file::{load_game, save_game};
pub use generate::{generate_game, GameParams};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ActionId(String);

impl ActionId {
    pub fn new(name: impl Into<String>) -> Self {
        ActionId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ActionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ActionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OutcomeId(String);

impl OutcomeId {
    pub fn new(name: impl Into<String>) -> Self {
        OutcomeId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for OutcomeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for OutcomeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub name: ActionId,
    pub cost: Degree,
}

/// A complete action profile together with the outcome it produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Play {
    pub profile: BTreeMap<AgentId, ActionId>,
    pub outcome: OutcomeId,
}

/// Actions assigned to exactly the members of some coalition.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ActionProfile(BTreeMap<AgentId, ActionId>);

impl ActionProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, agent: AgentId, action: ActionId) -> Self {
        self.0.insert(agent, action);
        self
    }

    pub fn insert(&mut self, agent: AgentId, action: ActionId) {
        self.0.insert(agent, action);
    }

    pub fn get(&self, agent: &AgentId) -> Option<&ActionId> {
        self.0.get(agent)
    }

    pub fn domain(&self) -> Coalition {
        Coalition::from_agents(self.0.keys().cloned())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AgentId, &ActionId)> {
        self.0.iter()
    }

    /// Union of two profiles over disjoint domains; `None` if they overlap.
    pub fn disjoint_union(&self, other: &ActionProfile) -> Option<ActionProfile> {
        let mut out = self.clone();
        for (a, d) in other.iter() {
            if out.0.insert(a.clone(), d.clone()).is_some() {
                return None;
            }
        }
        Some(out)
    }
}

impl FromIterator<(AgentId, ActionId)> for ActionProfile {
    fn from_iter<I: IntoIterator<Item = (AgentId, ActionId)>>(iter: I) -> Self {
        ActionProfile(iter.into_iter().collect())
    }
}

impl fmt::Display for ActionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, d)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}:{d}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ActionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Error)]
pub enum GameError {
    #[error("{0} missing")]
    MissingField(&'static str),
    #[error("schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invariant `{invariant}` violated: {detail}")]
    Invariant { invariant: &'static str, detail: String },
    #[error("valuation out of range: proposition `{proposition}` cites play index {index} of {plays}")]
    ValuationOutOfRange {
        proposition: String,
        index: usize,
        plays: usize,
    },
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("agent `{0}` is outside the profile's domain")]
    OutsideDomain(String),
    #[error("invalid generator parameters: {0}")]
    Params(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl GameError {
    fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        GameError::Invariant {
            invariant,
            detail: detail.into(),
        }
    }

    /// Name of the violated invariant, for invariant and range errors.
    pub fn invariant_name(&self) -> Option<&'static str> {
        match self {
            GameError::Invariant { invariant, .. } => Some(invariant),
            GameError::ValuationOutOfRange { .. } => Some("valuation_in_range"),
            GameError::MissingField("zero_action") => Some("zero_action_declared"),
            _ => None,
        }
    }
}

/// Unvalidated components of a game, as read from a file or built by hand.
#[derive(Debug, Clone, Default)]
pub struct GameParts {
    pub agents: Vec<AgentId>,
    pub actions: Vec<Action>,
    pub zero_action: Option<ActionId>,
    pub outcomes: Vec<OutcomeId>,
    pub plays: Vec<Play>,
    pub valuation: BTreeMap<String, BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    agents: Vec<AgentId>,
    actions: Vec<Action>,
    zero_action: ActionId,
    outcomes: Vec<OutcomeId>,
    plays: Vec<Play>,
    valuation: BTreeMap<String, BTreeSet<usize>>,
    agent_index: HashMap<AgentId, usize>,
    action_index: HashMap<ActionId, usize>,
    /// `play_actions[i][k]` is the index of the action agent `k` takes in play `i`.
    play_actions: Vec<Vec<usize>>,
}

impl Game {
    /// Validates `parts` and builds a game.
    ///
    /// Plays form a set: a repeated (profile, outcome) pair is merged into
    /// its first occurrence and valuation indices are renumbered. Merging
    /// fails if the duplicates disagree on some proposition.
    pub fn new(parts: GameParts) -> Result<Game, GameError> {
        let GameParts {
            agents,
            actions,
            zero_action,
            outcomes,
            plays,
            valuation,
        } = parts;

        if agents.is_empty() {
            return Err(GameError::invariant("agents_nonempty", "the game declares no agents"));
        }
        let mut agent_index = HashMap::new();
        for (i, a) in agents.iter().enumerate() {
            if agent_index.insert(a.clone(), i).is_some() {
                return Err(GameError::invariant(
                    "agents_distinct",
                    format!("agent `{a}` declared twice"),
                ));
            }
        }
        if actions.is_empty() {
            return Err(GameError::invariant("actions_nonempty", "the game declares no actions"));
        }
        let mut action_index = HashMap::new();
        for (i, d) in actions.iter().enumerate() {
            if !is_ident(d.name.as_str()) {
                return Err(GameError::invariant(
                    "action_name_token",
                    format!("`{}` is not a valid name", d.name),
                ));
            }
            if action_index.insert(d.name.clone(), i).is_some() {
                return Err(GameError::invariant(
                    "actions_distinct",
                    format!("action `{}` declared twice", d.name),
                ));
            }
        }
        let zero_action = zero_action.ok_or(GameError::MissingField("zero_action"))?;
        let zero = *action_index.get(&zero_action).ok_or_else(|| {
            GameError::invariant(
                "zero_action_declared",
                format!("zero_action `{zero_action}` is not a declared action"),
            )
        })?;
        if !actions[zero].cost.is_zero() {
            return Err(GameError::invariant(
                "zero_action_cost",
                format!("zero_action `{zero_action}` costs {}, expected 0", actions[zero].cost),
            ));
        }
        let outcome_set: BTreeSet<&OutcomeId> = outcomes.iter().collect();
        if outcome_set.len() != outcomes.len() {
            return Err(GameError::invariant(
                "outcomes_distinct",
                "an outcome is declared twice",
            ));
        }
        if plays.is_empty() {
            return Err(GameError::invariant("plays_nonempty", "the game has no plays"));
        }

        for (name, set) in &valuation {
            if !is_ident(name) {
                return Err(GameError::invariant(
                    "proposition_name_token",
                    format!("`{name}` is not a valid proposition name"),
                ));
            }
            if let Some(&index) = set.iter().find(|&&i| i >= plays.len()) {
                return Err(GameError::ValuationOutOfRange {
                    proposition: name.clone(),
                    index,
                    plays: plays.len(),
                });
            }
        }

        let mut play_actions = Vec::with_capacity(plays.len());
        let mut first_index: HashMap<&Play, usize> = HashMap::new();
        // old index -> new index
        let mut renumber = Vec::with_capacity(plays.len());
        let mut kept: Vec<usize> = Vec::new();
        for (i, play) in plays.iter().enumerate() {
            for a in play.profile.keys() {
                if !agent_index.contains_key(a) {
                    return Err(GameError::invariant(
                        "play_agents",
                        format!("play {i} assigns undeclared agent `{a}`"),
                    ));
                }
            }
            let mut row = Vec::with_capacity(agents.len());
            for a in &agents {
                let d = play.profile.get(a).ok_or_else(|| {
                    GameError::invariant("play_agents", format!("play {i} has no action for agent `{a}`"))
                })?;
                let k = *action_index.get(d).ok_or_else(|| {
                    GameError::invariant("play_actions", format!("play {i} uses undeclared action `{d}`"))
                })?;
                row.push(k);
            }
            if !outcome_set.contains(&play.outcome) {
                return Err(GameError::invariant(
                    "play_outcomes",
                    format!("play {i} has undeclared outcome `{}`", play.outcome),
                ));
            }
            match first_index.get(play) {
                Some(&first) => {
                    for (name, set) in &valuation {
                        if set.contains(&first) != set.contains(&i) {
                            return Err(GameError::invariant(
                                "duplicate_plays_agree",
                                format!("plays {first} and {i} are the same play but disagree on `{name}`"),
                            ));
                        }
                    }
                    renumber.push(renumber[first]);
                }
                None => {
                    first_index.insert(play, i);
                    renumber.push(kept.len());
                    kept.push(i);
                    play_actions.push(row);
                }
            }
        }

        let valuation = valuation
            .into_iter()
            .map(|(name, set)| (name, set.into_iter().map(|i| renumber[i]).collect()))
            .collect();
        let plays: Vec<Play> = kept.iter().map(|&i| plays[i].clone()).collect();

        Ok(Game {
            agents,
            actions,
            zero_action,
            outcomes,
            plays,
            valuation,
            agent_index,
            action_index,
            play_actions,
        })
    }

    /// The validated components, suitable for editing and rebuilding.
    pub fn to_parts(&self) -> GameParts {
        GameParts {
            agents: self.agents.clone(),
            actions: self.actions.clone(),
            zero_action: Some(self.zero_action.clone()),
            outcomes: self.outcomes.clone(),
            plays: self.plays.clone(),
            valuation: self.valuation.clone(),
        }
    }

    /// Re-runs every construction check on this game's components.
    pub fn check_invariants(&self) -> Result<(), GameError> {
        let rebuilt = Game::new(self.to_parts())?;
        if rebuilt != *self {
            return Err(GameError::invariant("plays_distinct", "the game holds duplicate plays"));
        }
        Ok(())
    }

    pub fn agents(&self) -> &[AgentId] {
        &self.agents
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    pub fn zero_action(&self) -> &ActionId {
        &self.zero_action
    }

    pub fn outcomes(&self) -> &[OutcomeId] {
        &self.outcomes
    }

    pub fn plays(&self) -> &[Play] {
        &self.plays
    }

    pub fn valuation(&self) -> &BTreeMap<String, BTreeSet<usize>> {
        &self.valuation
    }

    pub fn agent_index(&self, a: &AgentId) -> Option<usize> {
        self.agent_index.get(a).copied()
    }

    pub fn action_index(&self, d: &ActionId) -> Option<usize> {
        self.action_index.get(d).copied()
    }

    pub fn has_agent(&self, a: &AgentId) -> bool {
        self.agent_index.contains_key(a)
    }

    pub fn cost(&self, d: &ActionId) -> Result<&Degree, GameError> {
        self.action_index(d)
            .map(|i| &self.actions[i].cost)
            .ok_or_else(|| GameError::UnknownAction(d.to_string()))
    }

    /// Action index taken by the agent at position `agent` in play `play`.
    pub(crate) fn play_action(&self, play: usize, agent: usize) -> usize {
        self.play_actions[play][agent]
    }

    pub(crate) fn set_valuation(&mut self, valuation: BTreeMap<String, BTreeSet<usize>>) {
        debug_assert!(valuation.values().flatten().all(|&i| i < self.plays.len()));
        self.valuation = valuation;
    }
}

/// Total cost of a coalition profile: the sum of its actions' costs.
pub fn profile_cost(g: &Game, profile: &ActionProfile) -> Result<Degree, GameError> {
    let mut total = Degree::zero();
    for (a, d) in profile.iter() {
        if !g.has_agent(a) {
            return Err(GameError::UnknownAgent(a.to_string()));
        }
        total = &total + g.cost(d)?;
    }
    Ok(total)
}

/// Whether a complete profile and a coalition profile pick the same action
/// for every member of `coalition`. Vacuously true for the empty coalition.
pub fn agrees_on(
    complete: &BTreeMap<AgentId, ActionId>,
    profile: &ActionProfile,
    coalition: &Coalition,
) -> Result<bool, GameError> {
    let mut all = true;
    for a in coalition {
        let left = complete.get(a).ok_or_else(|| GameError::OutsideDomain(a.to_string()))?;
        let right = profile.get(a).ok_or_else(|| GameError::OutsideDomain(a.to_string()))?;
        all &= left == right;
    }
    Ok(all)
}
