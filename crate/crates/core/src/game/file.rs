//! JSON game documents.
//!
//! ```json
//! {
//!   "agents": ["a1", "a2"],
//!   "actions": [{"name": "help", "cost": "1000"}, {"name": "ignore", "cost": "0"}],
//!   "zero_action": "ignore",
//!   "outcomes": ["alive", "dead"],
//!   "plays": [{"profile": {"a1": "ignore", "a2": "help"}, "outcome": "alive"}],
//!   "valuation": {"alive": [0]}
//! }
//! ```
//!
//! Costs are written as strings (`"25/2"`, `"12.5"`, `"3"`) so they stay
//! exact; plain JSON integers are accepted on input.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Action, ActionId, Game, GameError, GameParts, OutcomeId, Play};
use crate::degree::Degree;
use crate::formula::AgentId;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    agents: Vec<AgentId>,
    actions: Vec<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero_action: Option<ActionId>,
    outcomes: Vec<OutcomeId>,
    plays: Vec<PlayDoc>,
    #[serde(default)]
    valuation: BTreeMap<String, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionDoc {
    name: ActionId,
    cost: Degree,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlayDoc {
    profile: BTreeMap<AgentId, ActionId>,
    outcome: OutcomeId,
}

impl Game {
    pub fn from_json_str(text: &str) -> Result<Game, GameError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: GameDoc = serde_path_to_error::deserialize(de).map_err(|e| GameError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        Game::new(GameParts {
            agents: doc.agents,
            actions: doc
                .actions
                .into_iter()
                .map(|a| Action {
                    name: a.name,
                    cost: a.cost,
                })
                .collect(),
            zero_action: doc.zero_action,
            outcomes: doc.outcomes,
            plays: doc
                .plays
                .into_iter()
                .map(|p| Play {
                    profile: p.profile,
                    outcome: p.outcome,
                })
                .collect(),
            valuation: doc
                .valuation
                .into_iter()
                .map(|(k, v)| (k, v.into_iter().collect::<BTreeSet<_>>()))
                .collect(),
        })
    }

    pub fn to_json_string(&self) -> String {
        let doc = GameDoc {
            agents: self.agents().to_vec(),
            actions: self
                .actions()
                .iter()
                .map(|a| ActionDoc {
                    name: a.name.clone(),
                    cost: a.cost.clone(),
                })
                .collect(),
            zero_action: Some(self.zero_action().clone()),
            outcomes: self.outcomes().to_vec(),
            plays: self
                .plays()
                .iter()
                .map(|p| PlayDoc {
                    profile: p.profile.clone(),
                    outcome: p.outcome.clone(),
                })
                .collect(),
            valuation: self
                .valuation()
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().copied().collect()))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("game documents always serialize");
        s.push('\n');
        s
    }
}

pub fn load_game(path: impl AsRef<Path>) -> Result<Game, GameError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| GameError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Game::from_json_str(&text)
}

pub fn save_game(g: &Game, path: impl AsRef<Path>) -> Result<(), GameError> {
    let path = path.as_ref();
    fs::write(path, g.to_json_string()).map_err(|source| GameError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::figure1_game;

    #[test]
    fn figure1_round_trips_through_text() {
        let g = figure1_game();
        let back = Game::from_json_str(&g.to_json_string()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn missing_zero_action() {
        let text = r#"{"agents":["a"],"actions":[{"name":"d","cost":"0"}],
            "outcomes":["o"],"plays":[{"profile":{"a":"d"},"outcome":"o"}]}"#;
        assert_eq!(
            Game::from_json_str(text).unwrap_err().to_string(),
            "zero_action missing"
        );
    }

    #[test]
    fn schema_errors_carry_a_path() {
        let text = r#"{"agents":["a"],"actions":[{"name":"d","cost":"-1"}],"zero_action":"d",
            "outcomes":["o"],"plays":[{"profile":{"a":"d"},"outcome":"o"}]}"#;
        match Game::from_json_str(text).unwrap_err() {
            GameError::Schema { path, .. } => assert_eq!(path, "actions[0].cost"),
            other => panic!("unexpected {other}"),
        }
        let text = r#"{"agents":["a"],"actions":[],"zero_action":"d","outcomes":["o"],"plays":[],"extra":1}"#;
        assert!(matches!(Game::from_json_str(text), Err(GameError::Schema { .. })));
    }

    #[test]
    fn valuation_index_out_of_range() {
        let mut doc: serde_json::Value = serde_json::from_str(&figure1_game().to_json_string()).unwrap();
        doc["valuation"]["dead"] = serde_json::json!([0, 9]);
        let err = Game::from_json_str(&doc.to_string()).unwrap_err();
        assert!(err.to_string().starts_with("valuation out of range"), "{err}");
    }
}
