use std::collections::BTreeSet;

use super::{Action, ActionId, Game, GameParts, OutcomeId, Play};
use crate::degree::Degree;
use crate::formula::AgentId;

/// The bystander example: three passers-by who can `help` (cost 1000) or
/// `ignore` (cost 0, the zero action). The victim dies only if neither
/// `a1` nor `a2` helps; `a3` arrives too late to matter.
///
/// Plays are listed in the order of the table below, so play `0` is
/// `(ignore, ignore, ignore) -> dead`.
///
/// | a1     | a2     | a3     | outcome |
/// |--------|--------|--------|---------|
/// | ignore | ignore | ignore | dead    |
/// | ignore | ignore | help   | dead    |
/// | ignore | help   | ignore | alive   |
/// | ignore | help   | help   | alive   |
/// | help   | ignore | ignore | alive   |
/// | help   | ignore | help   | alive   |
/// | help   | help   | ignore | alive   |
/// | help   | help   | help   | alive   |
///
/// Propositions: `dead`, `alive`, and `a2helps_implies_alive` (true where
/// `a2` does not help or the outcome is `alive`).
pub fn figure1_game() -> Game {
    let agents: Vec<AgentId> = ["a1", "a2", "a3"]
        .iter()
        .map(|n| AgentId::new(*n).expect("static name"))
        .collect();
    let help = ActionId::new("help");
    let ignore = ActionId::new("ignore");
    let alive = OutcomeId::new("alive");
    let dead = OutcomeId::new("dead");

    let mut plays = Vec::new();
    for bits in 0..8u8 {
        let acts: Vec<&ActionId> = (0..3)
            .map(|k| if bits >> (2 - k) & 1 == 1 { &help } else { &ignore })
            .collect();
        let saved = *acts[0] == help || *acts[1] == help;
        plays.push(Play {
            profile: agents.iter().cloned().zip(acts.into_iter().cloned()).collect(),
            outcome: if saved { alive.clone() } else { dead.clone() },
        });
    }

    let select = |pred: &dyn Fn(&Play) -> bool| -> BTreeSet<usize> {
        plays
            .iter()
            .enumerate()
            .filter(|(_, p)| pred(p))
            .map(|(i, _)| i)
            .collect()
    };
    let a2 = agents[1].clone();
    let valuation = [
        ("dead".to_string(), select(&|p| p.outcome == dead)),
        ("alive".to_string(), select(&|p| p.outcome == alive)),
        (
            "a2helps_implies_alive".to_string(),
            select(&|p| p.profile[&a2] != help || p.outcome == alive),
        ),
    ]
    .into_iter()
    .collect();

    Game::new(GameParts {
        agents,
        actions: vec![
            Action {
                name: help.clone(),
                cost: Degree::from_integer(1000),
            },
            Action {
                name: ignore.clone(),
                cost: Degree::zero(),
            },
        ],
        zero_action: Some(ignore),
        outcomes: vec![alive, dead],
        plays,
        valuation,
    })
    .expect("the built-in example is a valid game")
}
