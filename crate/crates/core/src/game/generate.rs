//! Seeded random games for property tests.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Action, ActionId, Game, GameError, GameParts, OutcomeId, Play};
use crate::degree::Degree;
use crate::formula::AgentId;

#[derive(Debug, Clone)]
pub struct GameParams {
    pub n_agents: usize,
    pub n_actions: usize,
    pub n_outcomes: usize,
    pub max_plays: usize,
    /// Costs for the non-zero actions are drawn from here; must contain 0.
    pub cost_pool: Vec<Degree>,
    pub propositions: Vec<String>,
}

impl Default for GameParams {
    fn default() -> Self {
        GameParams {
            n_agents: 2,
            n_actions: 2,
            n_outcomes: 2,
            max_plays: 6,
            cost_pool: vec![0.into(), 1.into(), 2.into()],
            propositions: vec!["p".into(), "q".into()],
        }
    }
}

/// Builds a random game; identical `(params, seed)` give identical games.
///
/// Agents are `a1..`, actions `d0..` with `d0` the zero action, outcomes
/// `o1..`. The play set is a uniformly drawn subset of all
/// (profile, outcome) pairs, of uniformly drawn size in `1..=max_plays`;
/// each proposition holds at each play with probability 1/2.
pub fn generate_game(params: &GameParams, seed: u64) -> Result<Game, GameError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with(params, &mut rng)
}

pub(crate) fn generate_with(params: &GameParams, rng: &mut impl Rng) -> Result<Game, GameError> {
    if params.cost_pool.is_empty() {
        return Err(GameError::Params("empty cost_pool".into()));
    }
    if !params.cost_pool.iter().any(Degree::is_zero) {
        return Err(GameError::Params("cost_pool must contain 0".into()));
    }
    if params.n_agents == 0 || params.n_actions == 0 || params.n_outcomes == 0 || params.max_plays == 0 {
        return Err(GameError::Params(
            "n_agents, n_actions, n_outcomes and max_plays must be >= 1".into(),
        ));
    }
    let total = u32::try_from(params.n_agents)
        .ok()
        .and_then(|n| params.n_actions.checked_pow(n))
        .and_then(|p| p.checked_mul(params.n_outcomes))
        .ok_or_else(|| GameError::Params("profile space too large".into()))?;

    let agents: Vec<AgentId> = (1..=params.n_agents)
        .map(|i| AgentId::new(format!("a{i}")).expect("generated name"))
        .collect();
    let actions: Vec<Action> = (0..params.n_actions)
        .map(|i| Action {
            name: ActionId::new(format!("d{i}")),
            cost: if i == 0 {
                Degree::zero()
            } else {
                params.cost_pool[rng.gen_range(0..params.cost_pool.len())].clone()
            },
        })
        .collect();
    let outcomes: Vec<OutcomeId> = (1..=params.n_outcomes)
        .map(|i| OutcomeId::new(format!("o{i}")))
        .collect();

    let k = rng.gen_range(1..=params.max_plays.min(total));
    let mut chosen = index::sample(rng, total, k).into_vec();
    chosen.sort_unstable();
    let plays: Vec<Play> = chosen
        .into_iter()
        .map(|mut code| {
            let outcome = outcomes[code % params.n_outcomes].clone();
            code /= params.n_outcomes;
            let mut profile = BTreeMap::new();
            for a in agents.iter().rev() {
                profile.insert(a.clone(), actions[code % params.n_actions].name.clone());
                code /= params.n_actions;
            }
            Play { profile, outcome }
        })
        .collect();

    let valuation = params
        .propositions
        .iter()
        .map(|p| {
            let set: BTreeSet<usize> = (0..plays.len()).filter(|_| rng.gen_bool(0.5)).collect();
            (p.clone(), set)
        })
        .collect();

    Game::new(GameParts {
        agents,
        zero_action: Some(actions[0].name.clone()),
        actions,
        outcomes,
        plays,
        valuation,
    })
}
