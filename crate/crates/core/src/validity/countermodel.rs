//! Bounded exhaustive search for a game and play falsifying a formula.
//!
//! The search is deterministic. Games are enumerated by number of agents,
//! number of actions, action costs, number of outcomes, play set (by size,
//! then lexicographically) and finally valuation. Non-zero action costs are
//! enumerated as non-decreasing sequences: renaming actions cannot change
//! the truth of a formula, which never mentions actions.
//!
//! A countermodel found here refutes validity. Exhausting the bounds only
//! says that no countermodel exists *within the bounds*.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::degree::Degree;
use crate::formula::{AgentId, Formula};
use crate::game::{Action, ActionId, Game, GameParts, OutcomeId, Play};
use crate::semantics::{eval, Evaluator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_agents: usize,
    pub max_actions: usize,
    pub max_outcomes: usize,
    pub max_plays: usize,
    /// Candidate costs for non-zero actions.
    pub degree_pool: Vec<Degree>,
    /// Maximum number of (game, valuation) candidates examined.
    pub node_budget: u64,
}

impl SearchBounds {
    pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

    pub fn for_formula(f: &Formula) -> SearchBounds {
        SearchBounds {
            max_agents: 2,
            max_actions: 2,
            max_outcomes: 2,
            max_plays: 4,
            degree_pool: default_degree_pool(f),
            node_budget: Self::DEFAULT_NODE_BUDGET,
        }
    }
}

/// The degree constants of `f`, 0, and every sum of two of them not
/// exceeding the largest constant.
pub fn default_degree_pool(f: &Formula) -> Vec<Degree> {
    let mut pool: BTreeSet<Degree> = f.degrees();
    pool.insert(Degree::zero());
    let max = pool.iter().next_back().cloned().unwrap_or_else(Degree::zero);
    let base: Vec<Degree> = pool.iter().cloned().collect();
    for (i, x) in base.iter().enumerate() {
        for y in &base[i..] {
            let sum = x + y;
            if sum <= max {
                pool.insert(sum);
            }
        }
    }
    pool.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search bounds: {0}")]
    InvalidBounds(String),
    #[error("node budget of {budget} exhausted before the search space was covered")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone)]
pub struct Countermodel {
    pub game: Game,
    /// A play where the formula is false.
    pub play: usize,
    /// Candidates examined up to and including this one.
    pub nodes: u64,
}

/// Searches the bounded space for a play falsifying `f`.
///
/// Returns `Ok(None)` when the bounded space holds no countermodel.
pub fn find_countermodel(f: &Formula, bounds: &SearchBounds) -> Result<Option<Countermodel>, SearchError> {
    let f_agents: Vec<AgentId> = f.agents().into_iter().collect();
    let props: Vec<String> = f.propositions().into_iter().collect();
    validate(f, &f_agents, bounds)?;

    let mut pool = bounds.degree_pool.clone();
    pool.sort();
    pool.dedup();

    let fillers = filler_agents(&f_agents, bounds.max_agents);
    let mut nodes = 0u64;
    for n_agents in f_agents.len().max(1)..=bounds.max_agents {
        let mut agents = f_agents.clone();
        agents.extend(fillers.iter().take(n_agents - f_agents.len()).cloned());
        for n_actions in 1..=bounds.max_actions {
            let Some(n_profiles) = u32::try_from(n_agents).ok().and_then(|n| n_actions.checked_pow(n)) else {
                return Err(SearchError::InvalidBounds("profile space overflows".into()));
            };
            let mut cost_idx = vec![0usize; n_actions - 1];
            loop {
                let actions = make_actions(&cost_idx, &pool);
                for n_outcomes in 1..=bounds.max_outcomes {
                    let n_pairs = n_profiles * n_outcomes;
                    for size in 1..=bounds.max_plays.min(n_pairs) {
                        let mut combo: Vec<usize> = (0..size).collect();
                        loop {
                            let plays = combo
                                .iter()
                                .map(|&pair| decode_play(pair, &agents, &actions, n_outcomes))
                                .collect();
                            let parts = GameParts {
                                agents: agents.clone(),
                                actions: actions.clone(),
                                zero_action: Some(actions[0].name.clone()),
                                outcomes: (1..=n_outcomes).map(|o| OutcomeId::new(format!("o{o}"))).collect(),
                                plays,
                                valuation: BTreeMap::new(),
                            };
                            let mut game = Game::new(parts).expect("enumerated games are well formed");
                            if let Some(found) = try_valuations(f, &props, &mut game, size, &mut nodes, bounds)? {
                                return Ok(Some(found));
                            }
                            if !next_combination(&mut combo, n_pairs) {
                                break;
                            }
                        }
                    }
                }
                if !next_multiset(&mut cost_idx, pool.len()) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

fn validate(f: &Formula, f_agents: &[AgentId], bounds: &SearchBounds) -> Result<(), SearchError> {
    let bad = |m: String| Err(SearchError::InvalidBounds(m));
    if bounds.max_agents == 0 || bounds.max_actions == 0 || bounds.max_outcomes == 0 || bounds.max_plays == 0 {
        return bad("all size bounds must be at least 1".into());
    }
    if f_agents.len() > bounds.max_agents {
        return bad(format!(
            "formula mentions {} agents but max_agents is {}",
            f_agents.len(),
            bounds.max_agents
        ));
    }
    if !bounds.degree_pool.iter().any(Degree::is_zero) {
        return bad("degree pool must contain 0".into());
    }
    if let Some(missing) = f.degrees().into_iter().find(|s| !bounds.degree_pool.contains(s)) {
        return bad(format!("degree pool lacks the formula constant {missing}"));
    }
    Ok(())
}

fn try_valuations(
    f: &Formula,
    props: &[String],
    game: &mut Game,
    size: usize,
    nodes: &mut u64,
    bounds: &SearchBounds,
) -> Result<Option<Countermodel>, SearchError> {
    let bits = size * props.len();
    let total: u64 = 1u64
        .checked_shl(bits as u32)
        .filter(|_| bits < 64)
        .ok_or_else(|| SearchError::InvalidBounds("valuation space overflows".into()))?;
    for code in 0..total {
        *nodes += 1;
        if *nodes > bounds.node_budget {
            return Err(SearchError::BudgetExceeded {
                budget: bounds.node_budget,
            });
        }
        let valuation = props
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let set = (0..size).filter(|i| (code >> (j * size + i)) & 1 == 1).collect();
                (p.clone(), set)
            })
            .collect();
        game.set_valuation(valuation);
        let ext = Evaluator::new(game)
            .extension(f)
            .expect("vocabulary covered by construction");
        if let Some(play) = ext.first_missing() {
            // Independent confirmation through the single-play entry point.
            if !eval(game, play, f).expect("vocabulary covered by construction") {
                return Ok(Some(Countermodel {
                    game: game.clone(),
                    play,
                    nodes: *nodes,
                }));
            }
        }
    }
    Ok(None)
}

fn filler_agents(taken: &[AgentId], max_agents: usize) -> Vec<AgentId> {
    (1..)
        .map(|k| AgentId::new(format!("x{k}")).expect("valid identifier"))
        .filter(|a| !taken.contains(a))
        .take(max_agents.saturating_sub(taken.len()))
        .collect()
}

fn make_actions(cost_idx: &[usize], pool: &[Degree]) -> Vec<Action> {
    let mut actions = vec![Action {
        name: ActionId::new("d0"),
        cost: Degree::zero(),
    }];
    actions.extend(cost_idx.iter().enumerate().map(|(k, &c)| Action {
        name: ActionId::new(format!("d{}", k + 1)),
        cost: pool[c].clone(),
    }));
    actions
}

/// Pair index `(profile, outcome)`, profile digits most significant first.
fn decode_play(pair: usize, agents: &[AgentId], actions: &[Action], n_outcomes: usize) -> Play {
    let outcome = pair % n_outcomes;
    let mut code = pair / n_outcomes;
    let mut choice = vec![0; agents.len()];
    for slot in choice.iter_mut().rev() {
        *slot = code % actions.len();
        code /= actions.len();
    }
    Play {
        profile: agents
            .iter()
            .zip(choice)
            .map(|(a, d)| (a.clone(), actions[d].name.clone()))
            .collect(),
        outcome: OutcomeId::new(format!("o{}", outcome + 1)),
    }
}

/// Advances a strictly increasing index vector over `0..n`.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Advances a non-decreasing index vector over `0..n`.
fn next_multiset(idx: &mut [usize], n: usize) -> bool {
    for i in (0..idx.len()).rev() {
        if idx[i] + 1 < n {
            let v = idx[i] + 1;
            for x in &mut idx[i..] {
                *x = v;
            }
            return true;
        }
    }
    false
}
