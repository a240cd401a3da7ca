//! Reference implementations used as test oracles. Everything here works
//! from the public game data by brute force and shares no code with the
//! library's evaluator, prevention search, tautology checker or countermodel
//! enumerator.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use blameworthy::formula::AgentId;
use blameworthy::game::{Action, ActionId, ActionProfile, Game, GameParts, OutcomeId, Play};
use blameworthy::proof::{Derivation, Justification};
use blameworthy::{Coalition, Degree, Formula};
use proptest::prelude::*;

pub fn f(text: &str) -> Formula {
    blameworthy::parse_formula(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn deg(n: u64) -> Degree {
    Degree::from_integer(n)
}

/// Every profile of `c`, in lexicographic order of declared action indices
/// (agents in sorted order).
pub fn all_profiles(g: &Game, c: &Coalition) -> Vec<(Vec<usize>, ActionProfile)> {
    let members: Vec<&AgentId> = c.iter().collect();
    let n = g.actions().len();
    let total = n.pow(members.len() as u32);
    (0..total)
        .map(|code| {
            let mut digits = vec![0; members.len()];
            let mut rest = code;
            for slot in digits.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            let profile = members
                .iter()
                .zip(&digits)
                .map(|(a, &d)| ((*a).clone(), g.actions()[d].name.clone()))
                .collect();
            (digits, profile)
        })
        .collect()
}

pub fn naive_cost(g: &Game, profile: &ActionProfile) -> Degree {
    profile
        .iter()
        .map(|(_, d)| g.actions().iter().find(|a| &a.name == d).unwrap().cost.clone())
        .sum()
}

fn agrees(play: &Play, profile: &ActionProfile) -> bool {
    profile.iter().all(|(a, d)| play.profile.get(a) == Some(d))
}

/// Direct recursive evaluation, straight from the truth conditions.
pub fn naive_eval(g: &Game, play: usize, f: &Formula) -> bool {
    match f {
        Formula::Var(p) => g.valuation().get(p).is_some_and(|s| s.contains(&play)),
        Formula::Not(x) => !naive_eval(g, play, x),
        Formula::Implies(x, y) => !naive_eval(g, play, x) || naive_eval(g, play, y),
        Formula::Nec(x) => (0..g.plays().len()).all(|j| naive_eval(g, j, x)),
        Formula::Blame(c, s, x) => {
            naive_eval(g, play, x)
                && all_profiles(g, c)
                    .iter()
                    .any(|(_, gamma)| naive_cost(g, gamma) <= *s && prevents(g, gamma, x))
        }
    }
}

fn prevents(g: &Game, gamma: &ActionProfile, x: &Formula) -> bool {
    g.plays()
        .iter()
        .enumerate()
        .all(|(j, p)| !agrees(p, gamma) || !naive_eval(g, j, x))
}

pub type IndexedProfile = (Vec<usize>, ActionProfile);

/// Least cost of a profile preventing `f`, with every profile attaining it
/// (in lexicographic order).
pub fn naive_prevention(g: &Game, c: &Coalition, f: &Formula) -> Option<(Degree, Vec<IndexedProfile>)> {
    let truth: Vec<bool> = (0..g.plays().len()).map(|j| naive_eval(g, j, f)).collect();
    let preventing: Vec<(Degree, Vec<usize>, ActionProfile)> = all_profiles(g, c)
        .into_iter()
        .filter(|(_, gamma)| g.plays().iter().zip(&truth).all(|(p, &t)| !t || !agrees(p, gamma)))
        .map(|(idx, gamma)| (naive_cost(g, &gamma), idx, gamma))
        .collect();
    let best = preventing.iter().map(|(c, _, _)| c.clone()).min()?;
    let optimal = preventing
        .into_iter()
        .filter(|(c, _, _)| *c == best)
        .map(|(_, idx, gamma)| (idx, gamma))
        .collect();
    Some((best, optimal))
}

/// Truth-table tautology check with `N`/`B` subformulas as opaque atoms.
pub fn naive_tautology(f: &Formula) -> bool {
    fn atoms(f: &Formula, out: &mut Vec<Formula>) {
        match f {
            Formula::Not(x) => atoms(x, out),
            Formula::Implies(x, y) => {
                atoms(x, out);
                atoms(y, out);
            }
            other => {
                if !out.contains(other) {
                    out.push(other.clone());
                }
            }
        }
    }
    fn value(f: &Formula, v: &HashMap<&Formula, bool>) -> bool {
        match f {
            Formula::Not(x) => !value(x, v),
            Formula::Implies(x, y) => !value(x, v) || value(y, v),
            other => v[other],
        }
    }
    let mut list = Vec::new();
    atoms(f, &mut list);
    (0..1u64 << list.len()).all(|code| {
        let v = list.iter().enumerate().map(|(i, a)| (a, code >> i & 1 == 1)).collect();
        value(f, &v)
    })
}

/// Every game with the given size limits over one proposition per name in
/// `props`: agents `g1..`, actions `z` (cost 0) then `u1..` with costs from
/// `costs`, outcomes `w1..`, every nonempty play set up to `max_plays`,
/// every valuation. Calls `visit` on each.
pub fn for_each_small_game(
    max_agents: usize,
    max_actions: usize,
    max_outcomes: usize,
    max_plays: usize,
    costs: &[Degree],
    props: &[&str],
    mut visit: impl FnMut(&Game),
) {
    for n_agents in 1..=max_agents {
        for n_actions in 1..=max_actions {
            let extra = n_actions - 1;
            for cost_code in 0..costs.len().pow(extra as u32) {
                let mut actions = vec![Action {
                    name: ActionId::new("z"),
                    cost: Degree::zero(),
                }];
                let mut rest = cost_code;
                for k in 0..extra {
                    actions.push(Action {
                        name: ActionId::new(format!("u{}", k + 1)),
                        cost: costs[rest % costs.len()].clone(),
                    });
                    rest /= costs.len();
                }
                for n_outcomes in 1..=max_outcomes {
                    let agents: Vec<AgentId> = (1..=n_agents).map(|i| AgentId::new(format!("g{i}")).unwrap()).collect();
                    let mut pairs = Vec::new();
                    for code in 0..n_actions.pow(n_agents as u32) {
                        let mut profile = BTreeMap::new();
                        let mut rest = code;
                        for a in &agents {
                            profile.insert(a.clone(), actions[rest % n_actions].name.clone());
                            rest /= n_actions;
                        }
                        for o in 1..=n_outcomes {
                            pairs.push(Play {
                                profile: profile.clone(),
                                outcome: OutcomeId::new(format!("w{o}")),
                            });
                        }
                    }
                    for mask in 1u32..(1 << pairs.len()) {
                        if mask.count_ones() as usize > max_plays {
                            continue;
                        }
                        let plays: Vec<Play> = (0..pairs.len())
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| pairs[i].clone())
                            .collect();
                        let bits = plays.len() * props.len();
                        for vcode in 0..1u64 << bits {
                            let valuation = props
                                .iter()
                                .enumerate()
                                .map(|(j, p)| {
                                    let set: BTreeSet<usize> = (0..plays.len())
                                        .filter(|i| vcode >> (j * plays.len() + i) & 1 == 1)
                                        .collect();
                                    (p.to_string(), set)
                                })
                                .collect();
                            let game = Game::new(GameParts {
                                agents: agents.clone(),
                                actions: actions.clone(),
                                zero_action: Some(ActionId::new("z")),
                                outcomes: (1..=n_outcomes).map(|o| OutcomeId::new(format!("w{o}"))).collect(),
                                plays: plays.clone(),
                                valuation,
                            })
                            .expect("enumerated game is valid");
                            visit(&game);
                        }
                    }
                }
            }
        }
    }
}

/// Single-line corruptions of `d`, each paired with the corrupted line.
/// Every one of them must be rejected at exactly that line.
pub fn perturbations(d: &Derivation) -> Vec<(usize, Derivation)> {
    let mut out = Vec::new();
    for (pos, line) in d.lines.iter().enumerate() {
        let k = pos + 1;
        let mut edit = |change: &dyn Fn(&mut Derivation)| {
            let mut p = d.clone();
            change(&mut p);
            out.push((k, p));
        };
        edit(&|p| p.lines[pos].formula = Formula::not(line.formula.clone()));
        edit(&|p| p.lines[pos].formula = Formula::var("fresh"));
        edit(&|p| p.lines[pos].justification = Justification::Necessitation(k));
        let changed = match &line.justification {
            Justification::Tautology => Justification::Axiom {
                schema: blameworthy::schema::AxiomSchema::TruthN,
                bindings: None,
            },
            Justification::Axiom { .. } if !naive_tautology(&line.formula) => Justification::Tautology,
            Justification::Axiom { schema, bindings } => Justification::Axiom {
                schema: blameworthy::schema::AxiomSchema::ALL
                    .into_iter()
                    .find(|s| s != schema)
                    .unwrap(),
                bindings: bindings.clone(),
            },
            Justification::Hypothesis(_) => Justification::Hypothesis(d.hypotheses.len()),
            Justification::ModusPonens { minor, major } => Justification::ModusPonens {
                minor: *major,
                major: *minor,
            },
            Justification::Necessitation(i) if *i > 1 => Justification::Necessitation(i - 1),
            Justification::Necessitation(_) => Justification::Necessitation(k + 1),
        };
        edit(&move |p| p.lines[pos].justification = changed.clone());
    }
    out
}

pub fn games_for(agents: usize, props: &[&str], seed: u64) -> Game {
    let params = blameworthy::game::GameParams {
        n_agents: agents,
        n_actions: 2 + (seed % 2) as usize,
        n_outcomes: 2,
        max_plays: 8,
        cost_pool: vec![deg(0), deg(1), deg(2)],
        propositions: props.iter().map(|p| p.to_string()).collect(),
    };
    blameworthy::game::generate_game(&params, seed).unwrap()
}

pub fn arb_degree() -> impl Strategy<Value = Degree> {
    (0u64..6, 1u64..4).prop_map(|(n, d)| Degree::from_fraction(n, d).unwrap())
}

pub fn arb_coalition(agents: &'static [&'static str]) -> impl Strategy<Value = Coalition> {
    proptest::sample::subsequence(agents, 0..=agents.len()).prop_map(Coalition::of)
}

/// Formulas over `p`, `q`, `r` and agents `a1..a3`.
pub fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just("p"), Just("q"), Just("r"), Just("x_1")].prop_map(Formula::var);
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::nec),
            (arb_coalition(&["a1", "a2", "a3"]), arb_degree(), inner).prop_map(|(c, s, x)| Formula::blame(c, s, x)),
        ]
    })
}
