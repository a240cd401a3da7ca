//! Randomised soundness checking of the axiom schemata.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::check_validity_with;
use super::sample::{random_bindings, FormulaSampler};
use crate::degree::Degree;
use crate::formula::Formula;
use crate::game::generate::generate_with;
use crate::game::{save_game, Game, GameParams};
use crate::schema::{instantiate, instantiate_unchecked, AxiomSchema};
use crate::semantics::{EvalOptions, SemanticMutation};

/// Deliberate faults injected to confirm the suite can catch them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Monotonicity instances are built with `s > t`.
    SwapMonotonicity,
    /// Blame no longer requires `φ` to hold at the current play.
    DropPhiConjunct,
    /// Every action costs one unit more.
    UniformTax,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::SwapMonotonicity,
        Mutation::DropPhiConjunct,
        Mutation::UniformTax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::SwapMonotonicity => "swap-monotonicity",
            Mutation::DropPhiConjunct => "drop-phi-conjunct",
            Mutation::UniformTax => "uniform-tax",
        }
    }

    fn semantic(self) -> Option<SemanticMutation> {
        match self {
            Mutation::SwapMonotonicity => None,
            Mutation::DropPhiConjunct => Some(SemanticMutation::DropTruthConjunct),
            Mutation::UniformTax => Some(SemanticMutation::UniformTax),
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| SuiteError::UnknownMutation(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("at least one trial is required")]
    NoTrials,
    #[error("unknown mutation `{0}` (expected swap-monotonicity, drop-phi-conjunct or uniform-tax)")]
    UnknownMutation(String),
    #[error("invalid suite parameters: {0}")]
    Params(String),
    #[error("cannot write counterexample to {path}: {message}")]
    Persist { path: PathBuf, message: String },
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub trials: usize,
    pub seed: u64,
    /// Modal depth cap for formulas placed in schema slots.
    pub max_depth: usize,
    /// Schema instances checked per schema per trial.
    pub instances_per_schema: usize,
    pub max_agents: usize,
    pub max_actions: usize,
    pub max_outcomes: usize,
    pub max_plays: usize,
    pub cost_pool: Vec<Degree>,
    /// Degrees used for `B` operators in sampled instances.
    pub degree_pool: Vec<Degree>,
    pub propositions: Vec<String>,
    pub schemas: Vec<AxiomSchema>,
    pub mutation: Option<Mutation>,
    /// Directory for counterexample files; nothing is written when unset.
    pub persist_dir: Option<PathBuf>,
    /// Cap on counterexamples kept in the report and on disk.
    pub max_counterexamples: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            trials: 1000,
            seed: 0,
            max_depth: 2,
            instances_per_schema: 2,
            max_agents: 3,
            max_actions: 3,
            max_outcomes: 2,
            max_plays: 8,
            cost_pool: vec![0.into(), 1.into(), 2.into()],
            degree_pool: (0..=4).map(Degree::from_integer).collect(),
            propositions: vec!["p".into(), "q".into()],
            schemas: AxiomSchema::ALL.to_vec(),
            mutation: None,
            persist_dir: None,
            max_counterexamples: 10,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SchemaTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub schema: String,
    pub formula: String,
    pub play: usize,
    /// Base path of the persisted files (`.game.json` and `.query`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub files: Option<String>,
    #[serde(skip)]
    pub game: Game,
}

#[derive(Debug, Clone, Serialize)]
pub struct SoundnessReport {
    pub trials: usize,
    pub seed: u64,
    pub mutation: Option<String>,
    pub instances: usize,
    pub violations: usize,
    pub schemas: BTreeMap<String, SchemaTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Failure {
    schema: AxiomSchema,
    formula: Formula,
    play: usize,
}

struct TrialResult {
    trial: usize,
    game: Game,
    tallies: Vec<(AxiomSchema, bool)>,
    failures: Vec<Failure>,
}

/// Checks random instances of the schemata in random games.
///
/// Trial `i` draws from its own generator stream, so results do not depend
/// on how trials are scheduled across threads.
pub fn soundness_suite(params: &SuiteParams) -> Result<SoundnessReport, SuiteError> {
    if params.trials == 0 {
        return Err(SuiteError::NoTrials);
    }
    if params.degree_pool.is_empty() || params.propositions.is_empty() || params.schemas.is_empty() {
        return Err(SuiteError::Params(
            "degree_pool, propositions and schemas must be non-empty".into(),
        ));
    }
    if params.max_agents == 0 || params.max_actions == 0 || params.max_outcomes == 0 || params.max_plays == 0 {
        return Err(SuiteError::Params("game size bounds must be >= 1".into()));
    }

    let results: Vec<TrialResult> = (0..params.trials)
        .into_par_iter()
        .map(|trial| run_trial(params, trial))
        .collect::<Result<_, _>>()?;

    let mut schemas: BTreeMap<String, SchemaTally> = params
        .schemas
        .iter()
        .map(|s| (s.name().to_string(), SchemaTally::default()))
        .collect();
    let mut instances = 0;
    let mut violations = 0;
    let mut counterexamples = Vec::new();
    for r in results {
        for (schema, ok) in &r.tallies {
            let tally = schemas.get_mut(schema.name()).expect("tally per schema");
            instances += 1;
            if *ok {
                tally.passed += 1;
            } else {
                tally.failed += 1;
                violations += 1;
            }
        }
        for failure in r.failures {
            if counterexamples.len() >= params.max_counterexamples {
                break;
            }
            counterexamples.push(Counterexample {
                trial: r.trial,
                schema: failure.schema.name().to_string(),
                formula: failure.formula.to_string(),
                play: failure.play,
                files: None,
                game: r.game.clone(),
            });
        }
    }
    if let Some(dir) = &params.persist_dir {
        for (k, cx) in counterexamples.iter_mut().enumerate() {
            cx.files = Some(persist(dir, k, cx)?.display().to_string());
        }
    }
    Ok(SoundnessReport {
        trials: params.trials,
        seed: params.seed,
        mutation: params.mutation.map(|m| m.name().to_string()),
        instances,
        violations,
        schemas,
        counterexamples,
    })
}

fn run_trial(params: &SuiteParams, trial: usize) -> Result<TrialResult, SuiteError> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(trial as u64);

    let game_params = GameParams {
        n_agents: rng.gen_range(1..=params.max_agents),
        n_actions: rng.gen_range(1..=params.max_actions),
        n_outcomes: rng.gen_range(1..=params.max_outcomes),
        max_plays: params.max_plays,
        cost_pool: params.cost_pool.clone(),
        propositions: params.propositions.clone(),
    };
    let game = generate_with(&game_params, &mut rng).map_err(|e| SuiteError::Params(e.to_string()))?;
    let sampler = FormulaSampler {
        propositions: params.propositions.clone(),
        agents: game.agents().to_vec(),
        degrees: params.degree_pool.clone(),
        max_modal_depth: params.max_depth,
        max_size: 6,
    };
    let options = EvalOptions {
        lenient: false,
        mutation: params.mutation.and_then(Mutation::semantic),
    };
    let swap = params.mutation == Some(Mutation::SwapMonotonicity);

    let mut tallies = Vec::new();
    let mut failures = Vec::new();
    for &schema in &params.schemas {
        for _ in 0..params.instances_per_schema {
            let formula = if swap && schema == AxiomSchema::Monotonicity {
                let mut b = random_bindings(&mut rng, schema, &sampler, true);
                std::mem::swap(&mut b.s, &mut b.t);
                instantiate_unchecked(schema, &b)
            } else {
                instantiate(schema, &random_bindings(&mut rng, schema, &sampler, false))
            }
            .expect("sampled bindings are complete");
            let verdict = check_validity_with(&game, &formula, options).expect("instance uses game vocabulary");
            tallies.push((schema, verdict.valid_here));
            if let Some(play) = verdict.failing_play {
                failures.push(Failure { schema, formula, play });
            }
        }
    }
    Ok(TrialResult {
        trial,
        game,
        tallies,
        failures,
    })
}

fn persist(dir: &Path, k: usize, cx: &Counterexample) -> Result<PathBuf, SuiteError> {
    let err = |path: &Path, e: &dyn fmt::Display| SuiteError::Persist {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    std::fs::create_dir_all(dir).map_err(|e| err(dir, &e))?;
    let stem = dir.join(format!("cx{k:03}-trial{}-{}", cx.trial, cx.schema));
    let game_path = stem.with_extension("game.json");
    save_game(&cx.game, &game_path).map_err(|e| err(&game_path, &e))?;
    let query_path = stem.with_extension("query");
    let query = format!("schema={}\nplay={}\nformula={}\n", cx.schema, cx.play, cx.formula);
    std::fs::write(&query_path, query).map_err(|e| err(&query_path, &e))?;
    Ok(stem)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: usize) -> SuiteParams {
        SuiteParams {
            trials,
            seed: 7,
            ..SuiteParams::default()
        }
    }

    #[test]
    fn sound_semantics_has_no_violations() {
        let report = soundness_suite(&small(60)).unwrap();
        assert!(report.is_sound(), "{}", report.to_json());
        assert_eq!(report.instances, 60 * 9 * 2);
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(matches!(soundness_suite(&small(0)), Err(SuiteError::NoTrials)));
    }

    #[test]
    fn deterministic_for_seed() {
        let a = soundness_suite(&SuiteParams {
            mutation: Some(Mutation::DropPhiConjunct),
            ..small(40)
        })
        .unwrap();
        let b = soundness_suite(&SuiteParams {
            mutation: Some(Mutation::DropPhiConjunct),
            ..small(40)
        })
        .unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn mutation_names_round_trip() {
        for m in Mutation::ALL {
            assert_eq!(m.name().parse::<Mutation>().unwrap(), m);
        }
        assert!("nope".parse::<Mutation>().is_err());
    }
}
