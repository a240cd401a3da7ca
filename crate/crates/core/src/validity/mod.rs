//! Validity checking: in one game, across random games (soundness suites),
//! and by bounded search for countermodels.

mod countermodel;
mod sample;
mod soundness;

use serde::Serialize;

use crate::formula::Formula;
use crate::game::Game;
use crate::semantics::{EvalError, EvalOptions, Evaluator};

pub use countermodel::{default_degree_pool, find_countermodel, Countermodel, SearchBounds, SearchError};
pub use sample::{random_bindings, random_coalition, random_formula, FormulaSampler};
pub use soundness::{soundness_suite, Counterexample, Mutation, SchemaTally, SoundnessReport, SuiteError, SuiteParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GameValidity {
    pub valid_here: bool,
    /// Least play index where the formula fails.
    pub failing_play: Option<usize>,
}

/// Whether `f` holds at every play of `g`.
pub fn check_validity_in_game(g: &Game, f: &Formula) -> Result<GameValidity, EvalError> {
    check_validity_with(g, f, EvalOptions::default())
}

pub fn check_validity_with(g: &Game, f: &Formula, options: EvalOptions) -> Result<GameValidity, EvalError> {
    let ext = Evaluator::with_options(g, options).extension(f)?;
    let failing_play = ext.first_missing();
    Ok(GameValidity {
        valid_here: failing_play.is_none(),
        failing_play,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, Coalition};
    use crate::game::figure1_game;
    use crate::schema::{instantiate, AxiomSchema, Bindings};

    #[test]
    fn figure1_validity() {
        let g = figure1_game();
        let truth_b = instantiate(
            AxiomSchema::TruthB,
            &Bindings::default()
                .phi(parse_formula("dead").unwrap())
                .c(Coalition::of(["a1"]))
                .s(1000.into()),
        )
        .unwrap();
        assert!(check_validity_in_game(&g, &truth_b).unwrap().valid_here);

        let v = check_validity_in_game(&g, &parse_formula("N dead").unwrap()).unwrap();
        assert_eq!(
            v,
            GameValidity {
                valid_here: false,
                failing_play: Some(0)
            }
        );

        let v = check_validity_in_game(&g, &parse_formula("dead").unwrap()).unwrap();
        assert_eq!(v.failing_play, Some(2));

        let taut = parse_formula("(dead -> alive) -> !alive -> !dead").unwrap();
        assert!(check_validity_in_game(&g, &taut).unwrap().valid_here);
    }
}
