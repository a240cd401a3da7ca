//! Model checking, minimal blame degrees and proof checking for a modal
//! logic of blameworthiness with sacrifice.
//!
//! Formulas `B[C; s] φ` say that coalition `C` is blameable for `φ` with
//! degree `s`: `φ` is true, and `C` could have prevented it by a joint
//! action costing at most `s`. Models are finite games whose actions
//! carry costs ([`game::Game`]).
//!
//! - [`formula`]: AST, parser, printer, tautology check.
//! - [`game`]: games, profile costs, the JSON game format, generators.
//! - [`semantics`]: satisfaction, extensions, cheapest preventing profiles.
//! - [`schema`]: the nine axiom schemata, instantiation and matching.
//! - [`validity`]: per-game validity, randomized soundness suites,
//!   bounded countermodel search.
//! - [`proof`]: Hilbert-style derivation checking and the deduction
//!   transform, with replayable lemma fixtures.
//! - [`cli`]: the `bw` command-line front end.

pub mod cli;
pub mod degree;
pub mod formula;
pub mod game;
pub mod proof;
pub mod schema;
pub mod semantics;
pub mod validity;

pub use degree::Degree;
pub use formula::{parse_formula, print_formula, AgentId, Coalition, Formula};
pub use game::{figure1_game, ActionId, ActionProfile, Game, OutcomeId, Play};
pub use semantics::{blame_verdict, eval, extension, prevention_cost, BlameVerdict, Evaluator};
