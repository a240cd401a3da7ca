//! Generate a random game, save it as JSON, load it back and evaluate on it.

use blameworthy::game::{generate_game, load_game, save_game, GameParams};
use blameworthy::{extension, parse_formula, Degree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GameParams {
        n_agents: 2,
        n_actions: 3,
        n_outcomes: 2,
        max_plays: 6,
        cost_pool: vec![Degree::zero(), Degree::from_integer(1), "5/2".parse()?],
        propositions: vec!["p".into(), "q".into()],
    };
    let game = generate_game(&params, 42)?;
    let dir = std::env::temp_dir().join("bw-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("random.game.json");
    save_game(&game, &path)?;
    println!("{}", std::fs::read_to_string(&path)?);

    let back = load_game(&path)?;
    assert_eq!(back, game);
    for text in ["p", "N (p -> q)", "B[{a1}; 1] p", "B[{a1,a2}; 5] q"] {
        let ext = extension(&back, &parse_formula(text)?)?;
        println!("{text:<18} holds at plays {:?}", ext.to_set());
    }
    Ok(())
}
