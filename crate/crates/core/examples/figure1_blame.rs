//! Three lifeguards, one swimmer. Who is blameable for the drowning, and at
//! what price?

use blameworthy::formula::parse_coalition;
use blameworthy::{blame_verdict, figure1_game, parse_formula, Degree, Evaluator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let game = figure1_game();
    println!(
        "agents: {:?}",
        game.agents().iter().map(|a| a.as_str()).collect::<Vec<_>>()
    );
    for a in game.actions() {
        println!("action {} costs {}", a.name.as_str(), a.cost);
    }
    for (i, p) in game.plays().iter().enumerate() {
        let profile: Vec<_> = p.profile.values().map(|d| d.as_str()).collect();
        println!("play {i}: {profile:?} -> {}", p.outcome.as_str());
    }

    let mut ev = Evaluator::new(&game);
    for text in ["B[{a1}; 1000] dead", "B[{a1}; 999] dead", "B[{a3}; 5000] dead"] {
        println!("{text:<22} at play 0: {}", ev.eval(0, &parse_formula(text)?)?);
    }

    let dead = parse_formula("dead")?;
    for c in ["{a1}", "{a2}", "{a3}", "{a1,a2,a3}"] {
        let c = parse_coalition(c)?;
        let v = blame_verdict(&game, 0, &c, &Degree::from_integer(5000), &dead)?;
        match (v.minimal_degree, v.witness) {
            (Some(d), Some(w)) => println!("{c}: minimal degree {d}, e.g. {w}"),
            _ => println!("{c}: could not have prevented it"),
        }
    }
    Ok(())
}
