//! Bounded search for small games that falsify a formula.

use blameworthy::parse_formula;
use blameworthy::validity::{find_countermodel, SearchBounds, SearchError};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "p -> N p",
        "B[{a1}; 1] p -> B[{a1}; 0] p",
        "N p -> p",
        "B[{a1}; 1] p -> B[{a1,a2}; 2] p",
    ] {
        let f = parse_formula(text)?;
        match find_countermodel(&f, &SearchBounds::for_formula(&f)) {
            Ok(Some(cm)) => {
                println!("{text}: falsified at play {} after {} nodes", cm.play, cm.nodes);
                println!("{}", cm.game.to_json_string());
            }
            Ok(None) => println!("{text}: no countermodel within bounds"),
            Err(e) => println!("{text}: {e}"),
        }
    }

    // A valid formula forces a full sweep, which a small budget cuts short.
    let valid = parse_formula("B[{a1}; 1] p -> B[{a1,a2}; 2] p")?;
    let tight = SearchBounds {
        node_budget: 1_000,
        ..SearchBounds::for_formula(&valid)
    };
    match find_countermodel(&valid, &tight) {
        Err(SearchError::BudgetExceeded { budget }) => println!("gave up after {budget} nodes"),
        Ok(found) => println!("finished within budget: {}", found.is_some()),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
