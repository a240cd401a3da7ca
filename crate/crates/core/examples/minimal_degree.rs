//! Build a game by hand and ask for the cheapest preventing profile.

use std::collections::{BTreeMap, BTreeSet};

use blameworthy::game::{Action, GameParts};
use blameworthy::{parse_formula, prevention_cost, ActionId, AgentId, Coalition, Degree, Game, OutcomeId, Play};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = AgentId::new("alice").unwrap();
    let b = AgentId::new("bob").unwrap();
    let act = |n: &str, c: &str| -> Result<Action, Box<dyn std::error::Error>> {
        Ok(Action {
            name: ActionId::new(n),
            cost: c.parse()?,
        })
    };
    let actions = vec![act("idle", "0")?, act("call", "1/2")?, act("stop", "3")?];

    // The server goes down unless someone stops the deploy or both call in.
    let mut plays = Vec::new();
    let mut down = BTreeSet::new();
    for x in ["idle", "call", "stop"] {
        for y in ["idle", "call", "stop"] {
            let saved = x == "stop" || y == "stop" || (x == "call" && y == "call");
            if !saved {
                down.insert(plays.len());
            }
            plays.push(Play {
                profile: BTreeMap::from([(a.clone(), ActionId::new(x)), (b.clone(), ActionId::new(y))]),
                outcome: OutcomeId::new(if saved { "up" } else { "down" }),
            });
        }
    }
    let game = Game::new(GameParts {
        agents: vec![a.clone(), b.clone()],
        actions,
        zero_action: Some(ActionId::new("idle")),
        outcomes: vec![OutcomeId::new("up"), OutcomeId::new("down")],
        plays,
        valuation: BTreeMap::from([("down".to_string(), down)]),
    })?;

    let phi = parse_formula("down")?;
    for c in [
        Coalition::of(["alice"]),
        Coalition::of(["bob"]),
        Coalition::of(["alice", "bob"]),
    ] {
        match prevention_cost(&game, &c, &phi)? {
            Some(p) => println!("{c}: cheapest prevention costs {} via {}", p.cost, p.witness),
            None => println!("{c}: cannot prevent"),
        }
    }
    let joint: Degree = "1".parse()?;
    println!(
        "B[{{alice,bob}}; {joint}] down at play 0: {}",
        blameworthy::eval(&game, 0, &parse_formula("B[{alice,bob}; 1] down")?)?
    );
    Ok(())
}
