//! Check the bundled derivations, discharge a hypothesis, and watch a broken
//! proof get rejected.

use blameworthy::proof::{check_derivation, deduction_transform, lemma_fixtures, replay_lemma_fixtures};
use blameworthy::{parse_formula, Formula};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in replay_lemma_fixtures().results {
        match r.outcome {
            Ok(()) => println!("ok    {:<28} {} lines", r.name, r.lines),
            Err(e) => println!("FAIL  {:<28} {e}", r.name),
        }
    }

    let (_, inner) = lemma_fixtures()
        .into_iter()
        .find(|(n, _)| *n == "lemma4_inner")
        .unwrap();
    println!(
        "\nhypotheses: {:?}",
        inner.hypotheses.iter().map(|h| h.to_string()).collect::<Vec<_>>()
    );
    let p = parse_formula("p")?;
    let closed = deduction_transform(&inner, &p)?;
    check_derivation(&closed)?;
    println!(
        "discharged p: {} lines proving {}",
        closed.lines.len(),
        closed.conclusion
    );

    let mut broken = inner.clone();
    broken.lines[2].formula = Formula::not(broken.lines[2].formula.clone());
    match check_derivation(&broken) {
        Ok(_) => println!("broken proof accepted?!"),
        Err(e) => println!("broken proof rejected: {e}"),
    }
    println!("\nas JSON:\n{}", lemma_fixtures()[0].1.to_json_string());
    Ok(())
}
