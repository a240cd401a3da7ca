//! Parsing, printing, sugar and tautology checks.

use blameworthy::formula::is_tautology;
use blameworthy::{parse_formula, print_formula};

fn main() {
    let inputs = [
        "p & q -> q",
        "p | !p",
        "~N p -> N ~N p",
        "B[{a1, a2}; 3/2] (p -> q)",
        "N B[{a1}; 0] p -> p",
        "B[{}; 1] p",
        "p -> (q",
        "B[{a1}; -1] p",
    ];
    for text in inputs {
        match parse_formula(text) {
            Ok(f) => {
                let taut = is_tautology(&f)
                    .map(|t| t.to_string())
                    .unwrap_or_else(|e| e.to_string());
                println!("{text:<28} => {:<36} tautology: {taut}", print_formula(&f));
            }
            Err(e) => println!("{text:<28} => error: {e}"),
        }
    }
}
