//! Randomized validity checks of every axiom schema, then the same suite
//! against a deliberately broken semantics.

use blameworthy::validity::{soundness_suite, Mutation, SuiteParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = SuiteParams {
        trials: 300,
        seed: 7,
        ..SuiteParams::default()
    };
    let report = soundness_suite(&params)?;
    println!(
        "sound semantics: {} instances, {} violations",
        report.instances, report.violations
    );
    for (schema, tally) in &report.schemas {
        println!("  {schema:<22} passed {:>4}  failed {}", tally.passed, tally.failed);
    }

    for m in Mutation::ALL {
        let report = soundness_suite(&SuiteParams {
            mutation: Some(m),
            ..params.clone()
        })?;
        println!("mutation {m}: {} violations", report.violations);
        if let Some(cx) = report.counterexamples.first() {
            println!(
                "  trial {} ({}): {} fails at play {}",
                cx.trial, cx.schema, cx.formula, cx.play
            );
        }
    }
    Ok(())
}
