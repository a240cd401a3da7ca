mod common;

use blameworthy::proof::{
    check_derivation, deduction_transform, lemma_fixtures, load_derivation, Derivation, Justification, Line,
    ProofErrorKind,
};
use blameworthy::schema::Bindings;
use blameworthy::{Coalition, Formula};
use common::{f, games_for, naive_eval, perturbations};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> Derivation {
    lemma_fixtures().into_iter().find(|(n, _)| *n == name).unwrap().1
}

#[test]
fn every_single_line_perturbation_is_rejected_at_its_line() {
    for (name, d) in lemma_fixtures() {
        let all = perturbations(&d);
        assert!(all.len() >= 20, "{name}");
        for (line, p) in all {
            let err = check_derivation(&p).expect_err(&format!("{name}: perturbation at line {line} accepted"));
            assert_eq!(err.line, line, "{name}: {err}");
        }
    }
}

#[test]
fn joint_responsibility_needs_disjoint_coalitions() {
    let mut d = fixture("lemma1_n2");
    let Justification::Axiom { bindings: Some(b), .. } = &mut d.lines[0].justification else {
        panic!("line 1 is the joint responsibility axiom with explicit bindings");
    };
    b.d = Some(Coalition::of(["a1"]));
    let err = check_derivation(&d).unwrap_err();
    assert_eq!(err.line, 1);
    assert!(
        matches!(
            err.kind,
            ProofErrorKind::SideCondition {
                condition: "C ∩ D = ∅",
                ..
            }
        ),
        "{err}"
    );

    // Without explicit bindings the matcher sees the same failure.
    let mut d = fixture("lemma1_n2");
    let text = d.lines[0]
        .formula
        .to_string()
        .replace("{a2}", "{a1}")
        .replace("{a1,a2}", "{a1}");
    d.lines[0].formula = f(&text);
    d.lines[0].justification = Justification::Axiom {
        schema: blameworthy::schema::AxiomSchema::JointResponsibility,
        bindings: None,
    };
    let err = check_derivation(&d).unwrap_err();
    assert_eq!(err.line, 1);
    assert!(matches!(err.kind, ProofErrorKind::SideCondition { .. }), "{err}");
}

/// Discharges every hypothesis, last first.
fn close(d: &Derivation) -> Derivation {
    let mut out = d.clone();
    while let Some(h) = out.hypotheses.last().cloned() {
        out = deduction_transform(&out, &h).unwrap();
    }
    out
}

#[test]
fn deduction_transform_properties() {
    for (name, d) in lemma_fixtures() {
        for h in d.hypotheses.clone() {
            let out = deduction_transform(&d, &h).unwrap();
            check_derivation(&out).unwrap();
            assert_eq!(
                out.conclusion,
                Formula::implies(h.clone(), d.conclusion.clone()),
                "{name}"
            );
            assert!(!out.hypotheses.contains(&h));
        }
    }
}

#[test]
fn hypothesis_order_only_matters_through_indices() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, d) in lemma_fixtures() {
        let n = d.hypotheses.len();
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            // order[new] = old
            let mut position = vec![0; n];
            for (new, &old) in order.iter().enumerate() {
                position[old] = new;
            }
            let mut p = d.clone();
            p.hypotheses = order.iter().map(|&old| d.hypotheses[old].clone()).collect();
            for line in &mut p.lines {
                if let Justification::Hypothesis(i) = &mut line.justification {
                    *i = position[*i];
                }
            }
            assert!(check_derivation(&p).is_ok(), "{name}");
        }
    }
}

/// Hypothesis-free derivations: the shipped theorem plus every fixture with
/// all its hypotheses discharged. Their conclusions must hold everywhere.
#[test]
fn theorems_hold_in_generated_games() {
    let theorems: Vec<Derivation> = lemma_fixtures().iter().map(|(_, d)| close(d)).collect();
    for t in &theorems {
        assert!(t.hypotheses.is_empty());
        check_derivation(t).unwrap();
    }
    for seed in 0..100 {
        let g = games_for(2 + (seed % 2) as usize, &["p", "q", "r"], seed);
        for t in &theorems {
            for play in 0..g.plays().len() {
                assert!(
                    naive_eval(&g, play, &t.conclusion),
                    "{} at play {play}, seed {seed}",
                    t.conclusion
                );
            }
        }
    }
}

#[test]
fn fixture_files_load_through_the_public_loader() {
    for (name, d) in lemma_fixtures() {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        assert_eq!(load_derivation(&path).unwrap(), d);
    }
}

#[test]
fn axiom_lines_with_and_without_bindings() {
    let x = f("B[{a1}; 1] p -> p");
    let with = |b: Option<Bindings>| Derivation {
        hypotheses: vec![],
        lines: vec![Line::new(
            x.clone(),
            Justification::Axiom {
                schema: blameworthy::schema::AxiomSchema::TruthB,
                bindings: b,
            },
        )],
        conclusion: x.clone(),
    };
    assert!(check_derivation(&with(None)).is_ok());
    let b = Bindings::default().phi(f("p")).c(Coalition::of(["a1"])).s(1.into());
    assert!(check_derivation(&with(Some(b.clone()))).is_ok());
    let wrong = b.s(2.into());
    assert_eq!(
        check_derivation(&with(Some(wrong))).unwrap_err().kind,
        ProofErrorKind::FormulaMismatch
    );
}
