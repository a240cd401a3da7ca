mod common;

use std::path::Path;
use std::process::{Command, Output};

use blameworthy::game::load_game;
use blameworthy::{blame_verdict, figure1_game, Coalition};
use common::{deg, f};

const FIGURE1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/figure1.game.json");

fn bw(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bw"))
        .args(args)
        .current_dir(cwd)
        .env_remove("BW_NODE_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn here() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn check_reports_blame_verdicts() {
    let dir = here();
    let o = bw(&["check", FIGURE1, "0", "B[{a1};1000] dead"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "formula=B[{a1}; 1000] dead\nplay=0\nholds=true\nminimal_degree=1000\nwitness={a1:help}\n"
    );

    // Same answer through the library.
    let v = blame_verdict(&figure1_game(), 0, &Coalition::of(["a1"]), &deg(1000), &f("dead")).unwrap();
    assert!(v.holds);
    assert_eq!(v.witness.unwrap().to_string(), "{a1:help}");

    let o = bw(&["check", FIGURE1, "0", "B[{};5] dead"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("holds=false"));

    let o = bw(&["check", FIGURE1, "99", "dead"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("play index out of range"));

    let o = bw(&["check", FIGURE1, "0", "dead ->"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column"));

    let o = bw(&["check", FIGURE1, "0", "ghost"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = bw(&["check", "--lenient", FIGURE1, "0", "!ghost"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn degree_command() {
    let dir = here();
    let o = bw(&["degree", FIGURE1, "0", "{a1,a2}", "dead"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "minimal_degree=1000\nwitness={a1:help,a2:ignore}\n");

    let o = bw(&["degree", FIGURE1, "0", "{a3}", "dead"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not blameable: no preventing profile\n");

    let o = bw(&["degree", FIGURE1, "2", "{a1}", "dead"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not blameable: φ false here\n");

    let o = bw(&["degree", FIGURE1, "0", "{a1,", "dead"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn soundness_command() {
    let dir = here();
    let o = bw(&["soundness", "--trials", "200", "--seed", "7"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["violations"], 0);
    assert_eq!(report["trials"], 200);
    assert!(!dir.path().join("bw-counterexamples").exists());

    let o = bw(
        &[
            "soundness",
            "--trials",
            "200",
            "--seed",
            "7",
            "--mutate",
            "drop-phi-conjunct",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let stem = report["counterexamples"][0]["files"].as_str().unwrap();
    assert!(dir.path().join(format!("{stem}.game.json")).exists());
    assert!(dir.path().join(format!("{stem}.query")).exists());

    assert_eq!(bw(&["soundness", "--trials", "0"], dir.path()).status.code(), Some(2));
    assert_eq!(
        bw(&["soundness", "--mutate", "nonsense"], dir.path()).status.code(),
        Some(2)
    );

    let a = stdout(&bw(&["soundness", "--trials", "50", "--seed", "3"], dir.path()));
    let b = stdout(&bw(&["soundness", "--trials", "50", "--seed", "3"], dir.path()));
    assert_eq!(a, b);
}

#[test]
fn countermodel_command_round_trips_through_check() {
    let dir = here();
    let o = bw(&["countermodel", "p -> N p"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let play = out.lines().find_map(|l| l.strip_prefix("play=")).unwrap();
    let game = dir.path().join("countermodel.game.json");
    load_game(&game).unwrap();
    let o = bw(&["check", game.to_str().unwrap(), play, "p -> N p"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("holds=false"));

    let o = bw(&["countermodel", "N p -> p"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("found=false"));

    let big = "B[{a1,a2}; 2](p | q) -> B[{a1}; 1] p | N q";
    let o = bw(&["countermodel", "--budget", "10", big], dir.path());
    assert_eq!(o.status.code(), Some(3));

    let o = Command::new(env!("CARGO_BIN_EXE_bw"))
        .args(["countermodel", big])
        .current_dir(dir.path())
        .env("BW_NODE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let o = bw(&["countermodel", "--max-agents", "1", "B[{a1,a2}; 1] p"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prove_command() {
    let dir = here();
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let o = bw(&["prove", &format!("{fixtures}/lemma4_n2.json")], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let text = std::fs::read_to_string(format!("{fixtures}/lemma4_n2.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let line7 = doc["lines"][6]["formula"].as_str().unwrap().to_string();
    doc["lines"][6]["formula"] = format!("!({line7})").into();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, doc.to_string()).unwrap();
    let o = bw(&["prove", broken.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "line 7: formula mismatch\n");

    assert_eq!(bw(&["prove", "missing.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn fmt_and_usage() {
    let dir = here();
    let o = bw(&["fmt", "p & q"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "!(p -> !q)\n");
    assert_eq!(bw(&["fmt", "p &"], dir.path()).status.code(), Some(2));
    assert_eq!(bw(&["frobnicate"], dir.path()).status.code(), Some(2));
    assert_eq!(bw(&["--help"], dir.path()).status.code(), Some(0));
}
