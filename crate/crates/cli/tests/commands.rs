use std::path::PathBuf;

use claimproof_cli::{run, Output, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Output {
    run(std::iter::once("claimproof").chain(args.iter().copied()))
}

#[test]
fn winner_example() {
    let out = cli(&["poker", "winner", "Bond=full-house", "Rogers=flush", "Ryan=straight"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "Bond wins (3744/2598960 < 5108/2598960 < 10200/2598960)\n");
}

#[test]
fn winner_tie_and_impossible_hands_are_negative() {
    let tie = cli(&["poker", "winner", "A=pair", "B=pair"]);
    assert_eq!(tie.code, EXIT_NEGATIVE);
    assert!(tie.stdout.starts_with("Tie between A and B"));
    let none = cli(&["poker", "winner", "A=full-house", "--values", "5", "--suits", "2"]);
    assert_eq!(none.code, EXIT_NEGATIVE, "{none:?}");
    assert!(none.stdout.starts_with("No winner"), "{}", none.stdout);
}

#[test]
fn winner_rejects_malformed_players() {
    assert_eq!(cli(&["poker", "winner", "Bond"]).code, EXIT_USAGE);
    assert_eq!(cli(&["poker", "winner", "Bond=royal"]).code, EXIT_USAGE);
    assert_eq!(cli(&["poker", "winner"]).code, EXIT_USAGE);
}

#[test]
fn verify_reports_ten_passing_rows() {
    let out = cli(&["poker", "verify", "--threads", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().filter(|l| l.ends_with("PASS")).count(), 11);
    assert!(out.stdout.contains("total 2,598,960"), "{}", out.stdout);
    let csv = cli(&["poker", "verify", "--csv", "--values", "6", "--suits", "3", "--ace", "high"]);
    assert_eq!(csv.code, EXIT_OK);
    assert_eq!(csv.stdout.lines().next(), Some("category,closed_form,oracle,status"));
    assert_eq!(csv.stdout.lines().count(), 11);
}

#[test]
fn verify_output_does_not_depend_on_threads() {
    let one = cli(&["poker", "verify", "--values", "7", "--suits", "3", "--threads", "1"]);
    let four = cli(&["poker", "verify", "--values", "7", "--suits", "3", "--threads", "4"]);
    assert_eq!(one, four);
}

#[test]
fn count_and_prob() {
    let out = cli(&["poker", "count", "full-house"]);
    assert_eq!(out.stdout, "full-house       3744\n");
    let out = cli(&["poker", "prob", "three_of_a_kind"]);
    assert_eq!(out.stdout, "three-of-a-kind  54912/2598960 (= 88/4165, \u{2248} 0.0211285)\n");
    let all = cli(&["poker", "count", "--all"]);
    assert_eq!(all.stdout.lines().count(), 11);
    assert_eq!(all.stdout.lines().last(), Some("total            2598960"));
    assert_eq!(all, cli(&["poker", "count"]));
    assert_eq!(cli(&["poker", "count", "pair", "--all"]).code, EXIT_USAGE);
}

#[test]
fn wild_counts_come_from_enumeration() {
    let out = cli(&["poker", "count", "--wilds", "1"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("royal-flush      24\n"), "{}", out.stdout);
    assert!(out.stdout.ends_with("total            2869685\n"));
    // proofs exist only for wild-free decks
    assert_eq!(cli(&["poker", "proof", "pair", "--wilds", "1"]).code, EXIT_USAGE);
}

#[test]
fn proof_formats() {
    let text = cli(&["poker", "proof", "full-house"]);
    assert_eq!(text.code, EXIT_OK);
    assert!(text.stdout.contains("Claim. "));
    assert!(text.stdout.contains("C(13,1)\u{00B7}C(4,3)\u{00B7}C(12,1)\u{00B7}C(4,2) = 3744"));
    let steps = cli(&["poker", "proof", "full-house", "--steps"]);
    assert!(steps.stdout.starts_with("claim: "));
    assert!(steps.stdout.trim_end().ends_with("qed: \u{25A1}"));
}

#[test]
fn graph_analyze_konigsberg() {
    let out = cli(&["graph", "analyze", &fixture("konigsberg.graph")]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().next(), Some("NoTrail: 4 vertices of odd degree"));
    assert!(out.stdout.contains("kneiphof    5  odd"));
}

#[test]
fn graph_trail_and_proof_exit_codes() {
    let k = fixture("konigsberg.graph");
    assert_eq!(cli(&["graph", "trail", &k]).code, EXIT_NEGATIVE);
    let proof = cli(&["graph", "proof", &k, "--vocab", "bridges"]);
    assert_eq!(proof.code, EXIT_OK);
    assert!(proof.stdout.contains("4 vertices and 7 edges"));

    let dir = std::env::temp_dir().join(format!("claimproof-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let square = dir.join("square.graph");
    std::fs::write(&square, "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\nedge c a\n").unwrap();
    let square = square.to_string_lossy().into_owned();
    let trail = cli(&["graph", "trail", &square]);
    assert_eq!(trail.code, EXIT_OK);
    assert!(trail.stdout.starts_with("Eulerian circuit over 3 edges:"), "{}", trail.stdout);
    let no_proof = cli(&["graph", "proof", &square]);
    assert_eq!(no_proof.code, EXIT_NEGATIVE);
    assert!(no_proof.stdout.starts_with("Circuit"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cat_and_mouse_rooms_vocabulary() {
    let out = cli(&["graph", "proof", &fixture("cat_and_mouse.graph"), "--vocab", "rooms"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("The rooms "));
}

#[test]
fn rubric_score_fixtures() {
    let out = cli(&["rubric", "score", &fixture("poker.rubric"), &fixture("poker_full.marks")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.trim_end().ends_with("Total           100 / 100"), "{}", out.stdout);
    let writing = cli(&["rubric", "score", &fixture("writing.rubric"), &fixture("writing_sample.marks")]);
    assert!(writing.stdout.trim_end().ends_with("10 / 15"), "{}", writing.stdout);
    // marks for the wrong rubric
    let wrong = cli(&["rubric", "score", &fixture("poker.rubric"), &fixture("writing_sample.marks")]);
    assert_eq!(wrong.code, EXIT_USAGE);
    assert!(wrong.stderr.starts_with("error: "));
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["poker", "bogus"]).code, EXIT_USAGE);
    assert_eq!(cli(&["poker", "count", "--values", "0"]).code, EXIT_USAGE);
    assert_eq!(cli(&["poker", "count", "--ace", "low"]).code, EXIT_USAGE);
    assert_eq!(cli(&["graph", "analyze", "/nonexistent/file.graph"]).code, EXIT_USAGE);
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("poker"));
}
