use std::process::{Command, Output};

use hodge_sl2_cli::{ClassificationReport, HodgeTateReport, OrbitsReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-sl2"))
        .args(args)
        .env_remove("HODGE_SL2_WEYL_CAP")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.is_ascii());
    s
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> T {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn c3_13_has_seven_rows() {
    let r: ClassificationReport = json(&["classify", "C3", "--grading", "1,3"]);
    assert_eq!(r.schema_version, 1);
    let mut codims: Vec<usize> = r.rows.iter().map(|r| r.codim).collect();
    codims.sort_unstable();
    assert_eq!(codims, vec![1, 1, 2, 3, 5, 6, 8]);
    assert!(stdout(&["classify", "C3", "--grading", "1,3"]).contains("7 classes"));
}

#[test]
fn f4_header_and_rows() {
    let args = ["classify", "F4", "--grading", "1", "--rep", "0,0,0,1", "--n", "2"];
    let text = stdout(&args);
    assert!(text.contains("h=(6,14,6)"), "{text}");
    let r: ClassificationReport = json(&args);
    assert_eq!(r.rows.len(), 4);
    assert_eq!(r.domain.hodge_numbers, Some(vec![6, 14, 6]));
    // n defaults to the natural weight
    let r2: ClassificationReport = json(&args[..6]);
    assert_eq!(r2.domain.n, 2);
}

#[test]
fn a1_upper_half_plane() {
    let r: ClassificationReport = json(&["classify", "A1", "--grading", "1"]);
    assert_eq!(r.rows.len(), 1);
    assert_eq!(r.rows[0].levi, "{s1}");
    assert_eq!(r.rows[0].codim, 1);
    let r: ClassificationReport = json(&["classify", "A1", "--grading", "1", "--include-trivial"]);
    assert_eq!(r.rows.len(), 2);
}

#[test]
fn hodge_tate_verdicts() {
    assert_eq!(stdout(&["hodge-tate", "B2", "--grading", "2"]), "no\n");
    assert_eq!(stdout(&["hodge-tate", "B2", "--grading", "1"]), "yes, S'={s1+s2}\n");
    assert!(stdout(&["hodge-tate", "G2", "--grading", "1,2"]).starts_with("yes"));
    let r: HodgeTateReport = json(&["hodge-tate", "B2", "--grading", "1"]);
    assert!(r.admits_hodge_tate);
    assert!(r.witness.unwrap().hodge_tate);
}

#[test]
fn grading_mask_and_indices_agree() {
    let a: ClassificationReport = json(&["classify", "C3", "--grading", "1,1,1"]);
    let b: ClassificationReport = json(&["classify", "C3", "--grading", "1,2,3"]);
    assert_eq!(a, b);
    assert_eq!(a.rows.len(), 7);
}

#[test]
fn orbit_listings() {
    let r: OrbitsReport = json(&["orbits", "A3"]);
    assert_eq!(r.char_vectors.len(), 5);
    let r: OrbitsReport = json(&["orbits", "A1"]);
    assert_eq!(r.char_vectors, vec![vec![0], vec![2]]);
    let r: OrbitsReport = json(&["orbits", "C4", "--even-jm"]);
    assert_eq!(r.even_jm.unwrap().len(), 6);
    assert!(stdout(&["orbits", "C4", "--even-jm"]).contains("6 even JM index sets"));
}

#[test]
fn json_round_trips_and_matches_text() {
    let args = ["diamond", "B2", "--grading", "1", "--format", "json"];
    let s = stdout(&args);
    let r: ClassificationReport = serde_json::from_str(&s).unwrap();
    assert_eq!(serde_json::from_str::<ClassificationReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
    assert!(r.rows.iter().all(|row| row.diamond.is_some()));

    let text = stdout(&["classify", "B2", "--grading", "1"]);
    let text_codims: Vec<usize> = text
        .lines()
        .skip(4)
        .map(|l| l.split_whitespace().next().unwrap().parse().unwrap())
        .collect();
    let json_codims: Vec<usize> = r.rows.iter().map(|r| r.codim).collect();
    assert_eq!(text_codims, json_codims);
}

#[test]
fn diamonds_are_drawn_with_stars() {
    let text = stdout(&["diamond", "B2", "--grading", "1"]);
    assert!(text.contains("q=  1  . . *"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "X3", "--grading", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "B2", "--grading", "3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "B2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "E8", "--grading", "1"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "B2", "--grading", "1", "--weyl-cap", "4"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_hodge-sl2"))
        .args(["classify", "B2", "--grading", "1"])
        .env("HODGE_SL2_WEYL_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("order 8"));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_hodge-sl2"))
        .args(["classify", "B2", "--grading", "1", "--weyl-cap", "8"])
        .env("HODGE_SL2_WEYL_CAP", "4")
        .output()
        .unwrap();
    assert!(flag_wins.status.success());
}
