//! End-to-end tests of the `ftsnd` binary: file round trips, exit codes,
//! and the worked examples of each subcommand.

use std::path::{Path, PathBuf};
use std::process::Command;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ftsnd"))
        .args(args)
        .output()
        .expect("spawn ftsnd");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn construct_output_round_trips_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["construct", "middle-layer", "--m", "5"],
        vec!["construct", "steiner", "--m", "8"],
        vec!["construct", "hadamard", "--e", "2"],
        vec!["construct", "greedy", "--n", "9", "--d", "2", "--w", "4"],
        vec!["construct", "complete-uniform", "--n", "5", "--k", "2"],
        vec!["construct", "disjoint-pair", "--m", "6", "--e", "2"],
    ] {
        let file = dir.path().join("out.txt");
        let mut full = args.clone();
        full.extend(["--verify", "--quiet", "--out", file.to_str().unwrap()]);
        let (code, _, err) = run(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let first = std::fs::read_to_string(&file).unwrap();

        // Parse back and re-emit through verify + a second construct run.
        let (code, _, _) = run(&["verify", file.to_str().unwrap(), "--e", "0"]);
        assert!(code == 0 || code == 1, "verify must parse {args:?}");
        let (code2, _, _) = run(&full);
        assert_eq!(code2, 0);
        let second = std::fs::read_to_string(&file).unwrap();
        assert_eq!(first, second, "canonical emission is byte-stable for {args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "m=4 n=2\n1 2\n3 4\n").unwrap();
    assert_eq!(run(&["verify", good.to_str().unwrap(), "--e", "1"]).0, 0);
    assert_eq!(run(&["verify", good.to_str().unwrap(), "--e", "2"]).0, 1);
    // Oracle path agrees.
    assert_eq!(run(&["verify", good.to_str().unwrap(), "--e", "1", "--oracle"]).0, 0);
    assert_eq!(run(&["verify", good.to_str().unwrap(), "--e", "2", "--oracle"]).0, 1);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "m=4 n=2\n2 1\n3 4\n").unwrap();
    let (code, _, err) = run(&["verify", bad.to_str().unwrap(), "--e", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "parse errors carry line numbers: {err}");

    assert_eq!(run(&["verify", "--e", "1"]).0, 2, "missing args are usage errors");
}

#[test]
fn verify_reports_violating_pair() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("chain.txt");
    std::fs::write(&file, "m=3 n=2\n1 2\n1 2 3\n").unwrap();
    let (code, out, _) = run(&["verify", file.to_str().unwrap(), "--e", "0"]);
    assert_eq!(code, 1);
    assert!(out.contains("FTSND: no"));
    assert!(out.contains("violating pair"), "{out}");
    assert!(out.contains("A_1"), "{out}");
}

#[test]
fn json_form_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sys.json");
    std::fs::write(&file, r#"{"m": 4, "blocks": [[1, 2], [3, 4]]}"#).unwrap();
    let (code, out, _) = run(&["verify", file.to_str().unwrap(), "--e", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("FTSND: yes"));
}

#[test]
fn bounds_examples() {
    let (code, out, _) = run(&["bounds", "--m", "8", "--e", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("N(8, 1) = 14"), "{out}");

    let and_table = data_dir().join("and_table.txt");
    let (code, out, _) = run(&[
        "bounds", "--m", "13", "--e", "1", "--andw-table", and_table.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("N(13, 1) in"), "open cell stays a bracket: {out}");

    // Unknown flag and bad values are usage errors.
    assert_eq!(run(&["bounds", "--m", "8"]).0, 2);
    assert_eq!(run(&["bounds", "--m", "0", "--e", "0"]).0, 2);
}

#[test]
fn search_writes_witness_and_certify_accepts_it() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w62.txt");
    let (code, out, _) = run(&[
        "search", "--m", "6", "--e", "1", "--time-limit", "60",
        "--witness-out", witness.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("N(6, 1) = 4"), "{out}");
    let (code, out, _) = run(&["certify", "--e", "1", "--in", witness.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains(">= 4"), "{out}");

    // An open cell with an exhausted budget exits 3 and prints a bracket.
    // (Note that a tiny node limit does not force a bracket wherever the
    // warm-start witness already meets the upper bound, e.g. at (12, 1).)
    let (code, out, _) = run(&["search", "--m", "13", "--e", "1", "--node-limit", "1"]);
    assert!(out.contains("budget exhausted"), "{out}");
    assert_eq!(code, 3);
}

#[test]
fn search_canonical_first_block_agrees() {
    let (code, out, _) = run(&[
        "search", "--m", "7", "--e", "1", "--time-limit", "60", "--canonical-first-block",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("N(7, 1) = 7"), "{out}");
}

#[test]
fn table_examples() {
    let and_table = data_dir().join("and_table.txt");
    let (code, out, _) = run(&[
        "--format", "tsv", "table", "--m-max", "13", "--budget", "0",
        "--andw-table", and_table.to_str().unwrap(), "--quiet",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    let cell = |m: usize, e: usize| rows[m][e + 1];
    assert_eq!(cell(8, 1), "14");
    assert_eq!(cell(5, 1), "2");
    assert_eq!(cell(1, 0), "1");
    assert_eq!(cell(2, 1), "1", "unfilled entries render as 1");
    assert_eq!(cell(3, 2), "1");
    assert_eq!(cell(2, 0), "2");

    // (13, 1) is open: a bracket with lower >= Levenshtein and upper <= 256.
    let (lo, hi) = cell(13, 1).split_once('-').expect("bracket cell");
    let lo: u128 = lo.parse().unwrap();
    let hi: u128 = hi.parse().unwrap();
    assert!(lo >= 40 && hi <= 256, "got {lo}-{hi}");

    // Blank cells where e >= m.
    assert_eq!(cell(1, 1), "");
}

#[test]
fn table_text_has_provenance_footnote() {
    let (code, out, _) = run(&["table", "--m-max", "6", "--budget", "30"]);
    assert_eq!(code, 0);
    assert!(out.contains("provenance"), "{out}");
    assert!(out.contains("unfilled entries equal 1"), "{out}");
}

#[test]
fn simulate_fano_examples() {
    let dir = tempfile::tempdir().unwrap();
    let fano = dir.path().join("fano.txt");
    let (code, _, _) = run(&[
        "construct", "steiner", "--m", "7", "--quiet", "--out", fano.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    // V = complement of block 1 = {1,2,4} addresses exactly nanowire 1.
    let (code, out, _) = run(&[
        "simulate", fano.to_str().unwrap(), "--activate", "3 5 6 7",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("addressed nanowires: 1\n"), "{out}");
    assert!(out.contains("all nanowires independently addressable"), "{out}");

    // One fault: still all independently addressable (1-fault tolerant).
    let (code, out, _) = run(&[
        "simulate", fano.to_str().unwrap(), "--activate", "none", "--fault", "1:2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("after: all nanowires independently addressable"), "{out}");

    // Two adversarial faults on one block break independence: block 1
    // {1,2,4} reduced to {1}, a subset of block 2 {1,3,7}'s complement
    // situation — the decoder must report a violation.
    let (code, out, _) = run(&[
        "simulate", fano.to_str().unwrap(), "--activate", "none",
        "--fault", "1:2", "--fault", "1:4",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("after: NOT independently addressable"), "{out}");

    // Inapplicable fault is a usage error.
    let (code, _, err) = run(&[
        "simulate", fano.to_str().unwrap(), "--fault", "1:3",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("fault"), "{err}");
}

#[test]
fn infobits_report() {
    let dir = tempfile::tempdir().unwrap();
    // A certified 2-diffbounded code at (12, 1) with 132 blocks: k = 7.
    let steiner12 = dir.path().join("s12.txt");
    run(&["construct", "steiner", "--m", "12", "--quiet", "--out", steiner12.to_str().unwrap()]);
    // An invalid entry: a chain is not even 1-diffbounded.
    let chain = dir.path().join("chain.txt");
    std::fs::write(&chain, "m=3 n=2\n1 2\n1 2 3\n").unwrap();

    let reference = data_dir().join("info_bits_reference.txt");
    let (code, out, _) = run(&[
        "--format", "tsv", "infobits", "--e", "1",
        "--reference", reference.to_str().unwrap(),
        steiner12.to_str().unwrap(), chain.to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "an invalid file makes the report exit 1");
    assert!(out.contains("s12.txt\t1\t12\t132\t7"), "{out}");
    assert!(out.contains("chain.txt\tinvalid"), "{out}");

    // Empty file list: headers only, success.
    let (code, out, _) = run(&["infobits", "--e", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1, "{out}");
}
