use std::fs;
use std::process::{Command, Output};

use symbases::{analyze, cover, search_extremal, Basis64, BasisReport, ExtremalResult};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbases"))
        .args(args)
        .env_remove("NO_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const A9: &str = "1,3,5,8,20,23,25,27,28";

#[test]
fn cover_command() {
    let o = run(&[
        "cover", "--basis", "1,3,6,10", "--h", "3", "--format", "table",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "23");

    let o = run(&["cover", "--basis", "1", "--h", "5", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "5");

    let o = run(&["cover", "--basis", "1,3,3", "--h", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotIncreasing"));
}

#[test]
fn redirected_output_defaults_to_json() {
    let o = run(&["cover", "--basis", "1,3,6,10", "--h", "2"]);
    assert_eq!(stdout(&o).trim(), r#"{"basis":"1,3,6,10","h":2,"cover":4}"#);
}

#[test]
fn overflow_exit_code() {
    let o = run(&["cover", "--basis", "1,18446744073709551615", "--h", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn analyze_is_a_thin_wrapper() {
    let o = run(&["analyze", "--basis", A9, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let basis: Basis64 = A9.parse().unwrap();
    let expected = serde_json::to_string(&analyze(&basis, None).unwrap()).unwrap();
    assert_eq!(stdout(&o).trim(), expected);

    let parsed: BasisReport<u64> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(
        (parsed.h0, parsed.h1, parsed.counterexample),
        (3, Some(4), true)
    );
    assert_eq!(serde_json::to_string(&parsed).unwrap(), stdout(&o).trim());
}

#[test]
fn analyze_small_and_capped() {
    let o = run(&["analyze", "--basis", "1,2,3", "--format", "table"]);
    let text = stdout(&o);
    assert!(text.contains("conjecture_holds  true"));
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["analyze", "--basis", "1,3,6,10", "--cap", "5"]);
    assert_eq!(o.status.code(), Some(4));
    let r: BasisReport<u64> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(!r.symmetric && !r.h1_found && r.h1.is_none());
}

#[test]
fn family_command() {
    let o = run(&["family", "--kind", "a9", "--p", "3", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), A9);
    let o = run(&["family", "--kind", "a10", "--p", "5", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "1,5,7,12,47,82,87,89,93,94");
    let o = run(&["family", "--kind", "a10", "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let out_s = out.to_str().unwrap();

    let o = run(&["scan", "--k", "5", "--ak-max", "30", "--out", out_s]);
    assert_eq!(o.status.code(), Some(0));
    let last = fs::read_to_string(&out)
        .unwrap()
        .lines()
        .last()
        .unwrap()
        .to_string();
    assert!(last.starts_with(r#"{"summary":{"scanned":"#));
    assert!(last.contains(r#""counterexamples":0"#));

    let o = run(&["scan", "--k", "9", "--ak-max", "28", "--out", out_s]);
    assert_eq!(o.status.code(), Some(5));
    let text = fs::read_to_string(&out).unwrap();
    let a9_line = text.lines().find(|l| l.contains(A9)).unwrap();
    assert!(a9_line.contains(r#""counterexample":true"#));

    let o = run(&["scan", "--k", "1", "--ak-max", "1", "--out", out_s]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains(r#""scanned":1,"#));
}

#[test]
fn scan_resume_through_cli() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.jsonl");
    let part = dir.path().join("part.jsonl");
    let base = [
        "scan",
        "--k",
        "7",
        "--ak-max",
        "40",
        "--threads",
        "2",
        "--out",
    ];

    run(&[&base[..], &[full.to_str().unwrap()]].concat());
    let o = run(&[&base[..], &[part.to_str().unwrap(), "--stop-after", "100"]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&part).unwrap().lines().count(), 100);
    run(&[&base[..], &[part.to_str().unwrap(), "--resume"]].concat());
    assert_eq!(fs::read(&full).unwrap(), fs::read(&part).unwrap());
}

#[test]
fn extremal_command() {
    let o = run(&["extremal", "--h", "1", "--k", "3", "--format", "json"]);
    let r: ExtremalResult<u64> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r, search_extremal(1, 3, None).unwrap());
    assert_eq!(r.n_star, 3);

    let o = run(&["extremal", "--h", "2", "--k", "2", "--format", "table"]);
    assert!(stdout(&o).contains("n_star      4"));

    let o = run(&["extremal", "--h", "9", "--k", "9"]);
    assert_eq!(o.status.code(), Some(6));
}

#[test]
fn basis_file_emits_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bases.txt");
    fs::write(&path, "# sample\n1,3,6,10\n\n1,3,3\n 1,2,3 \n").unwrap();
    let o = run(&["cover", "--basis-file", path.to_str().unwrap(), "--h", "3"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], r#"{"basis":"1,3,6,10","h":3,"cover":23}"#);
    assert!(lines[1].contains(r#""error""#));
    let n = cover(&"1,2,3".parse::<Basis64>().unwrap(), 3).unwrap();
    assert_eq!(
        lines[2],
        format!(r#"{{"basis":"1,2,3","h":3,"cover":{n}}}"#)
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn other_per_basis_commands() {
    let o = run(&["generation", "--basis", "1,3,6,10", "--x", "23", "--h", "3"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"basis":"1,3,6,10","x":23,"h":3,"coefficients":[0,1,0,2],"value":23,"weight":3}"#
    );
    let o = run(&["generation", "--basis", "1,3,6,10", "--x", "24", "--h", "3"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["symmetry", "--basis", A9]);
    assert!(stdout(&o).contains(r#""differences":[1,2,2,3,12,3,2,2,1],"meure_applicable":true"#));

    let o = run(&[
        "symmetrize",
        "--basis",
        "1,3,5,8,20",
        "--parity",
        "odd",
        "--format",
        "table",
    ]);
    assert_eq!(stdout(&o).trim(), A9);

    let o = run(&["reflect", "--basis", A9, "--x", "1"]);
    assert!(stdout(&o)
        .contains(r#""reflected":{"coefficients":[0,0,0,0,0,0,0,1,2],"value":83,"weight":3}"#));

    let o = run(&[
        "brute-cover",
        "--basis",
        "1,3,6,10",
        "--h",
        "3",
        "--format",
        "table",
    ]);
    assert_eq!(stdout(&o).trim(), "23");
    let o = run(&["brute-cover", "--basis", A9, "--h", "4", "--ceiling", "10"]);
    assert_eq!(o.status.code(), Some(6));

    let o = run(&["profile", "--basis", "1,3,6,10", "--h-max", "3"]);
    assert!(stdout(&o).contains(r#"{"h":3,"cover":23,"saturated":false}"#));

    let o = run(&[
        "enumerate",
        "--k",
        "3",
        "--ak-max",
        "6",
        "--format",
        "jsonl",
    ]);
    assert_eq!(stdout(&o), "\"1,2,3\"\n\"1,3,4\"\n\"1,4,5\"\n\"1,5,6\"\n");
}

#[test]
fn invalid_flags_exit_two() {
    assert_eq!(
        run(&["cover", "--basis", "1,2", "--h", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["cover", "--h", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["scan", "--k", "4", "--ak-max", "3", "--out", "/dev/null"])
            .status
            .code(),
        Some(2)
    );
}
