use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use syt_core::truncated::conjecture_square_minus_two;
use syt_core::{count_syt, CellRegion, Partition};

fn syt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(args)
        .env_remove("SYT_ORACLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Runs and expects exit code `code`; returns stdout.
fn run(args: &[&str], code: i32) -> String {
    let o = syt(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "syt {args:?}\nstdout: {}\nstderr: {}",
        stdout(&o),
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn count_examples() {
    assert_eq!(run(&["count", "stair:4/1"], 0), "4\n");
    assert_eq!(run(&["count", "part:1"], 0), "1\n");
    assert_eq!(run(&["count", "stair:4/1", "--method", "oracle"], 0), "4\n");
    assert_eq!(run(&["count", "stair:4/1", "--method", "formula"], 0), "4\n");
    assert_eq!(run(&["count", "rect:3x3/1", "--check"], 0), "formula 12\noracle  12\nOK\n");
    assert_eq!(run(&["count", "part:2,2"], 0), "2\n");
}

#[test]
fn count_errors_are_usage_errors() {
    run(&["count", "stair:6/2,1,1", "--method", "formula"], 2);
    run(&["count", "stair:6/2,1,1", "--check"], 2);
    run(&["count", "part:1,2"], 2);
    run(&["count", "box:3"], 2);
    run(&["count", "stair:3/3"], 2);
    run(&["count", "part:1", "--method", "guess"], 2);
    run(&[], 2);
}

#[test]
fn conjectured_values_are_marked() {
    let out = run(&["count", "rect:4x4/2", "--method", "formula"], 0);
    assert!(out.starts_with("1176\n") && out.contains("CONJECTURE"), "{out}");
    let out = run(&["count", "rect:4x4/2", "--check"], 0);
    assert!(out.contains("OK (CONJECTURE)"), "{out}");
    let out = run(&["verify", "conjecture", "--n", "4"], 0);
    assert!(out.contains("CONJECTURE") && out.contains("PASS"), "{out}");
}

#[test]
fn long_counts_show_their_length() {
    let out = run(&["count", "rect:12x12"], 0);
    assert!(out.trim_end().ends_with("digits)"), "{out}");
    let digits = out.split_whitespace().next().unwrap();
    assert!(digits.len() > 80 && digits.bytes().all(|b| b.is_ascii_digit()));
    assert_eq!(run(&["count", "part:3,3,2"], 0), "42\n");
}

#[test]
fn factor_reports_the_large_prime() {
    let out = run(&["factor", "rect:6x7/2"], 0);
    assert!(out.contains("N = 40"), "{out}");
    assert!(out.contains("largest prime 5333\n"), "{out}");
    assert!(out.contains("NOT 40-smooth"), "{out}");
    let out = run(&["factor", "part:1"], 0);
    assert!(out.contains("count 1\nfactors 1\n"), "{out}");
    assert!(out.contains("\n1-smooth\n"), "{out}");
    let out = run(&["factor", "stair:6/1"], 0);
    assert!(out.contains("count 6384") && out.contains("\n20-smooth\n"), "{out}");
}

#[test]
fn verify_examples() {
    assert_eq!(run(&["verify", "main-stair", "--mu", "2", "--m", "1"], 0), "main-stair mu=(2) m=1\nLHS 2 = RHS 2\nPASS\n");
    assert!(run(&["verify", "binomial", "--t1", "0", "--t2", "0", "--N", "5"], 0).contains("LHS 6 = RHS 6\nPASS"));
    for args in [
        vec!["sum-shifted", "--m", "4"],
        vec!["sum-rect", "--m", "3", "--n", "2"],
        vec!["coeff-c", "--mu", "4,3", "--m", "2"],
        vec!["coeff-d", "--mu", "1", "--k", "2", "--m", "2", "--n", "1"],
        vec!["main-rect", "--mu", "1", "--k", "2", "--m", "1", "--n", "1"],
        vec!["pivot-stair", "--mu", "3,1", "--m", "0"],
        vec!["pivot-stair", "--mu", "4,2", "--m", "1"],
        vec!["pivot-rect", "--mu", "1", "--k", "2", "--m", "1", "--n", "1"],
        vec!["pivot-rect", "--k", "2", "--m", "1", "--n", "1"],
    ] {
        let mut full = vec!["verify"];
        full.extend(args);
        let out = run(&full, 0);
        assert!(out.ends_with("PASS\n"), "{out}");
    }
}

#[test]
fn verify_usage_errors() {
    run(&["verify", "no-such-identity"], 2);
    run(&["verify", "main-stair", "--mu", "2"], 2);
    run(&["verify", "main-stair", "--mu", "1", "--m", "1"], 2);
    run(&["verify", "coeff-c", "--mu", "3", "--m", "2", "--t", "9"], 2);
}

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    family: String,
    params: String,
    #[serde(rename = "N")]
    size: usize,
    count: String,
    largest_prime: String,
    n_smooth: bool,
}

#[test]
fn scan_square_minus_two_matches_the_oracle() {
    let out = run(&["scan", "--family", "square-minus-two", "--n", "2..7", "--format", "csv"], 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["family", "params", "N", "count", "largest_prime", "n_smooth"]);
    let rows: Vec<Row> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    for (row, n) in rows.iter().zip(2..) {
        let region = CellRegion::truncated_rectangle(n, n, &Partition::new(vec![2]).unwrap()).unwrap();
        assert_eq!(row.params, format!("n={n}"));
        assert_eq!(row.size, n * n - 2);
        assert_eq!(row.count, conjecture_square_minus_two(n).unwrap().to_string());
        assert_eq!(row.count, count_syt(&region).to_string());
    }
}

#[test]
fn scan_finds_the_non_smooth_truncation() {
    let out = run(&["scan", "--family", "rect-trunc", "--m", "6", "--n", "7", "--kappa", "2", "--format", "csv"], 0);
    let rows: Vec<Row> = csv::Reader::from_reader(out.as_bytes()).deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].size, 40);
    assert_eq!(rows[0].largest_prime, "5333");
    assert!(!rows[0].n_smooth);
}

#[test]
fn empty_ranges_print_only_the_header() {
    let text = run(&["scan", "--family", "stair-sq", "--m", "3..2", "--k", "2"], 0);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("family"));
    let csv = run(&["scan", "--family", "rect-sq+1", "--m", "1", "--n", "1", "--k", "5..4", "--format", "csv"], 0);
    assert_eq!(csv, "family,params,N,count,largest_prime,n_smooth\n");
    assert_eq!(run(&["scan", "--family", "stair-corner", "--m", "1..0", "--format", "json"], 0), "[]\n");
}

#[test]
fn scan_json_round_trips_and_is_deterministic() {
    let args = ["scan", "--family", "rect-sq", "--m", "0..3", "--n", "0..3", "--k", "2..4", "--format", "json"];
    let first = run(&args, 0);
    let rows: Vec<Row> = serde_json::from_str(&first).unwrap();
    assert_eq!(rows.len(), 48);
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", first);
    assert_eq!(run(&args, 0), first);
    // parameter order regardless of which rows finish first
    assert_eq!(rows[0].params, "m=0,n=0,k=2");
    assert_eq!(rows[1].params, "m=0,n=0,k=3");
    assert_eq!(rows[47].params, "m=3,n=3,k=4");
}

#[test]
fn scan_rows_agree_with_count() {
    let out = run(&["scan", "--family", "stair-sq+1", "--m", "0..2", "--k", "1..2", "--format", "csv"], 0);
    let rows: Vec<Row> = csv::Reader::from_reader(out.as_bytes()).deserialize().map(Result::unwrap).collect();
    let shapes = ["stair:2", "stair:4/2,1", "stair:3", "stair:5/2,1", "stair:4", "stair:6/2,1"];
    for (row, shape) in rows.iter().zip(shapes) {
        assert_eq!(run(&["count", shape, "--method", "oracle"], 0).trim(), row.count, "{shape}");
    }
}

#[test]
fn scan_oracle_budget() {
    run(&["scan", "--family", "stair-trunc", "--m", "10"], 2);
    let o = Command::new(env!("CARGO_BIN_EXE_syt"))
        .args(["scan", "--family", "stair-trunc", "--m", "10", "--kappa", "1", "--format", "csv"])
        .env("SYT_ORACLE_MAX_N", "60")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    run(&["scan", "--family", "stair-sq", "--m", "0..1000", "--k", "2..1000"], 2);
    run(&["scan", "--family", "stair-sq", "--m", "0..2", "--k", "1..2"], 2);
    run(&["scan", "--family", "stair-sq", "--m", "0..2"], 2);
}

#[test]
fn enumerate_examples() {
    let out = run(&["enumerate", "stair:4/1"], 0);
    let blocks: Vec<&str> = out.split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    assert_eq!(blocks[0], "1 2 3\n  4 5 6\n    7 8\n      9");
    assert_eq!(blocks[3], "1 2 4\n  3 5 7\n    6 8\n      9\n");
    assert_eq!(run(&["enumerate", "part:1"], 0), "1\n");
    assert_eq!(run(&["enumerate", "part:2,2", "--limit", "1"], 0), "1 2\n3 4\n");
    assert_eq!(run(&["enumerate", "part:2,2"], 0), "1 2\n3 4\n\n1 3\n2 4\n");
    run(&["enumerate", "shifted:2,2"], 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "rect:3x3/1"],
        vec!["factor", "rect:6x7/2"],
        vec!["scan", "--family", "rect-corner", "--m", "0..4", "--n", "0..4"],
    ] {
        assert_eq!(run(&args, 0), run(&args, 0));
    }
}
