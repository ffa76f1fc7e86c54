use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn psi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psi"))
        .args(args)
        .env_remove("PSI_THREADS")
        .output()
        .expect("spawn psi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn eval_example() {
    let o = psi(&["psi", "eval", "--a", "1", "--b", "4", "--n", "16", "--mod", "31"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"value\":\"0\"}\n");
}

#[test]
fn eval_methods_agree() {
    for n in ["1", "7", "30"] {
        let vals: Vec<String> = ["ladder", "recurrence", "explicit"]
            .iter()
            .map(|m| stdout(&psi(&["psi", "eval", "--a", "3", "--b", "-5", "--n", n, "--method", m])))
            .collect();
        assert!(vals.windows(2).all(|w| w[0] == w[1]), "n = {n}: {vals:?}");
    }
}

#[test]
fn modular_eval_matches_reduced_integer() {
    let full = json_lines(&psi(&["psi", "eval", "--a", "3", "--b", "7", "--n", "40"]));
    let reduced = json_lines(&psi(&["psi", "eval", "--a", "3", "--b", "7", "--n", "40", "--mod", "1009"]));
    let v: i128 = full[0]["value"].as_str().unwrap().parse().unwrap();
    let r: i128 = reduced[0]["value"].as_str().unwrap().parse().unwrap();
    assert_eq!(v.rem_euclid(1009), r);
}

#[test]
fn usage_errors_exit_two() {
    let o = psi(&["psi", "eval", "--a", "x", "--b", "2", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "parse");

    let o = psi(&["mersenne", "test", "--p", "9", "--method", "psi"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(psi(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_three() {
    let o = psi(&["mersenne", "test", "--p", "17", "--method", "ab"]);
    assert_eq!(o.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "capacity");

    let o = psi(&["bridges", "period", "--a", "1", "--b", "3", "--cap", "50"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn scan_formats() {
    let base = ["mersenne", "scan", "--pmax", "13", "--no-timing"];
    let json = json_lines(&psi(&base));
    let primes: Vec<u64> = json
        .iter()
        .filter(|r| r["verdict"] == "prime")
        .map(|r| r["p"].as_u64().unwrap())
        .collect();
    assert_eq!(primes, [5, 7, 13]);
    let keys: Vec<&String> = json[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["method", "p", "verdict", "residues", "ratios", "elapsed_ms", "notes"]);

    let csv = stdout(&psi(&[&["--format", "csv"][..], &base[..]].concat()));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("method,p,verdict,residues,ratios,elapsed_ms,notes"));
    assert_eq!(lines.count(), 4);

    let text = stdout(&psi(&[&["--format", "text"][..], &base[..]].concat()));
    assert!(text.lines().next().unwrap().starts_with("method=ll  p=5  verdict=prime"));
}

#[test]
fn composite_verdicts_exit_zero() {
    let o = psi(&["mersenne", "test", "--p", "11", "--method", "mu"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["verdict"], "condition-fails");
}

#[test]
fn verify_suites_pass() {
    for suite in ["eightlevels", "powersums", "theta", "fundamental"] {
        let o = psi(&["verify", suite, "--nmax", "8"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert!(json_lines(&o).iter().all(|r| r["passed"] == true), "{suite}");
    }
}

#[test]
fn coeff_table_direction() {
    let o = psi(&["coeff", "table", "--n", "6", "--alpha", "1", "--beta", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let polys: Vec<String> = json_lines(&o).iter().map(|r| r["coeff"].as_str().unwrap().to_string()).collect();
    assert_eq!(polys, ["3*a^2*b - b^3", "-6*a^2 - 6*a*b + 6*b^2", "12*a - 9*b", "2"]);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["mersenne", "scan", "--pmax", "61", "--method", "psi", "--no-timing"];
    let one = stdout(&psi(&[&["--threads", "1"][..], &args[..]].concat()));
    let four = stdout(&psi(&[&["--threads", "4"][..], &args[..]].concat()));
    assert_eq!(one, four);
}

#[test]
fn repro_matches_committed_results() {
    let dir = tempfile::tempdir().unwrap();
    let o = psi(&["repro", "all", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let committed = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/results");
    let mut n = 0;
    for entry in fs::read_dir(committed).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap();
        let fresh = fs::read_to_string(dir.path().join(name)).unwrap();
        assert_eq!(fresh, fs::read_to_string(&path).unwrap(), "{name:?}");
        n += 1;
    }
    assert_eq!(n, 12);
}
