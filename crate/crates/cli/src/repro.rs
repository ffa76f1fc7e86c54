use std::fs;
use std::path::Path;

use serde::Serialize;

use psi_core::bridges;
use psi_core::eightlevels;
use psi_core::mersenne::TauVariant;
use psi_core::report::TestReport;

use crate::args::{Format, Global, MethodOpts, TestMethod};
use crate::commands::*;
use crate::output::render_string;

#[derive(Serialize)]
struct FileRecord {
    file: String,
    records: usize,
    passed: bool,
}

fn opts(method: TestMethod) -> MethodOpts {
    MethodOpts {
        method,
        mu: None,
        limit: None,
    }
}

fn untimed(mut rs: Vec<TestReport>) -> Vec<TestReport> {
    for r in &mut rs {
        r.elapsed_ms = 0.0;
    }
    rs
}

struct Writer<'a> {
    dir: &'a Path,
    index: Vec<FileRecord>,
}

impl Writer<'_> {
    fn put<T: Serialize>(&mut self, name: &str, records: &[T], passed: bool) -> std::io::Result<()> {
        fs::write(self.dir.join(name), render_string(Format::Json, records))?;
        self.index.push(FileRecord {
            file: name.to_string(),
            records: records.len(),
            passed,
        });
        Ok(())
    }
}

/// Known classification of `2^p − 1` for the scanned exponents.
fn scan_matches(reports: &[TestReport]) -> bool {
    reports
        .iter()
        .all(|r| r.primality() == Some(matches!(r.p, 5 | 7 | 13 | 17 | 19 | 31)))
}

pub fn repro_all(g: &Global, out: &Path) -> CmdResult {
    let io = |e: std::io::Error| CliError {
        code: 2,
        reason: "io",
        message: e.to_string(),
    };
    fs::create_dir_all(out).map_err(io)?;
    let mut w = Writer { dir: out, index: Vec::new() };

    for (name, method) in [("mersenne_scan_ll.jsonl", TestMethod::Ll), ("mersenne_scan_psi.jsonl", TestMethod::Psi)] {
        let rs = untimed(scan(5, 31, &opts(method))?);
        let ok = scan_matches(&rs);
        w.put(name, &rs, ok).map_err(io)?;
    }

    let mut battery = Vec::new();
    for method in [TestMethod::Mu, TestMethod::Sum, TestMethod::Necessary, TestMethod::Composite, TestMethod::Ab] {
        battery.extend(untimed(scan(5, 13, &opts(method))?));
    }
    let ok = battery
        .iter()
        .filter(|r| r.method != "necessary" && r.method != "composite")
        .all(|r| r.primality() == Some(matches!(r.p, 5 | 7 | 13)));
    w.put("mersenne_battery.jsonl", &battery, ok).map_err(io)?;

    let tau = tau_records(&[3, 4, 5, 6, 7], &TauVariant::ALL)?;
    let ok = tau.iter().all(|r| r.passed);
    w.put("tau_identities.jsonl", &tau, ok).map_err(io)?;

    let periods = period_records(&bridges::period_catalogue(), bridges::DEFAULT_PERIOD_CAP)?;
    let ok = periods.iter().all(|r| r.passed);
    w.put("periods.jsonl", &periods, ok).map_err(io)?;

    let br = bridge_records(&bridges::registry(), None);
    let ok = br.iter().all(|r| r.passed);
    w.put("bridges.jsonl", &br, ok).map_err(io)?;

    for (name, n, dir) in [("coeff_table_n4.jsonl", 4u64, None), ("coeff_table_n6_dir_1_2.jsonl", 6, Some((1i64, 2i64)))] {
        let t = eightlevels::coeff_table(n)?;
        let rows: Vec<(u64, String)> = t
            .entries
            .iter()
            .map(|e| {
                let s = match dir {
                    Some((al, be)) => e.at_direction(al, be).to_string(),
                    None => e.value.to_string(),
                };
                (e.r, s)
            })
            .collect();
        #[derive(Serialize)]
        struct Row {
            n: u64,
            r: u64,
            coeff: String,
        }
        let rows: Vec<Row> = rows.into_iter().map(|(r, coeff)| Row { n, r, coeff }).collect();
        w.put(name, &rows, true).map_err(io)?;
    }

    for (name, checks) in [
        ("verify_eightlevels.jsonl", eightlevels_checks(16, g.seed)?),
        ("verify_theta.jsonl", theta_checks(12)?),
        ("verify_fundamental.jsonl", fundamental_checks(12, g.seed)?),
        ("verify_powersums.jsonl", powersums_checks(10)?),
    ] {
        let ok = all_passed(&checks);
        w.put(name, &checks, ok).map_err(io)?;
    }

    let ok = w.index.iter().all(|f| f.passed);
    Ok(Outcome {
        text: render_string(g.format, &w.index),
        passed: ok,
    })
}
