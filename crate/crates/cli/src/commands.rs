use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use psi_core::bridges::{self, BridgeSpec, PeriodCase};
use psi_core::eightlevels::{self, IdentityCheck};
use psi_core::exactmath::{ExactScalar, RingTag};
use psi_core::mersenne::{self, is_prime_u64, TauVariant};
use psi_core::powersums;
use psi_core::psi::{self, PsiParams};
use psi_core::report::TestReport;
use psi_core::Error;

use crate::args::*;
use crate::output::render_string;

/// A failed command: exit code plus a machine-readable reason.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub reason: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            reason: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, reason) = match &e {
            Error::Capacity { .. } => (3, "capacity"),
            Error::SymbolicCap { .. } => (3, "symbolic-cap"),
            Error::DegreeCap { .. } => (3, "degree-cap"),
            Error::NoPeriod(_) => (3, "no-period"),
            Error::NotPrime(_) => (2, "not-prime"),
            Error::ExponentTooSmall { .. } => (2, "exponent-too-small"),
            Error::Parse(_) => (2, "parse"),
            Error::RadicandMismatch { .. } | Error::InvalidRadicand(_) => (2, "radicand"),
            Error::RingMismatch { .. } => (2, "ring-mismatch"),
            Error::InvalidModulus(_) => (2, "modulus"),
            Error::NotInvertible { .. } => (1, "not-invertible"),
            Error::NonIntegral(_) => (1, "non-integral"),
            Error::NotDivisible => (1, "not-divisible"),
            Error::IndexOutOfRange { .. } => (2, "index-out-of-range"),
            Error::Precondition(_) => (2, "precondition"),
        };
        CliError {
            code,
            reason,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

/// Rendered output and whether every check in it passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok<T: Serialize>(g: &Global, records: &[T]) -> Self {
        Outcome {
            text: render_string(g.format, records),
            passed: true,
        }
    }

    fn checked<T: Serialize>(g: &Global, records: &[T], passed: bool) -> Self {
        Outcome {
            text: render_string(g.format, records),
            passed,
        }
    }
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ValueRecord {
    value: String,
}

#[derive(Serialize)]
struct PolyRecord {
    n: u64,
    poly: String,
}

#[derive(Serialize)]
struct LadderRecord {
    index: String,
    psi: String,
    psi_next: String,
}

fn parse_params(p: &Params) -> Result<PsiParams, CliError> {
    let ring = match &p.modulus {
        Some(m) => {
            if p.ring != "int" {
                return Err(CliError::usage("--mod requires the integer ring"));
            }
            RingTag::Modular(m.clone())
        }
        None => RingTag::from_str(&p.ring)?,
    };
    Ok(PsiParams::parse(&p.a, &p.b, &ring)?)
}

fn parse_index(n: &str) -> Result<BigInt, CliError> {
    let n = BigInt::from_str(n.trim()).map_err(|_| CliError::usage(format!("bad index {n:?}")))?;
    if n.sign() == num_bigint::Sign::Minus {
        return Err(CliError::usage("index must be nonnegative"));
    }
    Ok(n)
}

fn small_index(n: &BigInt) -> Result<u64, CliError> {
    u64::try_from(n).map_err(|_| CliError::usage("index too large for this method; use --method ladder"))
}

pub fn psi_cmd(g: &Global, cmd: &PsiCmd) -> CmdResult {
    match cmd {
        PsiCmd::Eval { params, n, method } => {
            let p = parse_params(params)?;
            let n = parse_index(n)?;
            let value = match method {
                EvalMethod::Ladder => psi::psi_ladder(&p, &n)?,
                EvalMethod::Recurrence => psi::psi_recurrence(&p, small_index(&n)?),
                EvalMethod::Explicit => psi::psi_explicit(&p, small_index(&n)?)?,
            };
            Ok(Outcome::ok(g, &[ValueRecord {
                value: value.to_string(),
            }]))
        }
        PsiCmd::Poly { n } => {
            let poly = psi::psi_symbolic(*n)?;
            Ok(Outcome::ok(g, &[PolyRecord {
                n: *n,
                poly: poly.to_string(),
            }]))
        }
        PsiCmd::Ladder { params, n } => {
            let p = parse_params(params)?;
            let rows: Vec<LadderRecord> = psi::ladder_trace(&p, &parse_index(n)?)?
                .into_iter()
                .map(|(k, lo, hi)| LadderRecord {
                    index: k.to_string(),
                    psi: lo.to_string(),
                    psi_next: hi.to_string(),
                })
                .collect();
            Ok(Outcome::ok(g, &rows))
        }
    }
}

// ---------------------------------------------------------------------------
// coeff
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CoeffRecord {
    n: u64,
    r: u64,
    coeff: String,
}

pub fn coeff_cmd(g: &Global, cmd: &CoeffCmd) -> CmdResult {
    let CoeffCmd::Table { n, alpha, beta } = cmd;
    let table = eightlevels::coeff_table(*n)?;
    let rows: Vec<CoeffRecord> = table
        .entries
        .iter()
        .map(|e| CoeffRecord {
            n: e.n,
            r: e.r,
            coeff: match (alpha, beta) {
                (Some(al), Some(be)) => e.at_direction(*al, *be).to_string(),
                _ => e.value.to_string(),
            },
        })
        .collect();
    Ok(Outcome::ok(g, &rows))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn par_checks<F>(ns: Vec<u64>, f: F) -> Result<Vec<IdentityCheck>, CliError>
where
    F: Fn(u64) -> psi_core::Result<Vec<IdentityCheck>> + Sync + Send,
{
    let parts: Vec<psi_core::Result<Vec<IdentityCheck>>> = ns.into_par_iter().map(f).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn eightlevels_checks(nmax: u64, seed: u64) -> Result<Vec<IdentityCheck>, CliError> {
    par_checks((1..=nmax).collect(), |n| {
        let mut out = vec![IdentityCheck::new(
            "expansion",
            n,
            eightlevels::verify_expansion_seeded(n, seed)?,
        )];
        let basis = eightlevels::expand_powersum_basis(n)?;
        let mut closed = true;
        for (k, want) in basis.iter().enumerate() {
            closed &= &eightlevels::eight_level_coeff(n, k as u64)? == want;
        }
        out.push(IdentityCheck::new("closed-form-coefficients", n, closed));
        out.push(IdentityCheck::new(
            "boundary-rows",
            n,
            eightlevels::boundary_rows_hold(&eightlevels::coeff_table(n)?)?,
        ));
        out.extend(eightlevels::explicit_formula_report(n)?);
        Ok(out)
    })
}

pub fn powersums_checks(nmax: u64) -> Result<Vec<IdentityCheck>, CliError> {
    let mut out = powersums::bracket_property_report();
    out.extend(powersums::printed_instances_report()?);
    out.extend(par_checks((2..=nmax).collect(), |n| {
        Ok(vec![IdentityCheck::new("special-case", n, powersums::verify_special_case(n)?)])
    })?);
    out.push(IdentityCheck::new("mixed-bracket", 0, powersums::bracket_xy_identity_check()));
    out.push(IdentityCheck::new("quintic-symbolic", 5, powersums::quintic_parametric_symbolic()));
    Ok(out)
}

pub fn theta_checks(nmax: u64) -> Result<Vec<IdentityCheck>, CliError> {
    par_checks((1..=nmax).collect(), |n| {
        let mut out = eightlevels::theta_sum_report(n)?;
        out.extend(eightlevels::scaling_report(n)?);
        Ok(out)
    })
}

pub fn fundamental_checks(nmax: u64, seed: u64) -> Result<Vec<IdentityCheck>, CliError> {
    par_checks((1..=nmax).collect(), |n| {
        let mut out = eightlevels::first_fundamental_report(n)?;
        out.extend(eightlevels::second_fundamental_report(n)?);
        out.extend(eightlevels::operator_catalogue_report(n)?);
        out.push(IdentityCheck::new(
            "linear-combination",
            n,
            eightlevels::linear_combination_check(n, seed)?,
        ));
        Ok(out)
    })
}

pub fn all_passed(checks: &[IdentityCheck]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn verify_cmd(g: &Global, suite: &VerifyCmd) -> CmdResult {
    let checks = match suite {
        VerifyCmd::Eightlevels { nmax } => eightlevels_checks(*nmax, g.seed)?,
        VerifyCmd::Powersums { nmax } => powersums_checks(*nmax)?,
        VerifyCmd::Theta { nmax } => theta_checks(*nmax)?,
        VerifyCmd::Fundamental { nmax } => fundamental_checks(*nmax, g.seed)?,
    };
    let ok = all_passed(&checks);
    Ok(Outcome::checked(g, &checks, ok))
}

// ---------------------------------------------------------------------------
// mersenne
// ---------------------------------------------------------------------------

pub fn run_method(p: u64, opts: &MethodOpts) -> psi_core::Result<TestReport> {
    use mersenne::*;
    match opts.method {
        TestMethod::Ll => ll_classic(p),
        TestMethod::Psi => psi_test(p),
        TestMethod::Mu => mu_pattern_test(p, opts.mu.unwrap_or(12)),
        TestMethod::Sum => enhanced_sum_battery(p, opts.mu.unwrap_or(4), opts.limit.unwrap_or(DEFAULT_EXACT_LIMIT)),
        TestMethod::Necessary => necessary_condition_with_limit(p, opts.limit.unwrap_or(DEFAULT_NECESSARY_LIMIT)),
        TestMethod::Composite => composite_criterion(p),
        TestMethod::Ab => ab_ratio_test_with_limit(p, opts.limit.unwrap_or(DEFAULT_EXACT_LIMIT)),
    }
}

fn finish_report(g: &Global, mut r: TestReport) -> TestReport {
    if g.no_timing {
        r.elapsed_ms = 0.0;
    }
    r
}

pub fn scan(pmin: u64, pmax: u64, opts: &MethodOpts) -> Result<Vec<TestReport>, CliError> {
    let ps: Vec<u64> = (pmin.max(opts.method.min_p())..=pmax).filter(|&p| is_prime_u64(p)).collect();
    let results: Vec<psi_core::Result<TestReport>> = ps.par_iter().map(|&p| run_method(p, opts)).collect();
    results.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

pub fn mersenne_cmd(g: &Global, cmd: &MersenneCmd) -> CmdResult {
    let reports: Vec<TestReport> = match cmd {
        MersenneCmd::Test { p, opts } => vec![run_method(*p, opts)?],
        MersenneCmd::Scan { pmax, pmin, opts } => scan(*pmin, *pmax, opts)?,
    };
    let reports: Vec<TestReport> = reports.into_iter().map(|r| finish_report(g, r)).collect();
    Ok(Outcome::ok(g, &reports))
}

// ---------------------------------------------------------------------------
// bridges
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct BridgeRecord {
    pub name: String,
    pub n_max: u64,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<u64>,
}

#[derive(Serialize)]
pub struct PeriodRecord {
    pub name: String,
    pub a: String,
    pub b: String,
    pub ring: String,
    pub period: u64,
    pub expected_period: Option<u64>,
    pub table: Vec<String>,
    pub table_matches: Option<bool>,
    pub passed: bool,
}

pub fn bridge_records(specs: &[BridgeSpec], nmax: Option<u64>) -> Vec<BridgeRecord> {
    specs
        .par_iter()
        .map(|s| {
            let n_max = nmax.unwrap_or(s.n_max);
            let failures = bridges::bridge_failures(s, n_max);
            BridgeRecord {
                name: s.name.to_string(),
                n_max,
                checked: s.predicate.indices(n_max).len(),
                passed: failures.is_empty(),
                failures,
            }
        })
        .collect()
}

pub fn period_records(cases: &[PeriodCase], cap: u64) -> Result<Vec<PeriodRecord>, CliError> {
    let rs: Vec<psi_core::Result<bridges::PeriodCheck>> =
        cases.par_iter().map(|c| bridges::check_period_case(c, cap)).collect();
    let mut out = Vec::new();
    for r in rs {
        let c = r?;
        out.push(PeriodRecord {
            name: c.name.to_string(),
            passed: c.passed(),
            a: c.detected.a,
            b: c.detected.b,
            ring: c.detected.ring,
            period: c.detected.period,
            expected_period: Some(c.expected_period),
            table: c.detected.table,
            table_matches: Some(c.table_matches),
        });
    }
    Ok(out)
}

pub fn bridges_cmd(g: &Global, cmd: &BridgesCmd) -> CmdResult {
    match cmd {
        BridgesCmd::List => Ok(Outcome::ok(g, &bridges::registry())),
        BridgesCmd::Check { name, nmax } => {
            let specs = match name {
                Some(n) => vec![bridges::find_bridge(n).ok_or_else(|| CliError::usage(format!("unknown bridge {n:?}")))?],
                None => bridges::registry(),
            };
            let recs = bridge_records(&specs, *nmax);
            let ok = recs.iter().all(|r| r.passed);
            Ok(Outcome::checked(g, &recs, ok))
        }
        BridgesCmd::Period { a, b, ring, cap } => match (a, b) {
            (Some(a), Some(b)) => {
                let ring = RingTag::from_str(ring)?;
                let (a, b) = (ExactScalar::parse(a, &ring)?, ExactScalar::parse(b, &ring)?);
                let r = bridges::detect_period(&a, &b, *cap)?;
                Ok(Outcome::ok(g, &[PeriodRecord {
                    name: format!("psi({},{},n)", r.a, r.b),
                    a: r.a,
                    b: r.b,
                    ring: r.ring,
                    period: r.period,
                    expected_period: None,
                    table: r.table,
                    table_matches: None,
                    passed: true,
                }]))
            }
            _ => {
                let recs = period_records(&bridges::period_catalogue(), *cap)?;
                let ok = recs.iter().all(|r| r.passed);
                Ok(Outcome::checked(g, &recs, ok))
            }
        },
    }
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct TauRecord {
    pub l: u32,
    pub variant: String,
    pub terms: Vec<String>,
    pub value: String,
    pub expected: i64,
    pub passed: bool,
}

pub fn tau_records(ls: &[u32], variants: &[TauVariant]) -> Result<Vec<TauRecord>, CliError> {
    let mut out = Vec::new();
    for &l in ls {
        for &variant in variants {
            let terms = mersenne::tau_identity_terms(l, variant)?;
            let value = mersenne::tau_identity_value(l, variant)?;
            let expected = mersenne::tau_identity_expected(l, variant);
            out.push(TauRecord {
                l,
                variant: variant.name().to_string(),
                terms: terms.iter().map(|t| t.to_string()).collect(),
                passed: mersenne::tau_identity_check(l, variant)?,
                value: value.to_string(),
                expected,
            });
        }
    }
    Ok(out)
}

pub fn identities_cmd(g: &Global, cmd: &IdentitiesCmd) -> CmdResult {
    let IdentitiesCmd::Tau { l, variant } = cmd;
    let ls: Vec<u32> = match l {
        Some(l) => vec![*l],
        None => (3..=7).collect(),
    };
    let variants: Vec<TauVariant> = match variant {
        Some(TauArg::Quarter) => vec![TauVariant::Quarter],
        Some(TauArg::Half) => vec![TauVariant::Half],
        Some(TauArg::Sqrt2) => vec![TauVariant::Root2],
        None => TauVariant::ALL.to_vec(),
    };
    let recs = tau_records(&ls, &variants)?;
    let ok = recs.iter().all(|r| r.passed);
    Ok(Outcome::checked(g, &recs, ok))
}
