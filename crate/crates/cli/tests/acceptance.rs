//! The thirteen acceptance criteria, one pass/fail line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use psi_core::bridges::{bridge_failures, check_period_case, period_catalogue, registry, DEFAULT_PERIOD_CAP};
use psi_core::eightlevels::{
    coeff_table, eight_level_coeff, expand_powersum_basis, expansion_rhs, explicit_formula_check,
    first_fundamental_check, quadratic_forms, scaling_check, second_fundamental_check, theta_sum_check,
    verify_expansion,
};
use psi_core::exactmath::{ExactScalar, ModInt, Modulus};
use psi_core::mersenne::{
    ab_tables, enhanced_sum_exact, enhanced_sum_test, is_prime_u64, ll_chain, ll_classic, mu_pattern_test,
    mu_residues, mu_expected, necessary_condition, necessary_condition_terms, psi14_exact, psi_doubling_chain,
    psi_test, sum_expected, tau_identity_check, tau_identity_terms, NecessarySum, TauVariant,
    DEFAULT_EXACT_LIMIT, DEFAULT_NECESSARY_LIMIT,
};
use psi_core::multipoly::{v, SparsePoly};
use psi_core::powersums::{
    printed_instances_report, quintic_parametric_check, quintic_parametric_symbolic, verify_special_case,
};
use psi_core::psi::{psi_mod_ladder, psi_product_identity_check, psi_product_identity_symbolic, psi_recurrence_in};
use psi_core::report::{TestReport, Verdict};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn mersenne(p: u64) -> BigInt {
    (BigInt::one() << p) - 1
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let el = start.elapsed();
    ensure!(el < limit, "{what} took {el:?}, limit {limit:?}");
    Ok(())
}

fn c1_classification() -> Outcome {
    let start = Instant::now();
    for method in ["ll", "psi"] {
        let out = Command::new(env!("CARGO_BIN_EXE_psi"))
            .args(["mersenne", "scan", "--pmax", "31", "--method", method, "--no-timing"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(out.status.success(), "{method} scan exited with {:?}", out.status.code());
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let mut primes = Vec::new();
        let mut composites = Vec::new();
        for line in text.lines() {
            let rec: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
            let p = rec["p"].as_u64().ok_or("missing p")?;
            match rec["verdict"].as_str() {
                Some("prime") => primes.push(p),
                Some("composite") => composites.push(p),
                other => return Err(format!("unexpected verdict {other:?} at p = {p}")),
            }
        }
        ensure!(primes == [5, 7, 13, 17, 19, 31], "{method}: primes {primes:?}");
        ensure!(composites == [11, 23, 29], "{method}: composites {composites:?}");
    }
    within(start, Duration::from_secs(5), "both scans")?;
    Ok(format!("ll and psi scans agree with the known list in {:?}", start.elapsed()))
}

fn c2_equivalence() -> Outcome {
    let mut n = 0;
    for p in (5..=31).filter(|&p| is_prime_u64(p)) {
        let (a, b) = (psi_test(p).map_err(|e| e.to_string())?, ll_classic(p).map_err(|e| e.to_string())?);
        ensure!(a.verdict == b.verdict, "p = {p}: psi {} vs ll {}", a.verdict, b.verdict);
        n += 1;
    }
    for p in (3..=31).filter(|&p| is_prime_u64(p)) {
        let ll = ll_chain(p).map_err(|e| e.to_string())?;
        let ps = psi_doubling_chain(p).map_err(|e| e.to_string())?;
        ensure!(ll[1..] == ps[1..], "chains differ at p = {p}");
        ensure!(ll[0] == big(4) && ps[0] == mersenne(p) - 4u32, "step 0 at p = {p}");
    }
    Ok(format!("{n} verdicts equal; chains equal from step 1 for every prime p <= 31"))
}

fn c3_mu_pattern() -> Outcome {
    for p in [5u64, 7, 13] {
        let m = mersenne(p);
        let res = mu_residues(p, 12).map_err(|e| e.to_string())?;
        for mu in 1..=12u64 {
            let want = (big(mu_expected(mu)) + &m) % &m;
            ensure!(res[mu as usize] == want, "p = {p}, mu = {mu}: {} vs {want}", res[mu as usize]);
        }
        let r = mu_pattern_test(p, 12).map_err(|e| e.to_string())?;
        ensure!(r.verdict == Verdict::ConditionHolds, "p = {p} verdict {}", r.verdict);
    }
    let m11 = mersenne(11);
    let res = mu_residues(11, 12).map_err(|e| e.to_string())?;
    let witness = (1..=12u64).find(|&mu| res[mu as usize] != (big(mu_expected(mu)) + &m11) % &m11);
    ensure!(witness.is_some(), "p = 11 shows no violation");
    Ok(format!("table holds for p = 5, 7, 13; p = 11 violates at mu = {}", witness.unwrap()))
}

fn c4_enhanced_sum() -> Outcome {
    let start = Instant::now();
    for p in [5u64, 7] {
        let m = mersenne(p);
        for mu in 1..=4u64 {
            let r: TestReport = enhanced_sum_test(p, mu).map_err(|e| e.to_string())?;
            let want = ((big(sum_expected(mu)) + &m) % &m).to_string();
            ensure!(r.residues == [want.clone()], "p = {p}, mu = {mu}: {:?} vs {want}", r.residues);
        }
        let n = BigInt::one() << (p - 1);
        let twice = enhanced_sum_exact(&n).map_err(|e| e.to_string())? * 2u32;
        ensure!(twice == psi14_exact(&n).map_err(|e| e.to_string())?, "2 * sum != psi(1,4,n) at p = {p}");
    }
    within(start, Duration::from_secs(60), "enhanced sums")?;
    Ok(format!("8 residues match and 2*sum(mu=1) = psi(1,4,n) exactly, {:?}", start.elapsed()))
}

fn c5_necessary() -> Outcome {
    for p in [5u64, 7, 13] {
        let r = necessary_condition(p).map_err(|e| e.to_string())?;
        let want = (mersenne(p) - 1u32).to_string();
        ensure!(r.residues == [want.clone()], "p = {p}: {:?} vs {want}", r.residues);
    }
    match necessary_condition_terms(5, DEFAULT_NECESSARY_LIMIT).map_err(|e| e.to_string())? {
        NecessarySum::Terms(t) => {
            let want: Vec<BigInt> = [1, 15, 11, 20, 9, 10, 26, 29, 2].into_iter().map(big).collect();
            ensure!(t == want, "p = 5 terms {t:?}");
            let s: BigInt = t.iter().sum();
            ensure!(s % 31u32 == big(30), "p = 5 term sum");
        }
        other => return Err(format!("p = 5 produced {other:?}")),
    }
    Ok("residue -1 for p = 5, 7, 13; p = 5 term list sums to 30 mod 31".into())
}

fn c6_ab_ratios() -> Outcome {
    let start = Instant::now();
    let mut divides = Vec::new();
    for p in [5u64, 7, 11, 13] {
        let t = ab_tables(p, DEFAULT_EXACT_LIMIT).map_err(|e| e.to_string())?;
        if p == 5 {
            ensure!(t.a_ratio == big(31), "A-ratio at 5 is {}", t.a_ratio);
        }
        if p == 7 {
            ensure!(t.a_ratio == big(127), "A-ratio at 7 is {}", t.a_ratio);
        }
        ensure!(!t.a_ratio.is_zero(), "zero A-ratio at p = {p}");
        if (&t.b_ratio % &t.a_ratio).is_zero() {
            divides.push(p);
        }
    }
    ensure!(divides == [5, 7, 13], "divisibility holds at {divides:?}");
    within(start, Duration::from_secs(600), "A/B tables")?;
    Ok(format!("ratios integral; A | B exactly at {divides:?}; {:?}", start.elapsed()))
}

fn c7_expansion() -> Outcome {
    for n in 1..=16 {
        ensure!(verify_expansion(n).map_err(|e| e.to_string())?, "expansion fails at n = {n}");
    }
    let t4: Vec<String> = coeff_table(4).map_err(|e| e.to_string())?.polys().iter().map(|p| p.to_string()).collect();
    ensure!(t4 == ["-2*a^2 + b^2", "4*a*alpha - 2*b*beta", "-2*alpha^2 + beta^2"], "n = 4 table {t4:?}");

    let t6 = coeff_table(6).map_err(|e| e.to_string())?;
    let at: Vec<SparsePoly> = t6.entries.iter().map(|e| e.at_direction(1, 2)).collect();
    let (a, b) = (v("a"), v("b"));
    let printed = [
        (a.pow(2) * &b).scale_int(3) - b.pow(3),
        a.pow(2).scale_int(-6) - (&a * &b).scale_int(6) + b.pow(2).scale_int(6),
        a.scale_int(12) - b.scale_int(9),
        SparsePoly::int(2),
    ];
    ensure!(at == printed, "n = 6 coefficients {at:?}");
    let (q1, q2) = quadratic_forms();
    let bind = [("alpha", 1i64), ("beta", 2i64)];
    let lhs = (a.scale_int(2) - &b).pow(3) * (v("x").pow(6) + v("y").pow(6));
    ensure!(lhs == expansion_rhs(&printed, &q1.subst(&bind), &q2.subst(&bind)), "n = 6 expansion");
    Ok("symbolic for n = 1..16; n = 4 and n = 6 worked expansions reproduced".into())
}

fn c8_closed_forms() -> Outcome {
    let mut hits = [0usize; 8];
    for n in 1..=64u64 {
        let basis = expand_powersum_basis(n).map_err(|e| e.to_string())?;
        for (k, want) in basis.iter().enumerate() {
            let got = eight_level_coeff(n, k as u64).map_err(|e| e.to_string())?;
            ensure!(&got == want, "n = {n}, k = {k}: {got} vs {want}");
        }
        hits[(n % 8) as usize] += 1;
    }
    ensure!(hits.iter().all(|&h| h >= 8), "class counts {hits:?}");
    for n in 1..=24 {
        ensure!(explicit_formula_check(n).map_err(|e| e.to_string())?, "explicit formulas fail at n = {n}");
    }
    Ok(format!("closed forms match for n <= 64 (n per class {hits:?}); explicit formulas for n <= 24"))
}

fn c9_theta_suite() -> Outcome {
    for n in 1..=12 {
        let e = |r: psi_core::Result<bool>| r.map_err(|e| e.to_string());
        ensure!(e(theta_sum_check(n))?, "theta-sum family fails at n = {n}");
        ensure!(e(scaling_check(n))?, "scaling relations fail at n = {n}");
        ensure!(e(first_fundamental_check(n))?, "first fundamental theorem fails at n = {n}");
        ensure!(e(second_fundamental_check(n))?, "second fundamental theorem fails at n = {n}");
    }
    Ok("all representation, scaling and fundamental checks hold for n <= 12".into())
}

fn c10_product() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1000 {
        let (a, b) = (rng.random_range(-50i64..=50), rng.random_range(-50i64..=50));
        let (n, m) = (rng.random_range(0u64..=50), rng.random_range(0u64..=50));
        let ok = psi_product_identity_check(&ExactScalar::Int(big(a)), &ExactScalar::Int(big(b)), n, m)
            .map_err(|e| e.to_string())?;
        ensure!(ok, "product identity fails at ({a},{b},{n},{m})");
    }
    for n in 0..=16u64 {
        for m in 0..=16 - n {
            ensure!(psi_product_identity_symbolic(n, m), "symbolic product fails at ({n},{m})");
        }
    }
    for _ in 0..1000 {
        let (a, b) = (rng.random_range(-1000i64..=1000), rng.random_range(-1000i64..=1000));
        let n = rng.random_range(0u64..=10_000);
        let m = rng.random_range(2i64..=1_000_000_007);
        let modulus = Arc::new(Modulus::new(big(m)).map_err(|e| e.to_string())?);
        let (am, bm) = (ModInt::new(&big(a), modulus.clone()), ModInt::new(&big(b), modulus));
        let direct = psi_recurrence_in(&am, &bm, n).value().clone();
        let ladder = psi_mod_ladder(&big(a), &big(b), &big(n as i64), &big(m)).map_err(|e| e.to_string())?;
        ensure!(direct == ladder, "ladder differs at ({a},{b},{n},{m})");
    }
    Ok("1000 numeric and all symbolic (n+m <= 16) instances; 1000 ladder instances agree".into())
}

fn c11_powersums() -> Outcome {
    for n in 2..=10 {
        ensure!(verify_special_case(n).map_err(|e| e.to_string())?, "special case fails at n = {n}");
    }
    let printed = printed_instances_report().map_err(|e| e.to_string())?;
    ensure!(printed.iter().all(|c| c.passed), "printed instances {printed:?}");
    ensure!(quintic_parametric_symbolic(), "quintic identity fails symbolically");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (p, q) = (rng.random_range(-1_000_000i64..=1_000_000), rng.random_range(-1_000_000i64..=1_000_000));
        ensure!(quintic_parametric_check(&big(p), &big(q)), "quintic fails at ({p},{q})");
    }
    Ok(format!("n = 2..10 symbolic; {} printed instances; quintic symbolic and 100 random", printed.len()))
}

fn c12_tau() -> Outcome {
    for l in 3..=7 {
        for variant in TauVariant::ALL {
            ensure!(tau_identity_check(l, variant).map_err(|e| e.to_string())?, "{} fails at l = {l}", variant.name());
        }
    }
    let terms = |variant| -> Result<Vec<String>, String> {
        Ok(tau_identity_terms(3, variant).map_err(|e| e.to_string())?.iter().map(|t| t.to_string()).collect())
    };
    ensure!(terms(TauVariant::Quarter)? == ["1", "-8", "8"], "quarter terms");
    ensure!(terms(TauVariant::Half)? == ["2", "-4", "1"], "half terms");
    ensure!(terms(TauVariant::Root2)? == ["1", "-4", "2"], "sqrt2 terms");
    Ok("three variants exact for l = 3..7; l = 3 terms 1-8+8, 2-4+1, 1-4+2".into())
}

fn c13_bridges_periods() -> Outcome {
    let specs = registry();
    for s in &specs {
        let f = bridge_failures(s, s.n_max);
        ensure!(f.is_empty(), "bridge {} fails at {f:?}", s.name);
    }
    let mut periods = Vec::new();
    for case in period_catalogue() {
        let c = check_period_case(&case, DEFAULT_PERIOD_CAP).map_err(|e| e.to_string())?;
        ensure!(c.passed(), "{}: detected {} table {:?}", case.name, c.detected.period, c.detected.table);
        periods.push(c.detected.period);
    }
    ensure!(periods == [6, 8, 12, 16, 20, 24], "periods {periods:?}");
    Ok(format!("{} bridges pass; periods {periods:?} with matching tables", specs.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("known Mersenne classification", c1_classification),
        ("psi test equals Lucas-Lehmer", c2_equivalence),
        ("mu pattern", c3_mu_pattern),
        ("enhanced sum", c4_enhanced_sum),
        ("necessary condition", c5_necessary),
        ("A/B ratios", c6_ab_ratios),
        ("generalized expansion", c7_expansion),
        ("coefficient closed forms", c8_closed_forms),
        ("theta and representation suite", c9_theta_suite),
        ("product theorem", c10_product),
        ("power-sum brackets", c11_powersums),
        ("tau identities", c12_tau),
        ("bridges and periods", c13_bridges_periods),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
