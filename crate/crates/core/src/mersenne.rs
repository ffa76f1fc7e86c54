//! Primality and compositeness tests for Mersenne numbers `M = 2^p − 1`,
//! together with the τ = 2^l combinatorial identities.
//!
//! Throughout, `n = 2^{p−1}` so that `M = 2n − 1`.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, mod_inverse, MersenneMod, Modulus};
use crate::multipoly::{sum_polys, v};
use crate::psi::{psi_ladder_in, psi_mod_ladder_with, psi_of};
use crate::report::{TestReport, Verdict};

/// Default capacity of [`enhanced_sum_test`] and [`ab_ratio_test`].
pub const DEFAULT_EXACT_LIMIT: u64 = 13;

/// Default capacity of [`necessary_condition`].
pub const DEFAULT_NECESSARY_LIMIT: u64 = 20;

pub const DENOMINATOR_NOTE: &str = "denominator 2k! read as (2k)!";

pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `p` together with `n = 2^{p−1}` and `M = 2^p − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MersenneCandidate {
    pub p: u64,
    pub n: BigInt,
    pub m: BigInt,
}

impl MersenneCandidate {
    /// Validates that `p` is prime and at least `min`.
    pub fn new(p: u64, min: u64) -> Result<Self> {
        if p < min {
            return Err(Error::ExponentTooSmall { p, min });
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let n = BigInt::one() << (p - 1);
        let m = (&n << 1u32) - 1;
        Ok(MersenneCandidate { p, n, m })
    }

    pub fn modulus(&self) -> Arc<Modulus> {
        Arc::new(Modulus::Mersenne(
            MersenneMod::new(self.p as u32).expect("p >= 2"),
        ))
    }

    fn reduce(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.m)
    }

    fn psi14(&self, index: &BigInt) -> BigInt {
        psi_mod_ladder_with(&BigInt::one(), &BigInt::from(4), index, &self.modulus())
            .expect("index is nonnegative")
    }
}

fn verdict(prime: bool) -> Verdict {
    if prime {
        Verdict::Prime
    } else {
        Verdict::Composite
    }
}

fn holds(ok: bool) -> Verdict {
    if ok {
        Verdict::ConditionHolds
    } else {
        Verdict::ConditionFails
    }
}

// ---------------------------------------------------------------------------
// Lucas-Lehmer and the Ψ(1,4,·) chain
// ---------------------------------------------------------------------------

/// The Lucas-Lehmer iterates `s_0 = 4, s_{i+1} = s_i² − 2` mod M, for i = 0..=p−2.
pub fn ll_chain(p: u64) -> Result<Vec<BigInt>> {
    let cand = MersenneCandidate::new(p, 3)?;
    let mm = MersenneMod::new(p as u32)?;
    let mut s = BigInt::from(4);
    let mut out = vec![s.clone()];
    for _ in 0..p - 2 {
        s = mm.reduce(&(&s * &s - 2));
        out.push(s.clone());
    }
    debug_assert!(out.iter().all(|x| x < &cand.m));
    Ok(out)
}

/// `Ψ(1,4,2^{j+1})` mod M for j = 0..=p−2, each computed independently by the ladder.
pub fn psi_doubling_chain(p: u64) -> Result<Vec<BigInt>> {
    let cand = MersenneCandidate::new(p, 3)?;
    Ok((1..p).map(|j| cand.psi14(&(BigInt::one() << j))).collect())
}

/// The Lucas-Lehmer test.
pub fn ll_classic(p: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let chain = ll_chain(p)?;
    let last = chain.last().unwrap().clone();
    Ok(TestReport::new("ll", p, verdict(last.is_zero()))
        .with_residues([last])
        .timed(t0))
}

/// `2^p − 1` is prime iff it divides Ψ(1,4,2^{p−1}).
pub fn psi_test(p: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let cand = MersenneCandidate::new(p, 5)?;
    let r = cand.psi14(&cand.n);
    Ok(TestReport::new("psi", p, verdict(r.is_zero()))
        .with_residues([r])
        .timed(t0))
}

// ---------------------------------------------------------------------------
// μ-pattern and enhanced sums
// ---------------------------------------------------------------------------

/// The residue class Ψ(1,4,nμ) must take mod M when M is prime: +2, 0 or −2.
pub fn mu_expected(mu: u64) -> i64 {
    match mu % 4 {
        0 => 2,
        2 => -2,
        _ => 0,
    }
}

/// Residues Ψ(1,4,nμ) mod M for μ = 0..=mu_max, from Ψ(1,4,n) by
/// `R(μ+1) = R(1)·R(μ) − R(μ−1)`.
pub fn mu_residues(p: u64, mu_max: u64) -> Result<Vec<BigInt>> {
    let cand = MersenneCandidate::new(p, 5)?;
    let r1 = cand.psi14(&cand.n);
    let mut out = vec![BigInt::from(2), r1.clone()];
    for mu in 1..mu_max {
        let next = cand.reduce(&(&r1 * &out[mu as usize] - &out[mu as usize - 1]));
        out.push(next);
    }
    out.truncate(mu_max as usize + 1);
    Ok(out)
}

pub fn mu_pattern_test(p: u64, mu_max: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    if mu_max == 0 {
        return Err(Error::Precondition("mu_max must be >= 1".into()));
    }
    let cand = MersenneCandidate::new(p, 5)?;
    let res = mu_residues(p, mu_max)?;
    let direct = cand.psi14(&(&cand.n * mu_max));
    if direct != res[mu_max as usize] {
        return Err(Error::Precondition(format!(
            "mu recursion disagrees with the ladder at mu = {mu_max}"
        )));
    }
    let mismatches: Vec<u64> = (1..=mu_max)
        .filter(|&mu| res[mu as usize] != cand.reduce(&BigInt::from(mu_expected(mu))))
        .collect();
    let mut rep = TestReport::new("mu", p, holds(mismatches.is_empty()))
        .with_residues(res[1..].iter());
    if let Some(first) = mismatches.first() {
        rep = rep.with_note(format!("pattern violated first at mu = {first}"));
    }
    Ok(rep.timed(t0))
}

/// The value the enhanced sum must take mod M when M is prime: +1, 0 or −1.
pub fn sum_expected(mu: u64) -> i64 {
    mu_expected(mu) / 2
}

/// Σ_{k even} (−1)^{k/2} ∏_{λ<k/2} [(nμ)² − (4λ)²] / k!, exactly.
/// Every term is an integer; each step asserts it.
pub fn enhanced_sum_exact(nmu: &BigInt) -> Result<BigInt> {
    let sq = nmu * nmu;
    let jmax: BigInt = nmu / 4u32;
    let mut term = BigInt::one();
    let mut sum = BigInt::one();
    let mut j = BigInt::one();
    while j <= jmax {
        let jm1: BigInt = &j - 1u32;
        let factor = -(&sq - &jm1 * &jm1 * 16u32);
        let den: BigInt = (&j * 2u32) * (&j * 2u32 - 1u32);
        let (q, r) = (term * factor).div_rem(&den);
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!("enhanced sum term k = {}", &j * 2u32)));
        }
        term = q;
        sum += &term;
        j += 1u32;
    }
    Ok(sum)
}

pub fn enhanced_sum_test(p: u64, mu: u64) -> Result<TestReport> {
    enhanced_sum_test_with_limit(p, mu, DEFAULT_EXACT_LIMIT)
}

pub fn enhanced_sum_test_with_limit(p: u64, mu: u64, limit: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let cand = MersenneCandidate::new(p, 5)?;
    if p > limit {
        return Err(Error::Capacity {
            what: "enhanced sum (exact)".into(),
            p,
            limit,
        });
    }
    let nmu = &cand.n * mu;
    let sum = enhanced_sum_exact(&nmu)?;
    let residue = cand.reduce(&sum);
    let ok = residue == cand.reduce(&BigInt::from(sum_expected(mu)));
    let psi_exact = psi_ladder_in(&BigInt::one(), &BigInt::from(4), &nmu)?;
    let twice_matches = &sum * 2 == psi_exact;
    if !twice_matches {
        return Err(Error::Precondition(format!(
            "2 * enhanced sum differs from Psi(1,4,n*mu) at p = {p}, mu = {mu}"
        )));
    }
    Ok(TestReport::new("sum", p, holds(ok))
        .with_residues([residue])
        .with_note(format!("mu = {mu}"))
        .with_note("2 * sum == Psi(1,4,n*mu) exactly")
        .timed(t0))
}

/// The enhanced sum for μ = 1..=mu_max, folded into one report.
pub fn enhanced_sum_battery(p: u64, mu_max: u64, limit: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let mut residues = Vec::new();
    let mut ok = true;
    for mu in 1..=mu_max {
        let r = enhanced_sum_test_with_limit(p, mu, limit)?;
        ok &= r.verdict == Verdict::ConditionHolds;
        residues.extend(r.residues);
    }
    Ok(TestReport::new("sum", p, holds(ok))
        .with_residues(residues)
        .with_note(format!("mu = 1..={mu_max}"))
        .with_note("2 * sum == Psi(1,4,n*mu) exactly")
        .timed(t0))
}

// ---------------------------------------------------------------------------
// Necessary condition
// ---------------------------------------------------------------------------

/// Outcome of summing `∏_{λ<k}[(4λ)² − 1] / (2k)!` mod M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NecessarySum {
    /// Term residues for k = 0..=n/2.
    Terms(Vec<BigInt>),
    /// A factorial that shares the factor `factor` with M.
    Factor { k: u64, factor: BigInt },
}

pub fn necessary_condition_terms(p: u64, limit: u64) -> Result<NecessarySum> {
    let cand = MersenneCandidate::new(p, 5)?;
    if p > limit {
        return Err(Error::Capacity {
            what: "necessary condition".into(),
            p,
            limit,
        });
    }
    let m = &cand.m;
    let kmax = 1u64 << (p - 2);
    let mut num = BigInt::one();
    let mut fact = BigInt::one();
    let mut terms = Vec::with_capacity(kmax as usize + 1);
    for k in 0..=kmax {
        if k > 0 {
            let l = 4 * (k as i64 - 1);
            num = (num * BigInt::from(l * l - 1)).mod_floor(m);
            fact = (fact * BigInt::from((2 * k - 1) * (2 * k))).mod_floor(m);
        }
        match mod_inverse(&fact, m) {
            Ok(inv) => terms.push((&num * inv).mod_floor(m)),
            Err(Error::NotInvertible { gcd, .. }) => return Ok(NecessarySum::Factor { k, factor: gcd }),
            Err(e) => return Err(e),
        }
    }
    Ok(NecessarySum::Terms(terms))
}

pub fn necessary_condition(p: u64) -> Result<TestReport> {
    necessary_condition_with_limit(p, DEFAULT_NECESSARY_LIMIT)
}

pub fn necessary_condition_with_limit(p: u64, limit: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let cand = MersenneCandidate::new(p, 5)?;
    let rep = match necessary_condition_terms(p, limit)? {
        NecessarySum::Terms(terms) => {
            let s = terms.iter().fold(BigInt::zero(), |acc, t| acc + t).mod_floor(&cand.m);
            let ok = s == &cand.m - 1u32;
            TestReport::new("necessary", p, holds(ok)).with_residues([s])
        }
        NecessarySum::Factor { k, factor } => {
            assert!(
                factor > BigInt::one() && factor < cand.m && cand.m.is_multiple_of(&factor),
                "inverse failure must expose a proper factor"
            );
            TestReport::new("necessary", p, Verdict::Composite)
                .with_note(format!("(2k)! not invertible at k = {k}; factor {factor} of M"))
        }
    };
    Ok(rep.with_note(DENOMINATOR_NOTE).timed(t0))
}

// ---------------------------------------------------------------------------
// Composite criterion
// ---------------------------------------------------------------------------

/// M is composite if it divides Ψ(1,4,n−1) or Ψ(1,4,n+1); otherwise no conclusion.
pub fn composite_criterion(p: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let cand = MersenneCandidate::new(p, 2)?;
    let lo = cand.psi14(&(&cand.n - 1u32));
    let hi = cand.psi14(&(&cand.n + 1u32));
    let fires = lo.is_zero() || hi.is_zero();
    let v = if fires { Verdict::Composite } else { Verdict::Inconclusive };
    Ok(TestReport::new("composite", p, v).with_residues([lo, hi]).timed(t0))
}

// ---------------------------------------------------------------------------
// A/B ratios
// ---------------------------------------------------------------------------

/// Top entries and normalized ratios of the A and B tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABTables {
    pub p: u64,
    pub n: BigInt,
    pub a_top: BigInt,
    pub b_top: BigInt,
    pub a_ratio: BigInt,
    pub b_ratio: BigInt,
}

/// Runs the two-index recurrence for `levels` layers with rolling storage and
/// returns the value at `r = 0` of the last layer.
fn rolling_top(levels: u64, step: impl Fn(u64, u64) -> (BigInt, BigInt)) -> BigInt {
    let mut layer: Vec<BigInt> = vec![BigInt::one(); levels as usize + 1];
    for k in 1..=levels {
        let width = (levels - k) as usize + 1;
        let next: Vec<BigInt> = (0..width)
            .map(|r| {
                let (c0, c1) = step(r as u64, k);
                &layer[r] * c0 + &layer[r + 1] * c1
            })
            .collect();
        layer = next;
    }
    layer.swap_remove(0)
}

fn falling(top: &BigInt, count: u64) -> BigInt {
    (1..=count).fold(BigInt::one(), |acc, i| acc * (top - i))
}

/// Approximate peak memory of the B layers in bytes.
pub fn ab_memory_estimate(p: u64) -> u64 {
    let k = 1u64 << (p.saturating_sub(2)).min(40);
    k.saturating_mul(k.saturating_mul(p + 1) / 8 + 32)
}

pub fn ab_tables(p: u64, limit: u64) -> Result<ABTables> {
    let cand = MersenneCandidate::new(p, 5)?;
    if p > limit {
        return Err(Error::Capacity {
            what: format!(
                "A/B tables (about {} MiB of B layers)",
                ab_memory_estimate(p) >> 20
            ),
            p,
            limit,
        });
    }
    let pi = p as i64;
    let ka = p / 2;
    let a_top = rolling_top(ka, |r, k| {
        let (r, k) = (r as i64, k as i64);
        (BigInt::from(pi - r - k), BigInt::from(4 * (pi - 2 * r)))
    });
    let n = cand.n.clone();
    let kb: u64 = (&n / 2u32).try_into().expect("desk-scale n");
    let ni: i64 = (&n).try_into().expect("desk-scale n");
    let b_top = rolling_top(kb, |r, k| {
        let (r, k) = (r as i64, k as i64);
        (BigInt::from(-2 * (ni - r - k)), BigInt::from(-2 * (ni - 2 * r - 1)))
    });
    let (a_ratio, ar) = a_top.div_rem(&falling(&BigInt::from(p), ka));
    let (b_ratio, br) = b_top.div_rem(&falling(&n, kb));
    if !ar.is_zero() || !br.is_zero() {
        return Err(Error::NonIntegral(format!("A/B ratio at p = {p}")));
    }
    Ok(ABTables {
        p,
        n,
        a_top,
        b_top,
        a_ratio,
        b_ratio,
    })
}

pub fn ab_ratio_test(p: u64) -> Result<TestReport> {
    ab_ratio_test_with_limit(p, DEFAULT_EXACT_LIMIT)
}

pub fn ab_ratio_test_with_limit(p: u64, limit: u64) -> Result<TestReport> {
    let t0 = Instant::now();
    let t = ab_tables(p, limit)?;
    let divides = !t.a_ratio.is_zero() && t.b_ratio.is_multiple_of(&t.a_ratio);
    let mut rep = TestReport::new("ab", p, verdict(divides));
    rep.ratios = vec![t.a_ratio.to_string(), t.b_ratio.to_string()];
    Ok(rep
        .with_note(format!("estimated B-layer memory {} KiB", ab_memory_estimate(p) >> 10))
        .timed(t0))
}

// ---------------------------------------------------------------------------
// τ identities
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauVariant {
    /// Σ P_k / ((2k)! 4^k) = 1
    Quarter,
    /// 2 Σ P_k / ((2k)! 16^k) = −1
    Half,
    /// Σ P_k / ((2k)! 8^k) = ±1
    Root2,
}

impl TauVariant {
    pub const ALL: [TauVariant; 3] = [TauVariant::Quarter, TauVariant::Half, TauVariant::Root2];

    pub fn name(&self) -> &'static str {
        match self {
            TauVariant::Quarter => "quarter",
            TauVariant::Half => "half",
            TauVariant::Root2 => "sqrt2",
        }
    }

    fn log2_base(&self) -> u64 {
        match self {
            TauVariant::Quarter => 2,
            TauVariant::Half => 4,
            TauVariant::Root2 => 3,
        }
    }

    fn weight(&self) -> i64 {
        match self {
            TauVariant::Half => 2,
            _ => 1,
        }
    }
}

impl std::str::FromStr for TauVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quarter" => Ok(TauVariant::Quarter),
            "half" => Ok(TauVariant::Half),
            "sqrt2" | "root2" => Ok(TauVariant::Root2),
            other => Err(Error::Parse(format!("unknown tau variant {other:?}"))),
        }
    }
}

/// `P_k = ∏_{λ<k} [(4λ)² − τ²]` for k = 0..=τ/4.
fn tau_products(tau: u64) -> Vec<BigInt> {
    let t2 = BigInt::from(tau) * tau;
    let mut out = vec![BigInt::one()];
    for k in 1..=tau / 4 {
        let l = BigInt::from(4 * (k - 1));
        let next = out.last().unwrap() * (&l * &l - &t2);
        out.push(next);
    }
    out
}

fn check_tau(l: u32) -> Result<u64> {
    if !(3..=40).contains(&l) {
        return Err(Error::Precondition(format!("tau = 2^l needs 3 <= l <= 40, got l = {l}")));
    }
    Ok(1u64 << l)
}

/// The weighted terms of the selected identity (their sum is the identity's left side).
pub fn tau_identity_terms(l: u32, variant: TauVariant) -> Result<Vec<BigRational>> {
    let tau = check_tau(l)?;
    Ok(tau_products(tau)
        .into_iter()
        .enumerate()
        .map(|(k, pk)| {
            let k = k as u64;
            let den = factorial(2 * k) << (variant.log2_base() * k);
            BigRational::new(pk * variant.weight(), den)
        })
        .collect())
}

/// The constant the identity must evaluate to.
pub fn tau_identity_expected(l: u32, variant: TauVariant) -> i64 {
    match variant {
        TauVariant::Quarter => 1,
        TauVariant::Half => -1,
        TauVariant::Root2 => {
            if l >= 4 {
                1
            } else {
                -1
            }
        }
    }
}

pub fn tau_identity_value(l: u32, variant: TauVariant) -> Result<BigRational> {
    Ok(tau_identity_terms(l, variant)?
        .into_iter()
        .fold(BigRational::zero(), |a, t| a + t))
}

pub fn tau_identity_check(l: u32, variant: TauVariant) -> Result<bool> {
    Ok(tau_identity_value(l, variant)? == BigRational::from_integer(tau_identity_expected(l, variant).into()))
}

/// 2 Σ_k P_k / ((2k)! 16^k) a^{τ/2 − 2k} b^{2k} = Ψ(a, ±b, τ), symbolically.
pub fn tau_general_check(l: u32) -> Result<bool> {
    let tau = check_tau(l)?;
    if tau > 256 {
        return Err(Error::SymbolicCap { n: tau, cap: 256 });
    }
    let (a, b) = (v("a"), v("b"));
    let lhs = sum_polys(
        tau_products(tau)
            .into_iter()
            .enumerate()
            .map(|(k, pk)| {
                let k = k as u64;
                let c = BigRational::new(pk * 2, factorial(2 * k) << (4 * k));
                (a.pow((tau / 2 - 2 * k) as u32) * b.pow((2 * k) as u32)).scale(&c)
            })
            .collect(),
    );
    let plus = psi_of(&a, &b, tau);
    let minus = psi_of(&a, &-b.clone(), tau);
    Ok(lhs == plus && lhs == minus)
}

/// 2 Σ_k P_k / (2k)! = Ψ(1, ±4, τ), exactly.
pub fn tau_psi14_check(l: u32) -> Result<bool> {
    let tau = check_tau(l)?;
    let lhs = tau_products(tau)
        .into_iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (k, pk)| {
            acc + BigRational::new(pk * 2, factorial(2 * k as u64))
        });
    let plus = psi_ladder_in(&BigInt::one(), &BigInt::from(4), &BigInt::from(tau))?;
    let minus = psi_ladder_in(&BigInt::one(), &BigInt::from(-4), &BigInt::from(tau))?;
    Ok(lhs == BigRational::from_integer(plus.clone()) && plus == minus)
}

/// Helper for callers that need `Ψ(1,4,m)` exactly.
pub fn psi14_exact(m: &BigInt) -> Result<BigInt> {
    if m.is_negative() {
        return Err(Error::Precondition("index must be nonnegative".into()));
    }
    psi_ladder_in(&BigInt::one(), &BigInt::from(4), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn ll_examples() {
        assert_eq!(ll_classic(5).unwrap().verdict, Verdict::Prime);
        assert_eq!(ll_classic(11).unwrap().verdict, Verdict::Composite);
        assert_eq!(ll_classic(13).unwrap().verdict, Verdict::Prime);
        assert_eq!(ll_classic(3).unwrap().verdict, Verdict::Prime);
        assert!(matches!(ll_classic(9), Err(Error::NotPrime(9))));
        assert!(matches!(ll_classic(2), Err(Error::ExponentTooSmall { .. })));
    }

    #[test]
    fn psi_test_examples() {
        let r5 = psi_test(5).unwrap();
        assert_eq!(r5.verdict, Verdict::Prime);
        assert_eq!(r5.residues, ["0"]);
        assert_eq!(psi_test(7).unwrap().verdict, Verdict::Prime);
        assert_eq!(psi_test(11).unwrap().verdict, Verdict::Composite);
        assert!(matches!(psi_test(3), Err(Error::ExponentTooSmall { .. })));
    }

    #[test]
    fn doubling_chain_p7() {
        assert_eq!(psi_doubling_chain(7).unwrap(), ints(&[123, 14, 67, 42, 111, 0]));
    }

    #[test]
    fn mu_examples() {
        let r = mu_residues(5, 4).unwrap();
        assert_eq!(r, ints(&[2, 0, 29, 0, 2]));
        assert_eq!(mu_pattern_test(7, 8).unwrap().verdict, Verdict::ConditionHolds);
        assert_eq!(mu_pattern_test(11, 12).unwrap().verdict, Verdict::ConditionFails);
    }

    #[test]
    fn enhanced_sum_examples() {
        assert_eq!(enhanced_sum_exact(&big(16)).unwrap(), big(18817));
        assert_eq!(enhanced_sum_exact(&big(0)).unwrap(), big(1));
        let r = enhanced_sum_test(5, 2).unwrap();
        assert_eq!(r.residues, ["30"]);
        assert_eq!(r.verdict, Verdict::ConditionHolds);
        assert!(matches!(enhanced_sum_test(17, 1), Err(Error::Capacity { .. })));
    }

    #[test]
    fn necessary_p5_terms() {
        match necessary_condition_terms(5, DEFAULT_NECESSARY_LIMIT).unwrap() {
            NecessarySum::Terms(t) => assert_eq!(t, ints(&[1, 15, 11, 20, 9, 10, 26, 29, 2])),
            other => panic!("unexpected {other:?}"),
        }
        let r = necessary_condition(5).unwrap();
        assert_eq!(r.residues, ["30"]);
        assert_eq!(r.verdict, Verdict::ConditionHolds);
    }

    #[test]
    fn necessary_p11_finds_factor() {
        let r = necessary_condition(11).unwrap();
        assert_eq!(r.verdict, Verdict::Composite);
        assert!(r.notes[0].contains("factor 23"), "{:?}", r.notes);
    }

    #[test]
    fn composite_criterion_quiet_on_primes() {
        assert_eq!(composite_criterion(5).unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(composite_criterion(7).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn ab_small() {
        let t5 = ab_tables(5, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(t5.a_top, big(372));
        assert_eq!(t5.a_ratio, big(31));
        let t7 = ab_tables(7, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(t7.a_top, big(15240));
        assert_eq!(t7.a_ratio, big(127));
        assert_eq!(ab_ratio_test(5).unwrap().verdict, Verdict::Prime);
    }

    #[test]
    fn tau_l3_terms() {
        let q: Vec<BigRational> = tau_identity_terms(3, TauVariant::Quarter).unwrap();
        let as_int: Vec<BigInt> = q.iter().map(|t| t.to_integer()).collect();
        assert_eq!(as_int, ints(&[1, -8, 8]));
        let h = tau_identity_terms(3, TauVariant::Half).unwrap();
        let as_int: Vec<BigInt> = h.iter().map(|t| t.to_integer()).collect();
        assert_eq!(as_int, ints(&[2, -4, 1]));
        let r = tau_identity_terms(3, TauVariant::Root2).unwrap();
        let as_int: Vec<BigInt> = r.iter().map(|t| t.to_integer()).collect();
        assert_eq!(as_int, ints(&[1, -4, 2]));
        for variant in TauVariant::ALL {
            assert!(tau_identity_check(3, variant).unwrap());
        }
    }

    #[test]
    fn tau_related_identities() {
        assert!(tau_general_check(3).unwrap());
        assert!(tau_psi14_check(3).unwrap());
        assert!(tau_psi14_check(5).unwrap());
    }
}
