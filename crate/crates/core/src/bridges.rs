//! Specializations of Ψ to classical sequences, and the period catalogue
//! over quadratic rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::eightlevels::directional_power_in;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, rat, rat_int, ExactScalar, QuadExt, Scalar};
use crate::multipoly::{v, SparsePoly};
use crate::psi::{delta, half, psi_ladder_in, psi_sequence, psi_symbolic};

/// Default step cap of [`detect_period`].
pub const DEFAULT_PERIOD_CAP: u64 = 10_000;

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

fn lin2(x0: BigInt, x1: BigInt, p: i64, q: i64, n_max: u64) -> Vec<BigInt> {
    let mut out = vec![x0, x1];
    while out.len() <= n_max as usize {
        let k = out.len();
        out.push(&out[k - 1] * p + &out[k - 2] * q);
    }
    out.truncate(n_max as usize + 1);
    out
}

/// Fibonacci numbers F(0..=n_max).
pub fn fibonacci(n_max: u64) -> Vec<BigInt> {
    lin2(BigInt::zero(), BigInt::one(), 1, 1, n_max)
}

/// Lucas numbers L(0..=n_max).
pub fn lucas(n_max: u64) -> Vec<BigInt> {
    lin2(BigInt::from(2), BigInt::one(), 1, 1, n_max)
}

/// Pell-Lucas numbers Q(0..=n_max).
pub fn pell_lucas(n_max: u64) -> Vec<BigInt> {
    lin2(BigInt::from(2), BigInt::from(2), 2, 1, n_max)
}

fn poly_lin2(x0: SparsePoly, x1: SparsePoly, p: &SparsePoly, q: &SparsePoly, n_max: u64) -> Vec<SparsePoly> {
    let mut out = vec![x0, x1];
    while out.len() <= n_max as usize {
        let k = out.len();
        out.push(p * &out[k - 1] + q * &out[k - 2]);
    }
    out.truncate(n_max as usize + 1);
    out
}

/// Chebyshev polynomials T_n(x) from `T_{n+1} = 2x T_n − T_{n−1}`.
pub fn chebyshev_t(n_max: u64) -> Vec<SparsePoly> {
    let x = v("x");
    poly_lin2(SparsePoly::one(), x.clone(), &x.scale_int(2), &SparsePoly::int(-1), n_max)
}

/// Dickson polynomials D_n(x, α) from `D_{n+1} = x D_n − α D_{n−1}`.
pub fn dickson(n_max: u64) -> Vec<SparsePoly> {
    let x = v("x");
    poly_lin2(SparsePoly::int(2), x.clone(), &x, &-v("alpha"), n_max)
}

/// Pell-Lucas polynomials Q_n(x) from `Q_{n+1} = 2x Q_n + Q_{n−1}`.
pub fn pell_lucas_poly(n_max: u64) -> Vec<SparsePoly> {
    let x = v("x");
    poly_lin2(SparsePoly::int(2), x.scale_int(2), &x.scale_int(2), &SparsePoly::one(), n_max)
}

fn pow2(n: u64) -> BigInt {
    BigInt::one() << n
}

fn sign_half(n: u64) -> i64 {
    if half(n) % 2 == 0 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Which indices a bridge claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum IndexPredicate {
    /// Every `n >= min`.
    From { min: u64 },
    /// Odd `n` only.
    Odd,
    /// `n = 2^l` with `l >= min_l`, optionally only even `l`.
    PowerOfTwo { min_l: u32, even_l: bool },
}

impl IndexPredicate {
    pub fn admits(&self, n: u64) -> bool {
        match *self {
            IndexPredicate::From { min } => n >= min,
            IndexPredicate::Odd => n % 2 == 1,
            IndexPredicate::PowerOfTwo { min_l, even_l } => {
                n.is_power_of_two() && {
                    let l = n.trailing_zeros();
                    l >= min_l && (!even_l || l % 2 == 0)
                }
            }
        }
    }

    pub fn indices(&self, n_max: u64) -> Vec<u64> {
        (0..=n_max).filter(|&n| self.admits(n)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Claim {
    Lucas,
    FibLucasMixed,
    Root5 { sign: i8 },
    Minus2Minus5,
    Plus2Minus5,
    Mersenne,
    Fermat,
    PellLucas,
    PellLucasPoly,
    Dickson,
    Chebyshev,
    FibDerivative,
    SignLucas,
    SignFermat,
    Psi12Closed,
    Psi12Binomial,
    TopOperator(G2),
    GoldenEven,
}

/// Directions of the top-order operator list at `n = 2^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum G2 {
    A,
    B,
    OneFour,
    OneThree,
    OneOne,
    OneTwo,
    OneRoot2,
    Dickson,
    Chebyshev,
    TwoFive,
}

/// A registered specialization `transform(Ψ(a,b,n)) == oracle(n)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeSpec {
    pub name: &'static str,
    pub a: &'static str,
    pub b: &'static str,
    pub oracle: &'static str,
    pub transform: &'static str,
    pub predicate: IndexPredicate,
    /// Largest index checked by default.
    pub n_max: u64,
    #[serde(skip)]
    claim: Claim,
}

fn spec(
    name: &'static str,
    (a, b): (&'static str, &'static str),
    oracle: &'static str,
    transform: &'static str,
    predicate: IndexPredicate,
    n_max: u64,
    claim: Claim,
) -> BridgeSpec {
    BridgeSpec {
        name,
        a,
        b,
        oracle,
        transform,
        predicate,
        n_max,
        claim,
    }
}

const ALL: IndexPredicate = IndexPredicate::From { min: 0 };
const POS: IndexPredicate = IndexPredicate::From { min: 1 };
const G2_INDEX: IndexPredicate = IndexPredicate::PowerOfTwo { min_l: 4, even_l: false };

/// Every registered bridge, in a fixed order.
pub fn registry() -> Vec<BridgeSpec> {
    use Claim::*;
    let top = |name, a, b, oracle, transform, g| spec(name, (a, b), oracle, transform, G2_INDEX, 64, TopOperator(g));
    vec![
        spec("lucas", ("-1", "-3"), "L(n)", "psi", ALL, 60, Lucas),
        spec("fibonacci-lucas", ("1", "-3"), "F(n) for n odd, L(n) for n even", "psi", ALL, 60, FibLucasMixed),
        spec("root5-plus", ("1", "sqrt(5)"), "L/F table mod 4", "psi", ALL, 60, Root5 { sign: 1 }),
        spec("root5-minus", ("1", "-sqrt(5)"), "L/F table mod 4", "psi", ALL, 60, Root5 { sign: -1 }),
        spec("two-power-alternating", ("-2", "-5"), "2^n + (-1)^n", "psi", ALL, 60, Minus2Minus5),
        spec("two-power-third", ("2", "-5"), "(2^n + 1) / 3^delta(n)", "psi", ALL, 60, Plus2Minus5),
        spec("mersenne", ("-2", "-5"), "2^n - 1", "psi", IndexPredicate::Odd, 61, Mersenne),
        spec(
            "fermat",
            ("+-2", "-5"),
            "2^(2^k) + 1",
            "psi",
            IndexPredicate::PowerOfTwo { min_l: 1, even_l: false },
            1024,
            Fermat,
        ),
        spec("pell-lucas", ("-1", "-6"), "Q(n)", "2^delta(n) * psi", ALL, 60, PellLucas),
        spec("pell-lucas-poly", ("-1", "-2-4x^2"), "Q_n(x)", "(2x)^delta(n) * psi", ALL, 20, PellLucasPoly),
        spec("dickson", ("alpha", "2alpha-x^2"), "D_n(x, alpha)", "x^delta(n) * psi", ALL, 20, Dickson),
        spec("chebyshev", ("1", "2-4x^2"), "T_n(x)", "x^delta(n) / 2^delta(n+1) * psi", ALL, 20, Chebyshev),
        spec("fibonacci-derivative", ("-1", "-3"), "n F(n-1)", "coefficient r=1 along (1,2)", POS, 60, FibDerivative),
        spec("sign-lucas", ("1", "3"), "(-1)^floor(n/2) L(n)", "psi", ALL, 60, SignLucas),
        spec("sign-two-power", ("2", "5"), "(-1)^floor(n/2) (2^n + (-1)^n)", "psi", ALL, 60, SignFermat),
        spec("psi-1-2-closed", ("1", "2"), "(-1)^floor(n/2) 2^delta(n-1) n^delta(n)", "psi", ALL, 200, Psi12Closed),
        spec(
            "psi-1-2-binomial",
            ("1", "2"),
            "(-1)^floor(n/2) n/(n-floor(n/2)) C(n-floor(n/2), floor(n/2))",
            "psi",
            POS,
            200,
            Psi12Binomial,
        ),
        top("top-operator-1-0", "1", "0", "2", "(d_a)^h / h! psi", G2::A),
        top("top-operator-0-1", "0", "1", "1", "(d_b)^h / h! psi", G2::B),
        top("top-operator-1-4", "1", "4", "psi(1,4,n)", "(d_a + 4 d_b)^h / h! psi", G2::OneFour),
        top("top-operator-1-3", "1", "3", "L(n)", "(d_a + 3 d_b)^h / h! psi", G2::OneThree),
        top("top-operator-1-1", "1", "1", "-1", "(d_a + d_b)^h / h! psi", G2::OneOne),
        top("top-operator-1-2", "1", "2", "2", "(d_a + 2 d_b)^h / h! psi", G2::OneTwo),
        top("top-operator-1-root2", "1", "sqrt(2)", "2", "(d_a + sqrt(2) d_b)^h / h! psi", G2::OneRoot2),
        top(
            "top-operator-dickson",
            "alpha",
            "2alpha-x^2",
            "D_n(x, alpha)",
            "(alpha d_a + (2alpha-x^2) d_b)^h / h! psi",
            G2::Dickson,
        ),
        top("top-operator-chebyshev", "1", "2-4x^2", "2 T_n(x)", "(d_a + (2-4x^2) d_b)^h / h! psi", G2::Chebyshev),
        top("top-operator-2-5", "2", "5", "2^n + 1", "(2 d_a + 5 d_b)^h / h! psi", G2::TwoFive),
        spec(
            "golden-ratio",
            ("1", "phi-1"),
            "-phi",
            "(d_a + (phi-1) d_b)^h / h! psi",
            IndexPredicate::PowerOfTwo { min_l: 4, even_l: true },
            64,
            GoldenEven,
        ),
    ]
}

pub fn find_bridge(name: &str) -> Option<BridgeSpec> {
    registry().into_iter().find(|s| s.name == name)
}

/// True iff the bridge holds at every admitted `n <= n_max`.
pub fn bridge_check(spec: &BridgeSpec, n_max: u64) -> bool {
    bridge_failures(spec, n_max).is_empty()
}

/// Admitted indices `n <= n_max` at which the bridge fails.
pub fn bridge_failures(spec: &BridgeSpec, n_max: u64) -> Vec<u64> {
    let idx = spec.predicate.indices(n_max);
    if idx.is_empty() {
        return Vec::new();
    }
    match holds_at(spec.claim, &idx) {
        Ok(ok) => idx.into_iter().zip(ok).filter(|(_, ok)| !ok).map(|(n, _)| n).collect(),
        Err(_) => idx,
    }
}

fn int_seq(a: i64, b: i64, n_max: u64) -> Vec<BigInt> {
    psi_sequence(&BigInt::from(a), &BigInt::from(b), n_max)
}

fn quad(u: i64, v: i64, d: u64) -> QuadExt {
    QuadExt::from_ints(u, v, d).expect("square-free radicand")
}

/// Ψ(1, ±√5, n) from the mod-4 table of Lucas and Fibonacci values.
pub fn root5_table_value(n: u64, sign: i64) -> QuadExt {
    let top = n / 2 + 2;
    let (l, f) = (lucas(top), fibonacci(top));
    let q = |u: &BigInt, v: &BigInt| QuadExt::new(rat_int(u.clone()), rat_int(v * sign), 5).unwrap();
    let z = BigInt::zero();
    match n % 4 {
        0 => q(&l[(n / 2) as usize], &z),
        1 => q(&l[((n + 1) / 2) as usize], &f[((n - 1) / 2) as usize]),
        2 => q(&z, &-&f[(n / 2) as usize]),
        _ => q(&-&l[((n - 1) / 2) as usize], &-&f[((n + 1) / 2) as usize]),
    }
}

/// `(α∂_a + β∂_b)^h Ψ(a,b,n)`, which is `h!` times the top-order value.
fn top_operator<S: Scalar>(n: u64, alpha: &S, beta: &S) -> Result<S> {
    directional_power_in(&psi_symbolic(n)?, alpha, beta, half(n))
}

fn top_check<S: Scalar>(n: u64, alpha: &S, beta: &S, claimed: &S) -> Result<bool> {
    let lhs = top_operator(n, alpha, beta)?;
    let hf = alpha.from_int_like(&factorial(half(n)));
    let via_psi = crate::psi::psi_recurrence_in(alpha, beta, n);
    Ok(lhs == hf.clone() * claimed.clone() && via_psi == *claimed)
}

fn holds_at(claim: Claim, idx: &[u64]) -> Result<Vec<bool>> {
    let n_max = *idx.last().unwrap();
    let at = |f: &dyn Fn(u64) -> bool| idx.iter().map(|&n| f(n)).collect::<Vec<_>>();
    Ok(match claim {
        Claim::Lucas => {
            let (s, l) = (int_seq(-1, -3, n_max), lucas(n_max));
            at(&|n| s[n as usize] == l[n as usize])
        }
        Claim::FibLucasMixed => {
            let (s, l, f) = (int_seq(1, -3, n_max), lucas(n_max), fibonacci(n_max));
            at(&|n| {
                let want = if n % 2 == 1 { &f[n as usize] } else { &l[n as usize] };
                &s[n as usize] == want
            })
        }
        Claim::Root5 { sign } => {
            let s = psi_sequence(&quad(1, 0, 5), &quad(0, sign as i64, 5), n_max);
            at(&|n| s[n as usize] == root5_table_value(n, sign as i64))
        }
        Claim::Minus2Minus5 => {
            let s = int_seq(-2, -5, n_max);
            at(&|n| s[n as usize] == pow2(n) + if n % 2 == 0 { 1 } else { -1 })
        }
        Claim::Plus2Minus5 => {
            let s = int_seq(2, -5, n_max);
            at(&|n| {
                let (q, r): (BigInt, BigInt) = (pow2(n) + BigInt::one()).div_rem(&BigInt::from(3u32.pow(delta(n))));
                r.is_zero() && s[n as usize] == q
            })
        }
        Claim::Mersenne => {
            let s = int_seq(-2, -5, n_max);
            at(&|n| s[n as usize] == pow2(n) - 1)
        }
        Claim::Fermat => at(&|n| {
            let want: BigInt = pow2(n) + 1u32;
            [2i64, -2].iter().all(|&a| {
                psi_ladder_in(&BigInt::from(a), &BigInt::from(-5), &BigInt::from(n)).ok() == Some(want.clone())
            })
        }),
        Claim::PellLucas => {
            let (s, q) = (int_seq(-1, -6, n_max), pell_lucas(n_max));
            at(&|n| &s[n as usize] * (1 << delta(n)) == q[n as usize])
        }
        Claim::PellLucasPoly => {
            let x = v("x");
            let b = SparsePoly::int(-2) - x.pow(2).scale_int(4);
            let s = psi_sequence(&SparsePoly::int(-1), &b, n_max);
            let q = pell_lucas_poly(n_max);
            at(&|n| x.scale_int(2).pow(delta(n)) * &s[n as usize] == q[n as usize])
        }
        Claim::Dickson => {
            let (x, al) = (v("x"), v("alpha"));
            let s = psi_sequence(&al, &(al.scale_int(2) - x.pow(2)), n_max);
            let d = dickson(n_max);
            at(&|n| x.pow(delta(n)) * &s[n as usize] == d[n as usize])
        }
        Claim::Chebyshev => {
            let x = v("x");
            let s = psi_sequence(&SparsePoly::one(), &(SparsePoly::int(2) - x.pow(2).scale_int(4)), n_max);
            let t = chebyshev_t(n_max);
            at(&|n| {
                let lhs = (x.pow(delta(n)) * &s[n as usize]).scale(&rat(1, 1 << delta(n + 1)));
                lhs == t[n as usize]
            })
        }
        Claim::FibDerivative => {
            let seq = psi_sequence(&v("a"), &v("b"), n_max);
            let f = fibonacci(n_max);
            at(&|n| {
                let d = -(seq[n as usize].diff("a") + seq[n as usize].diff("b").scale_int(2));
                d.eval_int(&[("a", -1), ("b", -3)]) == rat_int(BigInt::from(n) * &f[n as usize - 1])
            })
        }
        Claim::SignLucas => {
            let (s, l) = (int_seq(1, 3, n_max), lucas(n_max));
            at(&|n| s[n as usize] == &l[n as usize] * sign_half(n))
        }
        Claim::SignFermat => {
            let s = int_seq(2, 5, n_max);
            at(&|n| s[n as usize] == (pow2(n) + if n % 2 == 0 { 1 } else { -1 }) * sign_half(n))
        }
        Claim::Psi12Closed => {
            let s = int_seq(1, 2, n_max);
            at(&|n| {
                let two = if n % 2 == 0 { 2 } else { 1 };
                let nn = if n % 2 == 1 { BigInt::from(n) } else { BigInt::one() };
                s[n as usize] == nn * two * sign_half(n)
            })
        }
        Claim::Psi12Binomial => {
            let s = int_seq(1, 2, n_max);
            at(&|n| {
                let h = half(n);
                let num = BigInt::from(n) * binomial(n - h, h);
                let (q, r) = num.div_rem(&BigInt::from(n - h));
                r.is_zero() && s[n as usize] == q * sign_half(n)
            })
        }
        Claim::TopOperator(g) => {
            let mut out = Vec::with_capacity(idx.len());
            for &n in idx {
                out.push(top_operator_claim(g, n)?);
            }
            out
        }
        Claim::GoldenEven => {
            let mut out = Vec::with_capacity(idx.len());
            for &n in idx {
                out.push(golden_value(n)? == -QuadExt::golden_ratio());
            }
            out
        }
    })
}

fn top_operator_claim(g: G2, n: u64) -> Result<bool> {
    let int = |a: i64, b: i64, claimed: BigInt| top_check(n, &BigInt::from(a), &BigInt::from(b), &claimed);
    match g {
        G2::A => int(1, 0, BigInt::from(2)),
        G2::B => int(0, 1, BigInt::one()),
        G2::OneFour => int(1, 4, crate::psi::psi_recurrence_in(&BigInt::one(), &BigInt::from(4), n)),
        G2::OneThree => int(1, 3, lucas(n).pop().unwrap()),
        G2::OneOne => int(1, 1, BigInt::from(-1)),
        G2::OneTwo => int(1, 2, BigInt::from(2)),
        G2::TwoFive => int(2, 5, pow2(n) + 1),
        G2::OneRoot2 => top_check(n, &quad(1, 0, 2), &quad(0, 1, 2), &quad(2, 0, 2)),
        G2::Dickson => {
            let (x, al) = (v("x"), v("alpha"));
            top_check(n, &al, &(al.scale_int(2) - x.pow(2)), &dickson(n).pop().unwrap())
        }
        G2::Chebyshev => {
            let x = v("x");
            let beta = SparsePoly::int(2) - x.pow(2).scale_int(4);
            top_check(n, &SparsePoly::one(), &beta, &chebyshev_t(n).pop().unwrap().scale_int(2))
        }
    }
}

/// `(∂_a + (φ−1)∂_b)^h Ψ(a,b,n) / h!`, which equals Ψ(1, φ−1, n).
pub fn golden_value(n: u64) -> Result<QuadExt> {
    let one = quad(1, 0, 5);
    let beta = QuadExt::golden_ratio() - one.clone();
    let lhs = top_operator(n, &one, &beta)?;
    let hf = one.from_int_like(&factorial(half(n)));
    let direct = crate::psi::psi_recurrence_in(&one, &beta, n);
    if lhs != hf * direct.clone() {
        return Err(Error::Precondition(format!("top operator disagrees with psi at n = {n}")));
    }
    Ok(direct)
}

/// `(l, Ψ(1, φ−1, 2^l))` for odd `l` in `lo..=hi`; recorded, not asserted.
pub fn golden_odd_l_observation(lo: u32, hi: u32) -> Result<Vec<(u32, QuadExt)>> {
    (lo..=hi)
        .filter(|l| l % 2 == 1)
        .map(|l| Ok((l, crate::psi::psi_ladder_in(&quad(1, 0, 5), &(QuadExt::golden_ratio() - quad(1, 0, 5)), &pow2(l as u64))?)))
        .collect()
}

// ---------------------------------------------------------------------------
// Periods
// ---------------------------------------------------------------------------

/// Minimal period of the state (Ψ(n), Ψ(n+1), n mod 2) and one period of values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodResult {
    pub a: String,
    pub b: String,
    pub ring: String,
    pub period: u64,
    pub table: Vec<String>,
}

/// First return of the state to `(2, 1, 0)` within `cap` steps.
pub fn detect_period_in<S: Scalar>(a: &S, b: &S, cap: u64) -> Result<(u64, Vec<S>)> {
    let c = a.from_i64_like(2) * a.clone() - b.clone();
    let mut vals = vec![a.from_i64_like(2), a.one_like()];
    for n in 1..=cap {
        let k = n as usize;
        let next = if n % 2 == 1 {
            c.clone() * vals[k].clone()
        } else {
            vals[k].clone()
        } - a.clone() * vals[k - 1].clone();
        vals.push(next);
        if n % 2 == 0 && vals[k] == vals[0] && vals[k + 1] == vals[1] {
            vals.truncate(k);
            return Ok((n, vals));
        }
    }
    Err(Error::NoPeriod(cap))
}

pub fn detect_period(a: &ExactScalar, b: &ExactScalar, cap: u64) -> Result<PeriodResult> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch {
            left: a.ring().to_string(),
            right: b.ring().to_string(),
        });
    }
    fn finish<S: Scalar>(r: (u64, Vec<S>)) -> (u64, Vec<String>) {
        (r.0, r.1.iter().map(|x| x.to_string()).collect())
    }
    let (period, table) = match (a, b) {
        (ExactScalar::Int(x), ExactScalar::Int(y)) => finish(detect_period_in(x, y, cap)?),
        (ExactScalar::Rat(x), ExactScalar::Rat(y)) => finish(detect_period_in(x, y, cap)?),
        (ExactScalar::Quad(x), ExactScalar::Quad(y)) => {
            if x.radicand() != y.radicand() {
                return Err(Error::RadicandMismatch {
                    left: x.radicand(),
                    right: y.radicand(),
                });
            }
            finish(detect_period_in(x, y, cap)?)
        }
        (ExactScalar::Mod(x), ExactScalar::Mod(y)) => finish(detect_period_in(x, y, cap)?),
        _ => unreachable!("rings already compared"),
    };
    Ok(PeriodResult {
        a: a.to_string(),
        b: b.to_string(),
        ring: a.ring().to_string(),
        period,
        table,
    })
}

/// A catalogued periodic specialization with its one-period value table.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodCase {
    pub name: &'static str,
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub period: u64,
    pub table: Vec<ExactScalar>,
}

fn symmetric_table(period: u64, classes: &[(&[u64], ExactScalar)]) -> Vec<ExactScalar> {
    let mut out: Vec<Option<ExactScalar>> = vec![None; period as usize];
    for (residues, value) in classes {
        for &r in *residues {
            out[r as usize] = Some(value.clone());
            out[((period - r) % period) as usize] = Some(value.clone());
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, x)| x.unwrap_or_else(|| panic!("residue {i} missing from table")))
        .collect()
}

/// The six catalogued pairs, in period order.
pub fn period_catalogue() -> Vec<PeriodCase> {
    let i = |k: i64| ExactScalar::Int(BigInt::from(k));
    let q = |u: i64, w: i64, d: u64| ExactScalar::Quad(quad(u, w, d));
    let phi = QuadExt::golden_ratio();
    let one5 = quad(1, 0, 5);
    let g = |x: QuadExt| ExactScalar::Quad(x);
    vec![
        PeriodCase {
            name: "psi(1,1,n)",
            a: i(1),
            b: i(1),
            period: 6,
            table: symmetric_table(6, &[(&[0], i(2)), (&[1], i(1)), (&[2], i(-1)), (&[3], i(-2))]),
        },
        PeriodCase {
            name: "psi(1,0,n)",
            a: i(1),
            b: i(0),
            period: 8,
            table: symmetric_table(8, &[(&[0], i(2)), (&[1], i(1)), (&[2], i(0)), (&[3], i(-1)), (&[4], i(-2))]),
        },
        PeriodCase {
            name: "psi(1,-1,n)",
            a: i(1),
            b: i(-1),
            period: 12,
            table: symmetric_table(
                12,
                &[(&[0], i(2)), (&[1, 2], i(1)), (&[3], i(0)), (&[4, 5], i(-1)), (&[6], i(-2))],
            ),
        },
        PeriodCase {
            name: "psi(1,sqrt(2),n)",
            a: q(1, 0, 2),
            b: q(0, 1, 2),
            period: 16,
            table: symmetric_table(
                16,
                &[
                    (&[0], q(2, 0, 2)),
                    (&[1], q(1, 0, 2)),
                    (&[2], q(0, -1, 2)),
                    (&[3], q(-1, -1, 2)),
                    (&[4], q(0, 0, 2)),
                    (&[5], q(1, 1, 2)),
                    (&[6], q(0, 1, 2)),
                    (&[7], q(-1, 0, 2)),
                    (&[8], q(-2, 0, 2)),
                ],
            ),
        },
        PeriodCase {
            name: "psi(1,phi-1,n)",
            a: g(one5.clone()),
            b: g(phi.clone() - one5.clone()),
            period: 20,
            table: symmetric_table(
                20,
                &[
                    (&[0], q(2, 0, 5)),
                    (&[1], q(1, 0, 5)),
                    (&[2], g(-phi.clone() + one5.clone())),
                    (&[3, 4], g(-phi.clone())),
                    (&[5], q(0, 0, 5)),
                    (&[6, 7], g(phi.clone())),
                    (&[8], g(phi.clone() - one5.clone())),
                    (&[9], q(-1, 0, 5)),
                    (&[10], q(-2, 0, 5)),
                ],
            ),
        },
        PeriodCase {
            name: "psi(1,sqrt(3),n)",
            a: q(1, 0, 3),
            b: q(0, 1, 3),
            period: 24,
            table: symmetric_table(
                24,
                &[
                    (&[0], q(2, 0, 3)),
                    (&[1, 4], q(1, 0, 3)),
                    (&[2], q(0, -1, 3)),
                    (&[3], q(-1, -1, 3)),
                    (&[5], q(2, 1, 3)),
                    (&[6], q(0, 0, 3)),
                    (&[7], q(-2, -1, 3)),
                    (&[8, 11], q(-1, 0, 3)),
                    (&[9], q(1, 1, 3)),
                    (&[10], q(0, 1, 3)),
                    (&[12], q(-2, 0, 3)),
                ],
            ),
        },
    ]
}

/// Outcome of matching one catalogued case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodCheck {
    pub name: &'static str,
    pub expected_period: u64,
    pub detected: PeriodResult,
    pub table_matches: bool,
}

impl PeriodCheck {
    pub fn passed(&self) -> bool {
        self.table_matches && self.detected.period == self.expected_period
    }
}

pub fn check_period_case(case: &PeriodCase, cap: u64) -> Result<PeriodCheck> {
    let detected = detect_period(&case.a, &case.b, cap)?;
    let want: Vec<String> = case.table.iter().map(|x| x.to_string()).collect();
    Ok(PeriodCheck {
        name: case.name,
        expected_period: case.period,
        table_matches: detected.table == want,
        detected,
    })
}
