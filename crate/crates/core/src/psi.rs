//! The sequence Ψ(a,b,n).
//!
//! Ψ(0) = 2, Ψ(1) = 1 and Ψ(n+1) = (2a−b)^{δ(n)} Ψ(n) − a Ψ(n−1), where δ(n)
//! is the parity of n. Four evaluation routes are provided: the recurrence,
//! the explicit binomial sum, symbolic polynomials in `a, b`, and an
//! O(log n) doubling ladder usable in any [`Scalar`] ring (in particular
//! modulo large moduli).

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, ExactScalar, ModInt, Modulus, RingTag, Scalar};
use crate::multipoly::{v, SparsePoly};

pub const DEFAULT_SYMBOLIC_CAP: u64 = 256;

static SYMBOLIC_CAP: AtomicU64 = AtomicU64::new(DEFAULT_SYMBOLIC_CAP);

pub fn set_symbolic_cap(cap: u64) {
    SYMBOLIC_CAP.store(cap, Ordering::Relaxed);
}

pub fn symbolic_cap() -> u64 {
    SYMBOLIC_CAP.load(Ordering::Relaxed)
}

pub fn delta(n: u64) -> u32 {
    (n & 1) as u32
}

pub fn half(n: u64) -> u64 {
    n / 2
}

/// The parameters `(a, b)` of Ψ, both in the same ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiParams {
    a: ExactScalar,
    b: ExactScalar,
}

impl PsiParams {
    pub fn new(a: ExactScalar, b: ExactScalar) -> Result<Self> {
        if a.ring() != b.ring() {
            return Err(Error::RingMismatch {
                left: a.ring().to_string(),
                right: b.ring().to_string(),
            });
        }
        Ok(PsiParams { a, b })
    }

    pub fn int(a: i64, b: i64) -> Self {
        PsiParams {
            a: ExactScalar::Int(a.into()),
            b: ExactScalar::Int(b.into()),
        }
    }

    pub fn parse(a: &str, b: &str, ring: &RingTag) -> Result<Self> {
        Self::new(ExactScalar::parse(a, ring)?, ExactScalar::parse(b, ring)?)
    }

    pub fn a(&self) -> &ExactScalar {
        &self.a
    }

    pub fn b(&self) -> &ExactScalar {
        &self.b
    }

    pub fn ring(&self) -> RingTag {
        self.a.ring()
    }
}

macro_rules! on_ring {
    ($p:expr, |$a:ident, $b:ident| $body:expr) => {
        match (&$p.a, &$p.b) {
            (ExactScalar::Int($a), ExactScalar::Int($b)) => ExactScalar::Int($body),
            (ExactScalar::Rat($a), ExactScalar::Rat($b)) => ExactScalar::Rat($body),
            (ExactScalar::Quad($a), ExactScalar::Quad($b)) => ExactScalar::Quad($body),
            (ExactScalar::Mod($a), ExactScalar::Mod($b)) => ExactScalar::Mod($body),
            _ => unreachable!("PsiParams::new enforces a common ring"),
        }
    };
}

// ---------------------------------------------------------------------------
// Generic evaluators
// ---------------------------------------------------------------------------

/// Ψ(a,b,0..=n_max) by the defining recurrence.
pub fn psi_sequence<S: Scalar>(a: &S, b: &S, n_max: u64) -> Vec<S> {
    let c = a.clone() + a.clone() - b.clone();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(a.from_i64_like(2));
    if n_max == 0 {
        return out;
    }
    out.push(a.one_like());
    for k in 1..n_max {
        let k = k as usize;
        let lead = if k % 2 == 1 {
            c.clone() * out[k].clone()
        } else {
            out[k].clone()
        };
        out.push(lead - a.clone() * out[k - 1].clone());
    }
    out
}

/// Ψ(a,b,n) by the recurrence in O(n) ring operations.
pub fn psi_recurrence_in<S: Scalar>(a: &S, b: &S, n: u64) -> S {
    let c = a.clone() + a.clone() - b.clone();
    let mut prev = a.from_i64_like(2);
    if n == 0 {
        return prev;
    }
    let mut cur = a.one_like();
    for k in 1..n {
        let lead = if k % 2 == 1 { c.clone() * cur.clone() } else { cur.clone() };
        let next = lead - a.clone() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The integer `n/(n−i) · C(n−i, i)`, checked for integrality.
pub fn explicit_coefficient(n: u64, i: u64) -> Result<BigInt> {
    if n == 0 || 2 * i > n {
        return Err(Error::Precondition(format!(
            "explicit coefficient needs n >= 1 and 0 <= i <= n/2, got n={n}, i={i}"
        )));
    }
    let q = BigRational::new(BigInt::from(n), BigInt::from(n - i)) * BigRational::from_integer(binomial(n - i, i));
    if !q.is_integer() {
        return Err(Error::NonIntegral(format!("n/(n-i)*C(n-i,i) at n={n}, i={i} is {q}")));
    }
    Ok(q.to_integer())
}

/// Ψ(a,b,n) by the explicit sum Σ_i n/(n−i) C(n−i,i) (−a)^i (2a−b)^{⌊n/2⌋−i}; n ≥ 1.
pub fn psi_explicit_in<S: Scalar>(a: &S, b: &S, n: u64) -> Result<S> {
    if n == 0 {
        return Err(Error::Precondition("explicit formula is defined for n >= 1".into()));
    }
    let h = half(n);
    let c = a.clone() + a.clone() - b.clone();
    let neg_a = -a.clone();
    let mut acc = a.zero_like();
    for i in 0..=h {
        let k = explicit_coefficient(n, i)?;
        acc = acc + a.from_int_like(&k) * neg_a.pow_u64(i) * c.pow_u64(h - i);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Doubling ladder
// ---------------------------------------------------------------------------

/// The ladder state at index `index`: Ψ(index), Ψ(index+1) and a^index.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiLadderState<S> {
    pub index: BigInt,
    pub lo: S,
    pub hi: S,
    pub apow: S,
    pub parity: u8,
}

fn ladder_step<S: Scalar>(
    st: &PsiLadderState<S>,
    a: &S,
    c: &S,
    bit: bool,
) -> PsiLadderState<S> {
    let two_apow = st.apow.clone() + st.apow.clone();
    let sq = st.lo.clone() * st.lo.clone();
    let p2k = if st.parity == 1 { c.clone() * sq } else { sq } - two_apow;
    let p2k1 = st.lo.clone() * st.hi.clone() - st.apow.clone();
    let a2k = st.apow.clone() * st.apow.clone();
    let index = &st.index * 2u32;
    if bit {
        PsiLadderState {
            index: index + 1u32,
            lo: p2k1.clone(),
            hi: c.clone() * p2k1 - a.clone() * p2k,
            apow: a2k * a.clone(),
            parity: 1,
        }
    } else {
        PsiLadderState {
            index,
            lo: p2k,
            hi: p2k1,
            apow: a2k,
            parity: 0,
        }
    }
}

/// All ladder states visited while computing Ψ(a,b,n), most significant bit first.
/// Empty for `n = 0`.
pub fn ladder_states<S: Scalar>(a: &S, b: &S, n: &BigInt) -> Result<Vec<PsiLadderState<S>>> {
    if n.is_negative() {
        return Err(Error::Precondition(format!("ladder index must be >= 0, got {n}")));
    }
    if n.is_zero() {
        return Ok(Vec::new());
    }
    let c = a.clone() + a.clone() - b.clone();
    let mut st = PsiLadderState {
        index: BigInt::from(1),
        lo: a.one_like(),
        hi: -b.clone(),
        apow: a.clone(),
        parity: 1,
    };
    let bits = n.bits();
    let mut out = Vec::with_capacity(bits as usize);
    out.push(st.clone());
    for i in (0..bits - 1).rev() {
        st = ladder_step(&st, a, &c, n.bit(i));
        out.push(st.clone());
    }
    Ok(out)
}

/// Ψ(a,b,n) in O(log n) ring operations.
pub fn psi_ladder_in<S: Scalar>(a: &S, b: &S, n: &BigInt) -> Result<S> {
    if n.is_negative() {
        return Err(Error::Precondition(format!("ladder index must be >= 0, got {n}")));
    }
    if n.is_zero() {
        return Ok(a.from_i64_like(2));
    }
    let c = a.clone() + a.clone() - b.clone();
    let mut st = PsiLadderState {
        index: BigInt::from(1),
        lo: a.one_like(),
        hi: -b.clone(),
        apow: a.clone(),
        parity: 1,
    };
    for i in (0..n.bits() - 1).rev() {
        st = ladder_step(&st, a, &c, n.bit(i));
    }
    Ok(st.lo)
}

/// Ψ(a,b,n) mod m in `[0, m)`. Mersenne moduli are reduced by folding.
pub fn psi_mod_ladder(a: &BigInt, b: &BigInt, n: &BigInt, m: &BigInt) -> Result<BigInt> {
    let modulus = Arc::new(Modulus::new(m.clone())?);
    psi_mod_ladder_with(a, b, n, &modulus)
}

pub fn psi_mod_ladder_with(a: &BigInt, b: &BigInt, n: &BigInt, modulus: &Arc<Modulus>) -> Result<BigInt> {
    let am = ModInt::new(a, Arc::clone(modulus));
    let bm = ModInt::new(b, Arc::clone(modulus));
    Ok(psi_ladder_in(&am, &bm, n)?.value().clone())
}

// ---------------------------------------------------------------------------
// Dynamically typed entry points
// ---------------------------------------------------------------------------

pub fn psi_recurrence(params: &PsiParams, n: u64) -> ExactScalar {
    on_ring!(params, |a, b| psi_recurrence_in(a, b, n))
}

pub fn psi_explicit(params: &PsiParams, n: u64) -> Result<ExactScalar> {
    Ok(on_ring!(params, |a, b| psi_explicit_in(a, b, n)?))
}

pub fn psi_ladder(params: &PsiParams, n: &BigInt) -> Result<ExactScalar> {
    Ok(on_ring!(params, |a, b| psi_ladder_in(a, b, n)?))
}

/// Ladder states `(k, Ψ(k), Ψ(k+1))` in the ring of `params`, one per bit of `n`.
pub fn ladder_trace(params: &PsiParams, n: &BigInt) -> Result<Vec<(BigInt, ExactScalar, ExactScalar)>> {
    macro_rules! trace {
        ($a:expr, $b:expr, $wrap:path) => {
            ladder_states($a, $b, n)?
                .into_iter()
                .map(|s| (s.index, $wrap(s.lo), $wrap(s.hi)))
                .collect()
        };
    }
    Ok(match (&params.a, &params.b) {
        (ExactScalar::Int(a), ExactScalar::Int(b)) => trace!(a, b, ExactScalar::Int),
        (ExactScalar::Rat(a), ExactScalar::Rat(b)) => trace!(a, b, ExactScalar::Rat),
        (ExactScalar::Quad(a), ExactScalar::Quad(b)) => trace!(a, b, ExactScalar::Quad),
        (ExactScalar::Mod(a), ExactScalar::Mod(b)) => trace!(a, b, ExactScalar::Mod),
        _ => unreachable!("PsiParams::new enforces a common ring"),
    })
}

/// Ψ with the even extension Ψ(a,b,−l) = Ψ(a,b,l).
pub fn psi_extended(params: &PsiParams, n: i64) -> ExactScalar {
    psi_recurrence(params, n.unsigned_abs())
}

/// Ψ(a,b,n) as a polynomial in the variables `a` and `b`.
pub fn psi_symbolic(n: u64) -> Result<SparsePoly> {
    let cap = symbolic_cap();
    if n > cap {
        return Err(Error::SymbolicCap { n, cap });
    }
    Ok(psi_recurrence_in(&v("a"), &v("b"), n))
}

/// Ψ(p, q, n) for polynomial arguments `p`, `q`.
pub fn psi_of(p: &SparsePoly, q: &SparsePoly, n: u64) -> SparsePoly {
    psi_recurrence_in(p, q, n)
}

/// Checks (2a−b)^{δ(n)δ(m)} Ψ(n) Ψ(m) = Ψ(n+m) + a^{min(n,m)} Ψ(n−m) in the ring of `a`.
pub fn product_identity_in<S: Scalar>(a: &S, b: &S, n: u64, m: u64) -> bool {
    let seq = psi_sequence(a, b, n + m);
    let c = a.clone() + a.clone() - b.clone();
    let mut lhs = seq[n as usize].clone() * seq[m as usize].clone();
    if delta(n) * delta(m) == 1 {
        lhs = c * lhs;
    }
    let rhs = seq[(n + m) as usize].clone() + a.pow_u64(n.min(m)) * seq[n.abs_diff(m) as usize].clone();
    lhs == rhs
}

pub fn psi_product_identity_check(a: &ExactScalar, b: &ExactScalar, n: u64, m: u64) -> Result<bool> {
    let p = PsiParams::new(a.clone(), b.clone())?;
    Ok(match (&p.a, &p.b) {
        (ExactScalar::Int(a), ExactScalar::Int(b)) => product_identity_in(a, b, n, m),
        (ExactScalar::Rat(a), ExactScalar::Rat(b)) => product_identity_in(a, b, n, m),
        (ExactScalar::Quad(a), ExactScalar::Quad(b)) => product_identity_in(a, b, n, m),
        (ExactScalar::Mod(a), ExactScalar::Mod(b)) => product_identity_in(a, b, n, m),
        _ => unreachable!(),
    })
}

/// The product identity with symbolic `a, b`.
pub fn psi_product_identity_symbolic(n: u64, m: u64) -> bool {
    product_identity_in(&v("a"), &v("b"), n, m)
}

/// ⌊n/2⌋ + ⌊m/2⌋ − ⌊(n+m)/2⌋ + δ(n)δ(m) == 0.
pub fn floor_exponent_identity(n: u64, m: u64) -> bool {
    half(n) + half(m) + u64::from(delta(n) * delta(m)) == half(n + m)
}
