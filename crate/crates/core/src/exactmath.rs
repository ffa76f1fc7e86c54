//! Exact arithmetic substrate.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`. On top of
//! those this module adds real quadratic extensions `u + v*sqrt(d)`, residues
//! modulo an arbitrary modulus (with a shift-and-add fast path for Mersenne
//! moduli `2^p - 1`), and the [`Scalar`] trait that the Psi evaluators are
//! generic over.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// A commutative ring element that knows how to embed integers into its own
/// ring. The `_like` constructors exist because some rings carry runtime
/// parameters (the radicand of a [`QuadExt`], the modulus of a [`ModInt`]).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int_like(&self, v: &BigInt) -> Self;

    fn is_zero_value(&self) -> bool;

    fn from_i64_like(&self, v: i64) -> Self {
        self.from_int_like(&BigInt::from(v))
    }

    fn zero_like(&self) -> Self {
        self.from_i64_like(0)
    }

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for BigInt {
    fn from_int_like(&self, v: &BigInt) -> Self {
        v.clone()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for BigRational {
    fn from_int_like(&self, v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

pub fn rat(n: i64, d: i64) -> ExactRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> ExactRat {
    BigRational::from_integer(n.into())
}

/// Returns the numerator of `r` if it is an integer.
pub fn rat_to_int(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn parse_rational(s: &str) -> Result<ExactRat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= d {
        if d % (f * f) == 0 {
            return false;
        }
        f += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Quadratic extensions
// ---------------------------------------------------------------------------

/// An element `u + v*sqrt(d)` of the real quadratic field Q(sqrt(d)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    d: u64,
    u: ExactRat,
    v: ExactRat,
}

impl QuadExt {
    pub fn new(u: ExactRat, v: ExactRat, d: u64) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::InvalidRadicand(d));
        }
        Ok(QuadExt { d, u, v })
    }

    pub fn from_ints(u: i64, v: i64, d: u64) -> Result<Self> {
        Self::new(rat_int(u), rat_int(v), d)
    }

    pub fn rational(u: ExactRat, d: u64) -> Result<Self> {
        Self::new(u, ExactRat::zero(), d)
    }

    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(ExactRat::zero(), ExactRat::one(), d)
    }

    /// The golden ratio `(1 + sqrt 5) / 2`.
    pub fn golden_ratio() -> Self {
        QuadExt {
            d: 5,
            u: rat(1, 2),
            v: rat(1, 2),
        }
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn rational_part(&self) -> &ExactRat {
        &self.u
    }

    pub fn surd_part(&self) -> &ExactRat {
        &self.v
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            d: self.d,
            u: self.u.clone(),
            v: -self.v.clone(),
        }
    }

    /// Field norm `u^2 - d v^2`.
    pub fn norm(&self) -> ExactRat {
        &self.u * &self.u - rat_int(self.d) * &self.v * &self.v
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::RadicandMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(QuadExt {
            d: self.d,
            u: &self.u + &other.u,
            v: &self.v + &other.v,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(QuadExt {
            d: self.d,
            u: &self.u - &other.u,
            v: &self.v - &other.v,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let d = rat_int(self.d);
        Ok(QuadExt {
            d: self.d,
            u: &self.u * &other.u + d * &self.v * &other.v,
            v: &self.u * &other.v + &other.u * &self.v,
        })
    }
}

/// Exact product in Q(sqrt d); fails if the two operands use different radicands.
pub fn quad_mul(x: &QuadExt, y: &QuadExt) -> Result<QuadExt> {
    x.checked_mul(y)
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("quadratic radicand mismatch")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("quadratic radicand mismatch")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("quadratic radicand mismatch")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> Self {
        QuadExt {
            d: self.d,
            u: -self.u,
            v: -self.v,
        }
    }
}

impl Scalar for QuadExt {
    fn from_int_like(&self, v: &BigInt) -> Self {
        QuadExt {
            d: self.d,
            u: rat_int(v.clone()),
            v: ExactRat::zero(),
        }
    }

    fn is_zero_value(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |v: &ExactRat| {
            if v.is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", v, self.d)
            }
        };
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        if self.u.is_zero() {
            return if self.v.is_negative() {
                write!(f, "-{}", surd(&-self.v.clone()))
            } else {
                write!(f, "{}", surd(&self.v))
            };
        }
        if self.v.is_negative() {
            write!(f, "{} - {}", self.u, surd(&-self.v.clone()))
        } else {
            write!(f, "{} + {}", self.u, surd(&self.v))
        }
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    /// Accepts `u`, `sqrt(d)`, `v*sqrt(d)`, `u+v*sqrt(d)`, `u-sqrt(d)` and `phi`.
    /// A bare rational without a surd needs a radicand, so it is rejected here;
    /// use [`QuadExt::rational`].
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "phi" {
            return Ok(QuadExt::golden_ratio());
        }
        let idx = s
            .find("sqrt(")
            .ok_or_else(|| Error::Parse(format!("missing sqrt(d) in {s:?}")))?;
        let close = s[idx..]
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed sqrt( in {s:?}")))?
            + idx;
        if close + 1 != s.len() {
            return Err(Error::Parse(format!("trailing input after sqrt(..) in {s:?}")));
        }
        let d: u64 = s[idx + 5..close]
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
        let prefix = s[..idx].trim_end_matches('*');
        let split = prefix
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (u_str, v_str) = match split {
            Some(i) => (&prefix[..i], &prefix[i..]),
            None => ("", prefix),
        };
        let u = if u_str.is_empty() {
            ExactRat::zero()
        } else {
            parse_rational(u_str)?
        };
        let v = match v_str {
            "" | "+" => ExactRat::one(),
            "-" => -ExactRat::one(),
            other => parse_rational(other.trim_start_matches('+'))?,
        };
        QuadExt::new(u, v, d)
    }
}

// ---------------------------------------------------------------------------
// Moduli and residues
// ---------------------------------------------------------------------------

/// The Mersenne modulus `2^p - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MersenneMod {
    p: u32,
    modulus: BigInt,
}

impl MersenneMod {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::Precondition(format!(
                "Mersenne exponent must be >= 2, got {p}"
            )));
        }
        Ok(MersenneMod {
            p,
            modulus: (BigInt::one() << p) - 1,
        })
    }

    pub fn exponent(&self) -> u32 {
        self.p
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Reduces `x` into `[0, 2^p - 1)` by folding `p`-bit limbs:
    /// `x = hi * 2^p + lo  =>  x ≡ hi + lo`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        if x.sign() == Sign::Minus {
            let r = self.reduce_nonneg(-x);
            return if r.is_zero() { r } else { &self.modulus - r };
        }
        self.reduce_nonneg(x.clone())
    }

    fn reduce_nonneg(&self, mut x: BigInt) -> BigInt {
        let p = u64::from(self.p);
        while x.bits() > p {
            x = (&x & &self.modulus) + (&x >> self.p);
        }
        if x == self.modulus {
            BigInt::zero()
        } else {
            x
        }
    }
}

/// `x mod (2^p - 1)`, always in `[0, 2^p - 1)`, negative inputs included.
pub fn mersenne_reduce(x: &BigInt, m: &MersenneMod) -> BigInt {
    m.reduce(x)
}

/// A modulus `m >= 2`; Mersenne numbers are detected and reduced by folding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modulus {
    Generic(BigInt),
    Mersenne(MersenneMod),
}

impl Modulus {
    pub fn new(m: BigInt) -> Result<Self> {
        if m < BigInt::from(2) {
            return Err(Error::InvalidModulus(m));
        }
        let succ = &m + 1u32;
        let bits = succ.bits();
        if bits >= 3 && succ == BigInt::one() << (bits - 1) {
            let p = u32::try_from(bits - 1).map_err(|_| Error::InvalidModulus(m.clone()))?;
            return Ok(Modulus::Mersenne(MersenneMod::new(p)?));
        }
        Ok(Modulus::Generic(m))
    }

    pub fn value(&self) -> &BigInt {
        match self {
            Modulus::Generic(m) => m,
            Modulus::Mersenne(mm) => mm.modulus(),
        }
    }

    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self {
            Modulus::Generic(m) => x.mod_floor(m),
            Modulus::Mersenne(mm) => mm.reduce(x),
        }
    }
}

/// A residue class modulo a shared [`Modulus`]; the stored value is always reduced.
#[derive(Clone, Debug)]
pub struct ModInt {
    value: BigInt,
    modulus: Arc<Modulus>,
}

impl ModInt {
    pub fn new(value: &BigInt, modulus: Arc<Modulus>) -> Self {
        ModInt {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.modulus, &other.modulus)
                || self.modulus.value() == other.modulus.value(),
            "residues modulo different moduli"
        );
    }

    fn wrap(&self, raw: BigInt) -> Self {
        ModInt {
            value: self.modulus.reduce(&raw),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl PartialEq for ModInt {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.modulus.value() == other.modulus.value()
    }
}

impl Eq for ModInt {}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        self.wrap(&self.value + &rhs.value)
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        self.wrap(&self.value - &rhs.value)
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: Self) -> Self {
        self.same_ring(&rhs);
        self.wrap(&self.value * &rhs.value)
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> Self {
        self.wrap(-&self.value)
    }
}

impl Scalar for ModInt {
    fn from_int_like(&self, v: &BigInt) -> Self {
        self.wrap(v.clone())
    }

    fn is_zero_value(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Inverse of `x` modulo `m`, in `[0, m)`.
///
/// When `gcd(x, m) != 1` the error carries the gcd, which is a nontrivial
/// factor of `m` whenever it differs from `m` itself.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Result<BigInt> {
    if m < &BigInt::from(2) {
        return Err(Error::InvalidModulus(m.clone()));
    }
    let xr = x.mod_floor(m);
    let eg = xr.extended_gcd(m);
    if !eg.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: x.clone(),
            modulus: m.clone(),
            gcd: eg.gcd,
        });
    }
    Ok(eg.x.mod_floor(m))
}

// ---------------------------------------------------------------------------
// Dynamically typed scalars
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    Integer,
    Rational,
    Quadratic(u64),
    Modular(String),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integer => write!(f, "integer"),
            RingTag::Rational => write!(f, "rational"),
            RingTag::Quadratic(d) => write!(f, "quadratic({d})"),
            RingTag::Modular(m) => write!(f, "modular({m})"),
        }
    }
}

impl FromStr for RingTag {
    type Err = Error;

    /// `int`, `rat`, `quad:D`, `mod:M` (long names are accepted too).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        match (head, arg) {
            ("int" | "integer", None) => Ok(RingTag::Integer),
            ("rat" | "rational", None) => Ok(RingTag::Rational),
            ("quad" | "quadratic", Some(d)) => {
                let d: u64 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad radicand {d:?}")))?;
                if !is_square_free(d) {
                    return Err(Error::InvalidRadicand(d));
                }
                Ok(RingTag::Quadratic(d))
            }
            ("mod" | "modular", Some(m)) => {
                let m = BigInt::from_str(m).map_err(|_| Error::Parse(format!("bad modulus {m:?}")))?;
                if m < BigInt::from(2) {
                    return Err(Error::InvalidModulus(m));
                }
                Ok(RingTag::Modular(m.to_string()))
            }
            _ => Err(Error::Parse(format!("unknown ring {s:?}"))),
        }
    }
}

/// An exact value in one of the supported rings.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactScalar {
    Int(ExactInt),
    Rat(ExactRat),
    Quad(QuadExt),
    Mod(ModInt),
}

impl ExactScalar {
    pub fn ring(&self) -> RingTag {
        match self {
            ExactScalar::Int(_) => RingTag::Integer,
            ExactScalar::Rat(_) => RingTag::Rational,
            ExactScalar::Quad(q) => RingTag::Quadratic(q.radicand()),
            ExactScalar::Mod(m) => RingTag::Modular(m.modulus().value().to_string()),
        }
    }

    /// Parses `s` as an element of `ring`.
    pub fn parse(s: &str, ring: &RingTag) -> Result<Self> {
        match ring {
            RingTag::Integer => BigInt::from_str(s.trim())
                .map(ExactScalar::Int)
                .map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
            RingTag::Rational => parse_rational(s).map(ExactScalar::Rat),
            RingTag::Quadratic(d) => {
                let q = if s.contains("sqrt(") || s.trim() == "phi" {
                    s.parse::<QuadExt>()?
                } else {
                    QuadExt::rational(parse_rational(s)?, *d)?
                };
                if q.radicand() != *d {
                    return Err(Error::RadicandMismatch {
                        left: *d,
                        right: q.radicand(),
                    });
                }
                Ok(ExactScalar::Quad(q))
            }
            RingTag::Modular(m) => {
                let m = BigInt::from_str(m).map_err(|_| Error::Parse(format!("bad modulus {m:?}")))?;
                let modulus = Arc::new(Modulus::new(m)?);
                let v = BigInt::from_str(s.trim())
                    .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
                Ok(ExactScalar::Mod(ModInt::new(&v, modulus)))
            }
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Int(v) => write!(f, "{v}"),
            ExactScalar::Rat(v) => write!(f, "{v}"),
            ExactScalar::Quad(v) => write!(f, "{v}"),
            ExactScalar::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(6), big(720));
    }

    #[test]
    fn mersenne_reduce_examples() {
        let m5 = MersenneMod::new(5).unwrap();
        assert_eq!(mersenne_reduce(&big(0), &m5), big(0));
        assert_eq!(mersenne_reduce(&big(31), &m5), big(0));
        assert_eq!(mersenne_reduce(&big(37634), &m5), big(0));
        assert_eq!(mersenne_reduce(&big(-4), &m5), big(27));
        assert_eq!(mersenne_reduce(&big(-31), &m5), big(0));
        assert_eq!(mersenne_reduce(&big(62), &m5), big(0));
        assert_eq!(mersenne_reduce(&big(63), &m5), big(1));
    }

    #[test]
    fn quad_mul_examples() {
        let a = QuadExt::from_ints(1, 1, 2).unwrap();
        let b = QuadExt::from_ints(1, -1, 2).unwrap();
        assert_eq!(quad_mul(&a, &b).unwrap(), QuadExt::from_ints(-1, 0, 2).unwrap());

        let phi = QuadExt::golden_ratio();
        let sq = quad_mul(&phi, &phi).unwrap();
        assert_eq!(sq, QuadExt::new(rat(3, 2), rat(1, 2), 5).unwrap());
        assert_eq!(sq, phi.clone() + phi.one_like());

        let zero = QuadExt::from_ints(0, 0, 3).unwrap();
        let other = QuadExt::from_ints(7, 2, 3).unwrap();
        assert!(quad_mul(&zero, &other).unwrap().is_zero_value());
    }

    #[test]
    fn quad_mul_rejects_mixed_radicands() {
        let a = QuadExt::sqrt(2).unwrap();
        let b = QuadExt::sqrt(3).unwrap();
        assert_eq!(
            quad_mul(&a, &b),
            Err(Error::RadicandMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn radicand_must_be_square_free() {
        assert_eq!(QuadExt::sqrt(4), Err(Error::InvalidRadicand(4)));
        assert_eq!(QuadExt::sqrt(1), Err(Error::InvalidRadicand(1)));
        assert!(QuadExt::sqrt(7).is_ok());
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&big(2), &big(31)).unwrap(), big(16));
        assert_eq!(mod_inverse(&big(1), &big(7)).unwrap(), big(1));
        assert_eq!(mod_inverse(&big(24), &big(31)).unwrap(), big(22));
        assert_eq!(mod_inverse(&big(-2), &big(31)).unwrap(), big(15));
    }

    #[test]
    fn mod_inverse_reports_factor() {
        match mod_inverse(&big(46), &big(2047)) {
            Err(Error::NotInvertible { gcd, .. }) => assert_eq!(gcd, big(23)),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn modulus_detects_mersenne() {
        assert!(matches!(Modulus::new(big(31)).unwrap(), Modulus::Mersenne(m) if m.exponent() == 5));
        assert!(matches!(Modulus::new(big(30)).unwrap(), Modulus::Generic(_)));
        assert!(matches!(Modulus::new(big(3)).unwrap(), Modulus::Mersenne(_)));
        assert!(Modulus::new(big(1)).is_err());
    }

    #[test]
    fn quad_display_and_parse() {
        let cases = [
            ("1+sqrt(2)", "1 + sqrt(2)"),
            ("-1-sqrt(2)", "-1 - sqrt(2)"),
            ("-sqrt(3)", "-sqrt(3)"),
            ("1/2+1/2*sqrt(5)", "1/2 + 1/2*sqrt(5)"),
            ("phi", "1/2 + 1/2*sqrt(5)"),
            ("2*sqrt(3)", "2*sqrt(3)"),
        ];
        for (input, shown) in cases {
            let q: QuadExt = input.parse().unwrap();
            assert_eq!(q.to_string(), shown, "{input}");
            assert_eq!(q.to_string().parse::<QuadExt>().unwrap(), q);
        }
    }

    #[test]
    fn ring_tag_parse() {
        assert_eq!("int".parse::<RingTag>().unwrap(), RingTag::Integer);
        assert_eq!("quad:5".parse::<RingTag>().unwrap(), RingTag::Quadratic(5));
        assert_eq!(
            "mod:31".parse::<RingTag>().unwrap(),
            RingTag::Modular("31".into())
        );
        assert!("quad:9".parse::<RingTag>().is_err());
        assert!("mod:1".parse::<RingTag>().is_err());
    }

    #[test]
    fn scalar_parse_in_rings() {
        let q = ExactScalar::parse("phi", &RingTag::Quadratic(5)).unwrap();
        assert_eq!(q, ExactScalar::Quad(QuadExt::golden_ratio()));
        let r = ExactScalar::parse("3", &RingTag::Quadratic(2)).unwrap();
        assert_eq!(r.to_string(), "3");
        let m = ExactScalar::parse("-4", &RingTag::Modular("31".into())).unwrap();
        assert_eq!(m.to_string(), "27");
        assert!(ExactScalar::parse("sqrt(3)", &RingTag::Quadratic(2)).is_err());
    }
}
