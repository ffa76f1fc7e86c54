//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are named. The variable list of a polynomial is kept sorted and
//! pruned of variables that do not occur, and zero coefficients are never
//! stored, so derived equality is mathematical equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat_int, ExactRat, Scalar};

pub const DEFAULT_MAX_DEGREE: u32 = 64;

static MAX_DEGREE: AtomicU32 = AtomicU32::new(DEFAULT_MAX_DEGREE);

/// Sets the total-degree cap used by [`SparsePoly::checked_mul`] and
/// [`SparsePoly::checked_pow`].
pub fn set_max_degree(cap: u32) {
    MAX_DEGREE.store(cap, Ordering::Relaxed);
}

pub fn max_degree() -> u32 {
    MAX_DEGREE.load(Ordering::Relaxed)
}

type Terms = BTreeMap<Vec<u32>, ExactRat>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: Terms,
}

/// A right-hand side for [`SparsePoly::subst`].
pub trait IntoPoly {
    fn into_poly(self) -> SparsePoly;
}

impl IntoPoly for SparsePoly {
    fn into_poly(self) -> SparsePoly {
        self
    }
}

impl IntoPoly for &SparsePoly {
    fn into_poly(self) -> SparsePoly {
        self.clone()
    }
}

impl IntoPoly for i64 {
    fn into_poly(self) -> SparsePoly {
        SparsePoly::int(self)
    }
}

impl IntoPoly for BigInt {
    fn into_poly(self) -> SparsePoly {
        SparsePoly::constant(rat_int(self))
    }
}

impl IntoPoly for &BigInt {
    fn into_poly(self) -> SparsePoly {
        SparsePoly::constant(rat_int(self.clone()))
    }
}

impl IntoPoly for ExactRat {
    fn into_poly(self) -> SparsePoly {
        SparsePoly::constant(self)
    }
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    if a == b {
        return a.to_vec();
    }
    let mut out: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    out.sort();
    out.dedup();
    out
}

fn all_integral(terms: &Terms) -> bool {
    terms.values().all(|c| c.is_integer())
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat_int(c))
    }

    pub fn constant(c: ExactRat) -> Self {
        let mut terms = Terms::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        SparsePoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = Terms::new();
        terms.insert(vec![1], ExactRat::one());
        SparsePoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds `c * prod(var^e)`.
    pub fn monomial(c: ExactRat, powers: &[(&str, u32)]) -> Self {
        let mut p = Self::constant(c);
        for &(v, e) in powers {
            p = p.times(&Self::var(v).pow(e));
        }
        p
    }

    /// Builds a polynomial from raw exponent vectors over `vars` (any order).
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, ExactRat)>,
    {
        let mut acc = SparsePoly::zero();
        for (exps, c) in terms {
            let powers: Vec<(&str, u32)> = vars.iter().copied().zip(exps).collect();
            acc = acc.plus(&Self::monomial(c, &powers));
        }
        acc
    }

    fn from_parts(vars: Vec<String>, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let mut p = SparsePoly { vars, terms };
        p.prune();
        p
    }

    fn prune(&mut self) {
        let n = self.vars.len();
        let mut used = vec![false; n];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|&u| u) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
        self.vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c))
            .collect();
    }

    fn aligned(&self, vars: &[String]) -> Terms {
        if self.vars == vars {
            return self.terms.clone();
        }
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("variable universe must contain operand vars"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut full = vec![0u32; vars.len()];
                for (j, &x) in e.iter().enumerate() {
                    full[idx[j]] = x;
                }
                (full, c.clone())
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &ExactRat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<ExactRat> {
        if self.is_zero() {
            return Some(ExactRat::zero());
        }
        if self.vars.is_empty() {
            return self.terms.get(&Vec::new()).cloned();
        }
        None
    }

    /// The integer value of a constant polynomial.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.constant_value()
            .filter(|c| c.is_integer())
            .map(|c| c.numer().clone())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        all_integral(&self.terms)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Coefficient of the monomial `prod(var^e)`.
    pub fn coeff(&self, powers: &[(&str, u32)]) -> ExactRat {
        let mut key = vec![0u32; self.vars.len()];
        for &(v, e) in powers {
            match self.vars.iter().position(|x| x == v) {
                Some(i) => key[i] += e,
                None if e == 0 => {}
                None => return ExactRat::zero(),
            }
        }
        self.terms.get(&key).cloned().unwrap_or_else(ExactRat::zero)
    }

    /// Groups terms by the power of `var`: `self = sum_k out[k] * var^k`.
    pub fn collect(&self, var: &str) -> BTreeMap<u32, SparsePoly> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            let mut m = BTreeMap::new();
            if !self.is_zero() {
                m.insert(0, self.clone());
            }
            return m;
        };
        let mut groups: BTreeMap<u32, Terms> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            groups.entry(e[i]).or_default().insert(rest, c.clone());
        }
        groups
            .into_iter()
            .map(|(k, t)| (k, SparsePoly::from_parts(self.vars.clone(), t)))
            .collect()
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let mut terms = self.aligned(&vars);
        for (e, c) in other.aligned(&vars) {
            let c = if negate { -c } else { c };
            match terms.get_mut(&e) {
                Some(slot) => *slot += c,
                None => {
                    terms.insert(e, c);
                }
            }
        }
        Self::from_parts(vars, terms)
    }

    pub fn negated(&self) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &ExactRat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat_int(k))
    }

    pub fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = union_vars(&self.vars, &other.vars);
        let lhs = self.aligned(&vars);
        let rhs = other.aligned(&vars);
        let width = vars.len();
        let key = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let mut k = Vec::with_capacity(width);
            k.extend(a.iter().zip(b).map(|(x, y)| x + y));
            k
        };
        let terms: Terms = if all_integral(&lhs) && all_integral(&rhs) {
            let l: Vec<(&Vec<u32>, &BigInt)> = lhs.iter().map(|(e, c)| (e, c.numer())).collect();
            let r: Vec<(&Vec<u32>, &BigInt)> = rhs.iter().map(|(e, c)| (e, c.numer())).collect();
            let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(l.len() * r.len());
            for (ea, ca) in &l {
                for (eb, cb) in &r {
                    let prod = *ca * *cb;
                    match acc.get_mut(&key(ea, eb)) {
                        Some(slot) => *slot += prod,
                        None => {
                            acc.insert(key(ea, eb), prod);
                        }
                    }
                }
            }
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, rat_int(c)))
                .collect()
        } else {
            let mut acc: HashMap<Vec<u32>, ExactRat> = HashMap::new();
            for (ea, ca) in &lhs {
                for (eb, cb) in &rhs {
                    *acc.entry(key(ea, eb)).or_insert_with(ExactRat::zero) += ca * cb;
                }
            }
            acc.into_iter().collect()
        };
        Self::from_parts(vars, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Product that fails instead of exceeding the configured degree cap.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let cap = max_degree();
        let degree = self.total_degree() + other.total_degree();
        if degree > cap && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeCap { degree, cap });
        }
        Ok(self.times(other))
    }

    pub fn checked_pow(&self, e: u32) -> Result<Self> {
        let cap = max_degree();
        let degree = self.total_degree().saturating_mul(e);
        if degree > cap {
            return Err(Error::DegreeCap { degree, cap });
        }
        Ok(self.pow(e))
    }

    /// Partial derivative; zero for a variable that does not occur.
    pub fn diff(&self, var: &str) -> Self {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return Self::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (e2, c * rat_int(e[i]))
            })
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    /// Applies the first-order operator `sum_j coeff_j * d/d(var_j)`.
    pub fn apply_operator(&self, op: &[(&str, SparsePoly)]) -> Self {
        op.iter().fold(Self::zero(), |acc, (v, c)| {
            let d = self.diff(v);
            if d.is_zero() || c.is_zero() {
                acc
            } else {
                acc.plus(&c.times(&d))
            }
        })
    }

    /// Applies `op` `times` times.
    pub fn apply_operator_pow(&self, op: &[(&str, SparsePoly)], times: u32) -> Self {
        (0..times).fold(self.clone(), |p, _| p.apply_operator(op))
    }

    /// Simultaneous substitution. Bindings for variables that do not occur are ignored.
    pub fn subst<P: IntoPoly + Clone>(&self, bindings: &[(&str, P)]) -> Self {
        let mut map: Vec<Option<SparsePoly>> = vec![None; self.vars.len()];
        for (v, p) in bindings {
            if let Some(i) = self.vars.iter().position(|x| x == v) {
                map[i] = Some(p.clone().into_poly());
            }
        }
        if map.iter().all(Option::is_none) {
            return self.clone();
        }
        let mut powers: HashMap<(usize, u32), SparsePoly> = HashMap::new();
        let mut pow_of = |i: usize, e: u32, base: &SparsePoly| -> SparsePoly {
            powers
                .entry((i, e))
                .or_insert_with(|| base.pow(e))
                .clone()
        };
        let mut acc: Vec<SparsePoly> = Vec::new();
        for (e, c) in &self.terms {
            let mut kept = vec![0u32; self.vars.len()];
            let mut factor = SparsePoly::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match &map[i] {
                    Some(base) => factor = factor.times(&pow_of(i, x, base)),
                    None => kept[i] = x,
                }
            }
            let mut rest = Terms::new();
            rest.insert(kept, ExactRat::one());
            acc.push(factor.times(&Self::from_parts(self.vars.clone(), rest)));
        }
        sum_polys(acc)
    }

    /// Evaluates at integer values for every variable; panics if one is unbound.
    pub fn eval_int(&self, bindings: &[(&str, i64)]) -> ExactRat {
        let b: Vec<(&str, SparsePoly)> = bindings.iter().map(|&(v, x)| (v, Self::int(x))).collect();
        let out = self.subst(&b);
        out.constant_value()
            .unwrap_or_else(|| panic!("unbound variables remain: {:?}", out.vars))
    }

    fn leading(&self, vars: &[String]) -> Option<(Vec<u32>, ExactRat)> {
        self.aligned(vars)
            .into_iter()
            .next_back()
    }

    /// Exact quotient `f / g`, found by lexicographic leading-term division.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::NotDivisible);
        }
        let vars = union_vars(&self.vars, &g.vars);
        let (ge, gc) = g.leading(&vars).expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading(&vars) {
            if re.iter().zip(&ge).any(|(r, d)| r < d) {
                return Err(Error::NotDivisible);
            }
            let te: Vec<u32> = re.iter().zip(&ge).map(|(r, d)| r - d).collect();
            let mut t = Terms::new();
            t.insert(te, &rc / &gc);
            let t = Self::from_parts(vars.clone(), t);
            rem = rem.minus(&t.times(g));
            quot = quot.plus(&t);
        }
        Ok(quot)
    }

    /// Renames variables simultaneously.
    pub fn rename(&self, pairs: &[(&str, &str)]) -> Self {
        let b: Vec<(&str, SparsePoly)> = pairs.iter().map(|&(f, t)| (f, Self::var(t))).collect();
        self.subst(&b)
    }

    fn display_order(&self) -> Vec<(&Vec<u32>, &ExactRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        v
    }
}

/// Sums many polynomials, merging pairwise to keep intermediate sizes balanced.
pub fn sum_polys(mut items: Vec<SparsePoly>) -> SparsePoly {
    if items.is_empty() {
        return SparsePoly::zero();
    }
    while items.len() > 1 {
        let mut next = Vec::with_capacity(items.len().div_ceil(2));
        let mut it = items.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.plus(&b)),
                None => next.push(a),
            }
        }
        items = next;
    }
    items.pop().unwrap()
}

pub fn poly_mul(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    f.times(g)
}

pub fn poly_diff(f: &SparsePoly, var: &str) -> SparsePoly {
    f.diff(var)
}

pub fn poly_subst<P: IntoPoly + Clone>(f: &SparsePoly, bindings: &[(&str, P)]) -> SparsePoly {
    f.subst(bindings)
}

pub fn poly_exact_div(f: &SparsePoly, g: &SparsePoly) -> Result<SparsePoly> {
    f.exact_div(g)
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.display_order().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inh:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                SparsePoly::$inh(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a SparsePoly> for &'a SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: &'a SparsePoly) -> SparsePoly {
                SparsePoly::$inh(self, rhs)
            }
        }
        impl<'a> $tr<&'a SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: &'a SparsePoly) -> SparsePoly {
                SparsePoly::$inh(&self, rhs)
            }
        }
        impl<'a> $tr<SparsePoly> for &'a SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                SparsePoly::$inh(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::negated(&self)
    }
}

impl<'a> Neg for &'a SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::negated(self)
    }
}

impl Scalar for SparsePoly {
    fn from_int_like(&self, v: &BigInt) -> Self {
        SparsePoly::constant(rat_int(v.clone()))
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl From<i64> for SparsePoly {
    fn from(v: i64) -> Self {
        SparsePoly::int(v)
    }
}

impl From<BigRational> for SparsePoly {
    fn from(v: BigRational) -> Self {
        SparsePoly::constant(v)
    }
}

/// Shorthand for [`SparsePoly::var`].
pub fn v(name: &str) -> SparsePoly {
    SparsePoly::var(name)
}

/// Shorthand for [`SparsePoly::int`].
pub fn c(value: i64) -> SparsePoly {
    SparsePoly::int(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn x() -> SparsePoly {
        v("x")
    }
    fn y() -> SparsePoly {
        v("y")
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!((&x() + &y()) * (&x() - &y()), x().pow(2) - y().pow(2));
    }

    #[test]
    fn doubled_square_of_quadratic_form() {
        let q = x().pow(2) + &x() * &y() + y().pow(2);
        let lhs = q.pow(2).scale_int(2);
        let rhs = x().pow(4) + y().pow(4) + (x() + y()).pow(4);
        assert_eq!(lhs, rhs);
        assert_eq!(
            lhs.to_string(),
            "2*x^4 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + 2*y^4"
        );
    }

    #[test]
    fn multiply_by_one() {
        let f = x().pow(3) - y().scale_int(5) + c(7);
        assert_eq!(&f * &SparsePoly::one(), f);
    }

    #[test]
    fn derivatives() {
        let p4 = v("b").pow(2) - v("a").pow(2).scale_int(2);
        assert_eq!(p4.diff("a"), v("a").scale_int(-4));
        let p6 = (v("a").pow(2) * v("b")).scale_int(3) - v("b").pow(3);
        assert_eq!(p6.diff("b"), v("a").pow(2).scale_int(3) - v("b").pow(2).scale_int(3));
        assert!(c(9).diff("x").is_zero());
    }

    #[test]
    fn substitution() {
        let f = v("a") + v("b");
        assert_eq!(f.subst(&[("a", 1i64), ("b", 4i64)]), c(5));
        let p4 = v("b").pow(2) - v("a").pow(2).scale_int(2);
        let sub = p4.subst(&[("a", &x() * &y()), ("b", -(x().pow(2) + y().pow(2)))]);
        assert_eq!(sub, x().pow(4) + y().pow(4));
        let none: [(&str, SparsePoly); 0] = [];
        assert_eq!(p4.subst(&none), p4);
    }

    #[test]
    fn substitution_is_simultaneous() {
        let f = v("a") - v("b");
        assert_eq!(f.subst(&[("a", v("b")), ("b", v("a"))]), v("b") - v("a"));
    }

    #[test]
    fn exact_division() {
        let s = &x() + &y();
        assert_eq!(
            (x().pow(3) + y().pow(3)).exact_div(&s).unwrap(),
            x().pow(2) - &x() * &y() + y().pow(2)
        );
        let q5 = (x().pow(5) + y().pow(5)).exact_div(&s).unwrap();
        assert_eq!(
            q5.to_string(),
            "x^4 - x^3*y + x^2*y^2 - x*y^3 + y^4"
        );
        let f = x().pow(2) + c(3);
        assert_eq!(f.exact_div(&SparsePoly::one()).unwrap(), f);
        assert_eq!(
            (x().pow(2) + y().pow(2)).exact_div(&s),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn canonical_text() {
        let p7 = v("a").pow(3) + (v("a").pow(2) * v("b")).scale_int(2)
            - &v("a") * &v("b").pow(2)
            - v("b").pow(3);
        assert_eq!(p7.to_string(), "a^3 + 2*a^2*b - a*b^2 - b^3");
        let p4 = v("b").pow(2) - v("a").pow(2).scale_int(2);
        assert_eq!(p4.to_string(), "-2*a^2 + b^2");
        assert_eq!(SparsePoly::constant(rat(-3, 2)).to_string(), "-3/2");
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }

    #[test]
    fn unused_variables_are_pruned() {
        let f = (&x() + &y()) - y();
        assert_eq!(f.vars(), ["x".to_string()]);
        assert_eq!(f, x());
    }

    #[test]
    fn degree_cap() {
        set_max_degree(DEFAULT_MAX_DEGREE);
        assert!(x().checked_pow(64).is_ok());
        assert_eq!(
            x().checked_pow(65),
            Err(Error::DegreeCap { degree: 65, cap: 64 })
        );
        assert!(x().pow(40).checked_mul(&y().pow(30)).is_err());
    }

    #[test]
    fn operator_application() {
        let p4 = v("b").pow(2) - v("a").pow(2).scale_int(2);
        let op = [("a", v("alpha")), ("b", v("beta"))];
        assert_eq!(
            p4.apply_operator(&op).to_string(),
            "-4*a*alpha + 2*b*beta"
        );
    }

    #[test]
    fn collect_by_power() {
        let f = (x() + c(1)).pow(2) * y();
        let g = f.collect("x");
        assert_eq!(g[&2], y());
        assert_eq!(g[&1], y().scale_int(2));
        assert_eq!(g[&0], y());
    }
}
