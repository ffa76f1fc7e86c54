//! The bracket `[x,y | u,v] = (xu − yv)(xv − yu)` and identities between sums
//! of like powers built from it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::eightlevels::{expand_powersum_basis, powersum_quotient_in, IdentityCheck};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, rat_int, Scalar};
use crate::multipoly::{c, sum_polys, v, SparsePoly};
use crate::psi::half;

pub const SPECIAL_CASE_CAP: u64 = 10;

/// `[x,y | u,v]` by the product form.
pub fn bracket<S: Scalar>(x: &S, y: &S, u: &S, w: &S) -> S {
    (x.clone() * u.clone() - y.clone() * w.clone()) * (x.clone() * w.clone() - y.clone() * u.clone())
}

/// `[x,y | u,v]` by the expanded form `(x² + y²)uv − xy(u² + v²)`.
pub fn bracket_expanded<S: Scalar>(x: &S, y: &S, u: &S, w: &S) -> S {
    (x.clone() * x.clone() + y.clone() * y.clone()) * u.clone() * w.clone()
        - x.clone() * y.clone() * (u.clone() * u.clone() + w.clone() * w.clone())
}

fn br(x: &str, y: &str, u: &str, w: &str) -> SparsePoly {
    bracket(&v(x), &v(y), &v(u), &v(w))
}

/// Reduces a polynomial in the formal symbol `i` using `i² = −1`.
pub fn reduce_imaginary(p: &SparsePoly) -> SparsePoly {
    let i = v("i");
    sum_polys(
        p.collect("i")
            .into_iter()
            .map(|(k, part)| {
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                let part = part.scale_int(sign);
                if k % 2 == 1 {
                    part * i.clone()
                } else {
                    part
                }
            })
            .collect(),
    )
}

/// The elementary bracket properties, symbolically. Complex entries use a
/// formal `i` reduced by `i² = −1`.
pub fn bracket_property_report() -> Vec<IdentityCheck> {
    let (x, y, u, w, d) = (v("x"), v("y"), v("u"), v("v"), v("d"));
    let base = br("x", "y", "u", "v");
    let d2 = d.pow(2);
    let i = v("i");
    let complex = |a: &SparsePoly, b: &SparsePoly| reduce_imaginary(&bracket(a, b, &u, &w));
    let usq = u.pow(2) + w.pow(2);
    let checks = [
        ("product-form=expanded-form", base == bracket_expanded(&x, &y, &u, &w)),
        ("antisymmetry", base == -br("u", "v", "x", "y")),
        ("scale-left", bracket(&(&d * &x), &(&d * &y), &u, &w) == &d2 * &base),
        ("scale-right", bracket(&x, &y, &(&d * &u), &(&d * &w)) == &d2 * &base),
        ("swap-left", base == br("y", "x", "u", "v")),
        ("swap-right", base == br("x", "y", "v", "u")),
        ("swap-both", base == br("y", "x", "v", "u")),
        ("[0,1|u,v]", bracket(&c(0), &c(1), &u, &w) == &u * &w),
        ("[1,1|u,v]", bracket(&c(1), &c(1), &u, &w) == -(&u - &w).pow(2)),
        ("[1,-1|u,v]", bracket(&c(1), &c(-1), &u, &w) == (&u + &w).pow(2)),
        ("[1,-i|u,v]", complex(&c(1), &-i.clone()) == &i * &usq),
        ("[1,i|u,v]", complex(&c(1), &i) == -(&i * &usq)),
        ("[i,i|u,v]", complex(&i, &i) == (&u - &w).pow(2)),
        ("[x,y|x,y]", bracket(&x, &y, &x, &y).is_zero()),
    ];
    checks
        .into_iter()
        .map(|(name, ok)| IdentityCheck::new(name, 0, ok))
        .collect()
}

fn quotient(a: &str, b: &str, n: u64) -> SparsePoly {
    powersum_quotient_in(a, b, n)
}

/// The left side of the special-case theorem:
/// `[z,t|u,v]^h X(x,y) − [x,y|u,v]^h X(z,t) − [z,t|x,y]^h X(u,v)`.
pub fn special_case_lhs(n: u64) -> SparsePoly {
    let h = half(n) as u32;
    br("z", "t", "u", "v").pow(h) * quotient("x", "y", n)
        - br("x", "y", "u", "v").pow(h) * quotient("z", "t", n)
        - br("z", "t", "x", "y").pow(h) * quotient("u", "v", n)
}

/// The right side of the special-case theorem. The power-sum quotient in
/// `z, t` is rewritten in `s1 = zt`, `s2 = z² + t²` through its basis
/// expansion, differentiated in `(s1, s2)`, and substituted back.
pub fn special_case_rhs(n: u64) -> Result<SparsePoly> {
    let h = half(n);
    let basis = expand_powersum_basis(n)?;
    let (s1, s2) = (v("s1"), v("s2"));
    let z_in_s = sum_polys(
        basis
            .iter()
            .enumerate()
            .map(|(k, ck)| (s1.pow((h - k as u64) as u32) * s2.pow(k as u32)).scale(&rat_int(ck.clone())))
            .collect(),
    );
    let (u, w) = (v("u"), v("v"));
    let op = [("s1", &u * &w), ("s2", u.pow(2) + w.pow(2))];
    let back = [("s1", &v("z") * &v("t")), ("s2", v("z").pow(2) + v("t").pow(2))];
    let bxu = br("x", "y", "u", "v");
    let bzx = br("z", "t", "x", "y");
    let mut terms = Vec::new();
    let mut derived = z_in_s;
    for r in 1..h {
        derived = derived.apply_operator(&op);
        let inv = BigRational::new(BigInt::one(), factorial(r));
        let inner = derived.subst(&back).scale(&inv);
        terms.push(bxu.pow((h - r) as u32) * bzx.pow(r as u32) * inner);
    }
    Ok(sum_polys(terms))
}

/// Checks the special-case theorem fully symbolically in `x, y, z, t, u, v`.
pub fn verify_special_case(n: u64) -> Result<bool> {
    verify_special_case_capped(n, SPECIAL_CASE_CAP)
}

pub fn verify_special_case_capped(n: u64, cap: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::Precondition(format!("special case needs n >= 2, got {n}")));
    }
    if n > cap {
        return Err(Error::SymbolicCap { n, cap });
    }
    Ok(special_case_lhs(n) == special_case_rhs(n)?)
}

/// The printed instances for n = 2, 3, 4, 5, each transcribed as stated and
/// checked as a polynomial identity, plus the agreement of the n = 4 and
/// n = 5 right sides with the general right side.
pub fn printed_instances_report() -> Result<Vec<IdentityCheck>> {
    let (x, y, z, t, u, w) = (v("x"), v("y"), v("z"), v("t"), v("u"), v("v"));
    let (zt_uv, uv_xy, xy_zt) = (br("z", "t", "u", "v"), br("u", "v", "x", "y"), br("x", "y", "z", "t"));
    let sq = |a: &SparsePoly, b: &SparsePoly| a.pow(2) + b.pow(2);

    let n2 = &zt_uv * &sq(&x, &y) + &uv_xy * &sq(&z, &t) + &xy_zt * &sq(&u, &w);
    let n3 = &zt_uv * &quotient("x", "y", 3) + &uv_xy * &quotient("z", "t", 3) + &xy_zt * &quotient("u", "v", 3);

    let bxu = br("x", "y", "u", "v");
    let bzx = br("z", "t", "x", "y");
    let n4_lhs = zt_uv.pow(2) * quotient("x", "y", 4) - uv_xy.pow(2) * quotient("z", "t", 4) - xy_zt.pow(2) * quotient("u", "v", 4);
    let n4_rhs = (&bxu * &bzx).scale_int(2) * (sq(&z, &t) * sq(&u, &w) - (&z * &t * &u * &w).scale_int(2));

    let n5_lhs = zt_uv.pow(2) * quotient("x", "y", 5) - uv_xy.pow(2) * quotient("z", "t", 5) - xy_zt.pow(2) * quotient("u", "v", 5);
    let n5_rhs = &bxu
        * &bzx
        * ((sq(&u, &w) - &u * &w) * sq(&z, &t) + (sq(&z, &t) - &z * &t) * sq(&u, &w) - (&z * &t * &u * &w).scale_int(2));

    let mixed = &zt_uv * &(&x * &y) + &uv_xy * &(&z * &t) + &xy_zt * &(&u * &w);

    Ok(vec![
        IdentityCheck::new("n=2", 2, n2.is_zero() && special_case_rhs(2)?.is_zero()),
        IdentityCheck::new("n=3", 3, n3.is_zero() && special_case_rhs(3)?.is_zero()),
        IdentityCheck::new("n=4", 4, n4_lhs == n4_rhs && special_case_rhs(4)? == n4_rhs),
        IdentityCheck::new("n=5", 5, n5_lhs == n5_rhs && special_case_rhs(5)? == n5_rhs),
        IdentityCheck::new("n=2-3", 0, mixed.is_zero()),
    ])
}

/// `[z,t|u,v] xy + [u,v|x,y] zt + [x,y|z,t] uv = 0`, symbolically.
pub fn bracket_xy_identity_check() -> bool {
    bracket_xy_identity_at(&v("x"), &v("y"), &v("z"), &v("t"), &v("u"), &v("v")).is_zero()
}

/// The left side of the mixed bracket identity at arbitrary arguments.
pub fn bracket_xy_identity_at<S: Scalar>(x: &S, y: &S, z: &S, t: &S, u: &S, w: &S) -> S {
    bracket(z, t, u, w) * x.clone() * y.clone()
        + bracket(u, w, x, y) * z.clone() * t.clone()
        + bracket(x, y, z, t) * u.clone() * w.clone()
}

/// `(x, y, z, t, d)` of the quintic parametrization at `(p, q)`.
pub fn quintic_parametric_values<S: Scalar>(p: &S, q: &S) -> [S; 5] {
    let five = p.from_i64_like(5);
    let pq = p.clone() * q.clone();
    let s = p.clone() + q.clone();
    let norm = p.clone() * p.clone() + pq.clone() + q.clone() * q.clone();
    let x = five.clone() * pq.clone();
    let y = five.clone() * norm.clone();
    let z = -(five.clone() * p.clone() * s.clone());
    let t = -(five * q.clone() * s.clone());
    let d = p.from_i64_like(125) * pq * s * norm;
    [x, y, z, t, d]
}

/// `x⁵ + y⁵ + z⁵ + t⁵ = d²` at integer `(p, q)`.
pub fn quintic_parametric_check(p: &BigInt, q: &BigInt) -> bool {
    quintic_holds(p, q)
}

fn quintic_holds<S: Scalar>(p: &S, q: &S) -> bool {
    let [x, y, z, t, d] = quintic_parametric_values(p, q);
    x.pow_u64(5) + y.pow_u64(5) + z.pow_u64(5) + t.pow_u64(5) == d.pow_u64(2)
}

/// The quintic identity with symbolic `p, q`.
pub fn quintic_parametric_symbolic() -> bool {
    quintic_holds(&v("p"), &v("q"))
}
