use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;
use psi_core::exactmath::{mersenne_reduce, rat, MersenneMod, QuadExt};
use psi_core::multipoly::{poly_exact_div, v, SparsePoly};

fn quad5() -> impl Strategy<Value = QuadExt> {
    (-40i64..40, 1i64..6, -40i64..40, 1i64..6)
        .prop_map(|(a, b, c, d)| QuadExt::new(rat(a, b), rat(c, d), 5).unwrap())
}

fn small_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((-5i64..6, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        terms.into_iter().fold(SparsePoly::zero(), |acc, (k, i, j, l)| {
            acc + (v("a").pow(i) * v("b").pow(j) * v("x").pow(l)).scale_int(k)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mersenne_reduce_matches_remainder(x in any::<i128>(), idx in 0usize..5) {
        let p = [5u32, 7, 13, 17, 31][idx];
        let mm = MersenneMod::new(p).unwrap();
        let x = BigInt::from(x) * BigInt::from(x.signum() as i64 * 977 + 3);
        prop_assert_eq!(mersenne_reduce(&x, &mm), x.mod_floor(mm.modulus()));
    }

    #[test]
    fn quad_ring_axioms(x in quad5(), y in quad5(), z in quad5()) {
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        let s = x.clone() * y.clone() - z.clone();
        for r in [s.rational_part(), s.surd_part()] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }
    }

    #[test]
    fn poly_ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!((&f * &g) * &h, &f * (&g * &h));
        prop_assert_eq!(&f * (&g + &h), &f * &g + &f * &h);
    }

    #[test]
    fn leibniz_rule(f in small_poly(), g in small_poly()) {
        for var in ["a", "b"] {
            prop_assert_eq!((&f * &g).diff(var), f.diff(var) * &g + &f * g.diff(var));
        }
    }

    #[test]
    fn subst_is_homomorphism(f in small_poly(), g in small_poly(), k in -3i64..4) {
        let bind = [("a", v("x") + SparsePoly::int(k)), ("b", v("a").pow(2))];
        prop_assert_eq!((&f + &g).subst(&bind), f.subst(&bind) + g.subst(&bind));
        prop_assert_eq!((&f * &g).subst(&bind), f.subst(&bind) * g.subst(&bind));
    }

    #[test]
    fn exact_division_inverts_product(f in small_poly(), g in small_poly()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(poly_exact_div(&(&f * &g), &g).unwrap(), f);
    }
}
