//! Property-based checks of the algebraic axioms.

use proptest::prelude::*;

use tetrabox_core::loop_alg::{bracket, LoopElem};
use tetrabox_core::poly::Poly;
use tetrabox_core::rational::int;
use tetrabox_core::ring::{reassemble, RingElem};

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..5).prop_map(|cs| Poly::from_ints(&cs))
}

fn arb_ring() -> impl Strategy<Value = RingElem> {
    (arb_poly(), 0i64..=2, 0i64..=2).prop_map(|(p, a, b)| RingElem::from_signed(p, -a, -b))
}

fn arb_loop() -> impl Strategy<Value = LoopElem> {
    (arb_ring(), arb_ring(), arb_ring()).prop_map(|(f, g, h)| LoopElem::new(f, g, h))
}

proptest! {
    #[test]
    fn ring_add_commutes(a in arb_ring(), b in arb_ring()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn ring_mul_distributes(a in arb_ring(), b in arb_ring(), c in arb_ring()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn ring_mul_associates(a in arb_ring(), b in arb_ring(), c in arb_ring()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn prime_is_homomorphism(a in arb_ring(), b in arb_ring()) {
        prop_assert_eq!((&a + &b).prime(1), &a.prime(1) + &b.prime(1));
        prop_assert_eq!((&a * &b).prime(1), &a.prime(1) * &b.prime(1));
        prop_assert_eq!(a.prime(1).prime(1).prime(1), a);
    }

    #[test]
    fn canon_expand_roundtrip(a in arb_ring()) {
        prop_assert_eq!(reassemble(&a.canon_expand()), a);
    }

    #[test]
    fn normalization_detects_equality(a in arb_ring(), b in arb_ring()) {
        // a - b is zero iff the two agree at enough sample points off the poles
        let d = &a - &b;
        let deg = d.num().degree().unwrap_or(0) as i64;
        let all_zero = (2..deg + 6).all(|k| d.eval(&int(k)).expect("no pole at k >= 2") == int(0));
        prop_assert_eq!(d.is_zero(), all_zero);
    }

    #[test]
    fn bracket_antisymmetric(u in arb_loop(), v in arb_loop()) {
        prop_assert_eq!(bracket(&u, &v), -&bracket(&v, &u));
    }

    #[test]
    fn bracket_bilinear(u in arb_loop(), v in arb_loop(), w in arb_loop()) {
        prop_assert_eq!(
            bracket(&(&u + &v), &w),
            &bracket(&u, &w) + &bracket(&v, &w)
        );
    }

    #[test]
    fn bracket_jacobi(u in arb_loop(), v in arb_loop(), w in arb_loop()) {
        let cyc = &(&bracket(&u, &bracket(&v, &w)) + &bracket(&v, &bracket(&w, &u)))
            + &bracket(&w, &bracket(&u, &v));
        prop_assert!(cyc.is_zero());
    }

    #[test]
    fn loop_prime_preserves_bracket(u in arb_loop(), v in arb_loop()) {
        prop_assert_eq!(bracket(&u, &v).prime(1), bracket(&u.prime(1), &v.prime(1)));
    }

    #[test]
    fn row_spaces_abelian(a in arb_ring(), b in arb_ring()) {
        prop_assert!(bracket(&LoopElem::x(a.clone()), &LoopElem::x(b.clone())).is_zero());
        prop_assert!(bracket(&LoopElem::y(a.clone()), &LoopElem::y(b.clone())).is_zero());
        prop_assert!(bracket(&LoopElem::z(a), &LoopElem::z(b)).is_zero());
    }
}
