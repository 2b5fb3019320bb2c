use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use quadflip_core::hodge::{self, HodgeDiamond};
use quadflip_core::motive::{self, class_of_pn, Monomial, Motive};

const ATOMS: [&str; 4] = ["F", "X", "C", "S"];

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..4, prop::collection::vec(prop::sample::select(&ATOMS[..]), 0..3))
        .prop_map(|(l, atoms)| Monomial::new(l, atoms))
}

fn motive() -> impl Strategy<Value = Motive> {
    prop::collection::vec((monomial(), -6i64..7), 0..5).prop_map(|terms| {
        let mut m = Motive::zero();
        for (mono, c) in terms {
            m.add_term(mono, BigInt::from(c));
        }
        m
    })
}

/// Sums of `c·L^i·g` with `g` an atom or 1, where `Sym²` is defined.
fn linear_motive() -> impl Strategy<Value = Motive> {
    let mono = (0u32..4, prop::option::of(prop::sample::select(&ATOMS[..])))
        .prop_map(|(l, a)| Monomial::new(l, a));
    prop::collection::vec((mono, -6i64..7), 0..5).prop_map(|terms| {
        let mut m = Motive::zero();
        for (mono, c) in terms {
            m.add_term(mono, BigInt::from(c));
        }
        m
    })
}

fn divisible_by_l(m: &Motive) -> bool {
    m.terms().all(|(mono, _)| mono.l_power() >= 1)
}

proptest! {
    #[test]
    fn ring_axioms(a in motive(), b in motive(), c in motive()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &Motive::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn flip_difference_is_antisymmetric(f in motive(), r in 0u32..8, s in 0u32..8) {
        prop_assert_eq!(motive::flip_difference(&f, r, s), -motive::flip_difference(&f, s, r));
        prop_assert!(motive::flip_difference(&f, r, r).is_zero());
    }

    #[test]
    fn blowup_correction_is_divisible_by_l(x in motive(), z in motive(), c in 2u32..8) {
        let diff = motive::blowup_class(&x, &z, c).unwrap() - &x;
        prop_assert!(divisible_by_l(&diff));
    }

    #[test]
    fn euler_specialization_of_hilbert_square(
        e_f in -30i64..30,
        e_x in -30i64..30,
        x in linear_motive(),
        n in 1u32..6,
    ) {
        let mut values = BTreeMap::new();
        values.insert("F".to_string(), BigInt::from(e_f));
        values.insert("X".to_string(), BigInt::from(e_x));
        values.insert("C".to_string(), BigInt::from(2));
        values.insert("S".to_string(), BigInt::from(-7));
        let values = motive::with_sym2_euler(&values);
        let e = x.specialize(&values).unwrap();
        let h = motive::hilbert_square_class(&x, n).unwrap().specialize(&values).unwrap();
        let expected = &e * (&e + 1) / 2 + BigInt::from(n - 1) * &e;
        prop_assert_eq!(h, expected);
    }

    #[test]
    fn sym2_is_a_power_structure(a in linear_motive(), b in linear_motive()) {
        // Sym²(a + b) = Sym²a + a·b + Sym²b
        let lhs = motive::sym2_class(&(&a + &b)).unwrap();
        let rhs = motive::sym2_class(&a).unwrap() + &a * &b + motive::sym2_class(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn flip_derivation_over_shapes() {
    // both sides blow up to the same variety: the exceptional divisor is a
    // P^r × P^s bundle over F
    let f = Motive::atom("F").unwrap();
    for r in 0..=5u32 {
        for s in 0..=5u32 {
            let x = Motive::atom("X").unwrap();
            let x_prime = &x - &motive::flip_difference(&f, r, s);
            let lhs = &x + &(&f * &class_of_pn(r)) * &(class_of_pn(s) - Motive::one());
            let rhs = &x_prime + &(&f * &class_of_pn(s)) * &(class_of_pn(r) - Motive::one());
            assert_eq!(lhs, rhs, "shape ({r}, {s})");
        }
    }
}

#[test]
fn quartic_double_solid_euler_agrees_with_hodge() {
    let qds = HodgeDiamond::from_u64s(
        3,
        &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1), (1, 2, 10), (2, 1, 10)],
    )
    .unwrap();
    let e = qds.euler();
    let hodge_side = hodge::hilbert_square(&qds).unwrap().euler();
    let x = Motive::atom("X").unwrap();
    let mut values = BTreeMap::new();
    values.insert("X".to_string(), e);
    let values = motive::with_sym2_euler(&values);
    let motive_side = motive::hilbert_square_class(&x, 3)
        .unwrap()
        .specialize(&values)
        .unwrap();
    assert_eq!(hodge_side, motive_side);
    assert_eq!(motive_side, BigInt::from(88));
}

#[test]
fn hilbert_square_of_p2_coefficients() {
    assert_eq!(motive::sym2_class(&class_of_pn(1)).unwrap(), class_of_pn(2));
    let h = motive::hilbert_square_class(&class_of_pn(2), 2).unwrap();
    let want: Vec<BigInt> = [1, 2, 3, 2, 1].into_iter().map(BigInt::from).collect();
    assert_eq!(h.l_coefficients().unwrap(), want);
    // cross-check against the Hodge diagonal
    let d = hodge::hilbert_square(&HodgeDiamond::projective_space(2)).unwrap();
    let col: Vec<BigInt> = d.column().into_iter().map(BigInt::from).collect();
    assert_eq!(col, want);
}

#[test]
fn canonical_text_ignores_construction_order() {
    let a = Motive::atom("X").unwrap() + Motive::lefschetz(2) + Motive::constant(3);
    let b = Motive::constant(3) + Motive::lefschetz(2) + Motive::atom("X").unwrap();
    assert_eq!(a.to_string(), b.to_string());
    let m1 = Motive::term(BigInt::from(2), Monomial::new(1, ["X", "F"]));
    let m2 = Motive::term(BigInt::from(2), Monomial::new(1, ["F", "X"]));
    assert_eq!(m1.to_string(), m2.to_string());
}
