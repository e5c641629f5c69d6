//! Randomized algebraic laws: everything here must hold for *all* inputs,
//! with proptest hunting for counterexamples.

use lefschetz::{
    cross, equivalent, euler_characteristic, h1_quotient, hurwitz_orbit, mod2_subgroup_order,
    pair_class, triple_of, Equivalence, Factorization, Gen, Position, SearchBounds, Triple,
    TripleShape, TripleTag, TwistClass, Vec2, Word,
};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn arb_twist() -> impl Strategy<Value = TwistClass> {
    (-30i64..=30, -30i64..=30).prop_filter_map("primitive class", |(p, q)| {
        TwistClass::new(p, q).ok()
    })
}

fn arb_small_twist() -> impl Strategy<Value = TwistClass> {
    (-4i64..=4, -4i64..=4).prop_filter_map("primitive class", |(p, q)| {
        TwistClass::new(p, q).ok()
    })
}

fn arb_vec2() -> impl Strategy<Value = Vec2> {
    (-40i64..=40, -40i64..=40).prop_map(|(a, b)| (BigInt::from(a), BigInt::from(b)))
}

fn arb_psi() -> impl Strategy<Value = lefschetz::SL2Matrix> {
    proptest::collection::vec((any::<bool>(), -4i64..=4), 0..5).prop_map(|letters| {
        let mut w = Word::empty();
        for (is_a, k) in letters {
            w.push(if is_a { Gen::A } else { Gen::B }, k);
        }
        w.matrix()
    })
}

fn arb_factorization(max_len: usize) -> impl Strategy<Value = Factorization> {
    proptest::collection::vec(arb_twist(), 0..=max_len).prop_map(Factorization::new)
}

/// A factorization of length ≥ 2 together with a valid move index.
fn arb_movable() -> impl Strategy<Value = (Factorization, usize)> {
    (
        proptest::collection::vec(arb_twist(), 2..=6),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(factors, idx)| {
            let i = 1 + idx.index(factors.len() - 1);
            (Factorization::new(factors), i)
        })
}

fn arb_triple() -> impl Strategy<Value = Triple> {
    (-50i64..=50, -50i64..=50, -50i64..=50).prop_map(|(x, y, z)| Triple::new(x, y, z))
}

proptest! {
    #[test]
    fn twist_matrices_are_recognized(t in arb_twist()) {
        prop_assert_eq!(t.matrix().as_twist(), Some(t));
    }

    #[test]
    fn twist_action_matches_the_matrix_action(t in arb_twist(), c in arb_vec2()) {
        prop_assert_eq!(t.apply(&c), t.matrix().apply(&c));
        prop_assert_eq!(t.apply(&t.class()), t.class());
        // apply_inverse really is the inverse action.
        prop_assert_eq!(t.apply_inverse(&t.apply(&c)), c);
    }

    #[test]
    fn the_pairing_is_symplectic(m in arb_psi(), u in arb_vec2(), v in arb_vec2()) {
        prop_assert_eq!(cross(&m.apply(&u), &m.apply(&v)), cross(&u, &v));
    }

    #[test]
    fn the_pairing_is_antisymmetric_and_bilinear(
        u in arb_vec2(),
        v in arb_vec2(),
        w in arb_vec2(),
        a in -9i64..=9,
        b in -9i64..=9,
    ) {
        prop_assert_eq!(cross(&u, &v), -cross(&v, &u));
        let combo = (a * &u.0 + b * &w.0, a * &u.1 + b * &w.1);
        prop_assert_eq!(cross(&combo, &v), a * cross(&u, &v) + b * cross(&w, &v));
    }

    #[test]
    fn conjugating_words_straighten_their_twist((t, c) in (arb_twist(), arb_vec2())) {
        let (w, base) = t.as_conjugate();
        let m = w.matrix();
        let conjugated = &(&m * &base.twist().matrix()) * &m.inverse();
        prop_assert_eq!(&conjugated, &t.matrix());
        prop_assert_eq!(conjugated.apply(&c), t.matrix().apply(&c));
    }

    #[test]
    fn moves_preserve_product_and_length((f, i) in arb_movable()) {
        let forward = f.hurwitz_move(i).unwrap();
        let backward = f.inverse_hurwitz_move(i).unwrap();
        prop_assert_eq!(forward.product(), f.product());
        prop_assert_eq!(backward.product(), f.product());
        prop_assert_eq!(forward.len(), f.len());
        prop_assert_eq!(backward.len(), f.len());
        prop_assert!(f.gamma_equal(&forward));
    }

    #[test]
    fn moves_invert_in_both_orders((f, i) in arb_movable()) {
        prop_assert_eq!(f.hurwitz_move(i).unwrap().inverse_hurwitz_move(i).unwrap(), f.clone());
        prop_assert_eq!(f.inverse_hurwitz_move(i).unwrap().hurwitz_move(i).unwrap(), f);
    }

    #[test]
    fn conjugation_round_trips(f in arb_factorization(6), psi in arb_psi()) {
        prop_assert_eq!(f.conjugate(&psi).conjugate(&psi.inverse()), f);
    }

    #[test]
    fn conjugation_transports_the_product(f in arb_factorization(6), psi in arb_psi()) {
        let expected = &(&psi * &f.product()) * &psi.inverse();
        prop_assert_eq!(f.conjugate(&psi).product(), expected);
    }

    #[test]
    fn moves_commute_with_conjugation((f, i) in arb_movable(), psi in arb_psi()) {
        prop_assert_eq!(
            f.conjugate(&psi).hurwitz_move(i).unwrap(),
            f.hurwitz_move(i).unwrap().conjugate(&psi)
        );
    }

    #[test]
    fn normal_form_is_a_conjugation_invariant(f in arb_factorization(5), psi in arb_psi()) {
        prop_assume!(!f.is_empty());
        let nf = f.conjugation_normal_form().unwrap();
        prop_assert_eq!(f.conjugate(&psi).conjugation_normal_form().unwrap(), nf.clone());
        // Idempotence: the normal form is itself in normal form.
        prop_assert_eq!(nf.conjugation_normal_form().unwrap(), nf);
    }

    #[test]
    fn words_of_factorizations_evaluate_to_the_product(f in arb_factorization(5)) {
        let w = f.to_word();
        prop_assert_eq!(w.matrix(), f.product());
        prop_assert_eq!(w.exponent_sum(), BigInt::from(f.len()));
        prop_assert_eq!(w.free_reduced().matrix(), f.product());
    }

    #[test]
    fn mutations_are_involutions(t in arb_triple()) {
        for pos in Position::ALL {
            prop_assert_eq!(t.mutate(pos).mutate(pos), t.clone());
        }
    }

    #[test]
    fn minimality_criteria_agree(t in
        (-200i64..=200, -200i64..=200, -200i64..=200).prop_map(|(x, y, z)| Triple::new(x, y, z))
    ) {
        let (x, y, z) = t.entries();
        prop_assume!(x.abs() > BigInt::from(1) && y.abs() > BigInt::from(1) && z.abs() > BigInt::from(1));
        let by_size = (x * y * z).is_negative()
            || BigInt::from(2) * [x.abs(), y.abs(), z.abs()].into_iter().max().unwrap()
                < (x * y * z).abs() / [x.abs(), y.abs(), z.abs()].into_iter().max().unwrap();
        prop_assert_eq!(t.classify() == TripleShape::Minimal, by_size);
    }
}

/// Applies one of the seven class-preserving triple operations.
fn triple_op(t: &Triple, op: usize) -> Triple {
    let (x, y, z) = t.entries();
    match op {
        0 => t.mutate(Position::First),
        1 => t.mutate(Position::Second),
        2 => t.mutate(Position::Third),
        3 => Triple::new(y.clone(), z.clone(), x.clone()),
        4 => Triple::new(-x, -y, z.clone()),
        5 => Triple::new(-x, y.clone(), -z),
        _ => Triple::new(x.clone(), -y, -z),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_is_invariant_on_minimal_classes(
        t in arb_triple().prop_filter("minimal", |t| t.classify() == TripleShape::Minimal),
        ops in proptest::collection::vec(0usize..7, 0..=8),
    ) {
        let mut moved = t.clone();
        for op in ops {
            moved = triple_op(&moved, op);
        }
        prop_assert_eq!(moved.reduce(), t.reduce());
        prop_assert_eq!(t.reduce().tag(), TripleTag::Minimal);
    }

    #[test]
    fn invariants_survive_hurwitz_moves((f, i) in arb_movable()) {
        let moved = f.hurwitz_move(i).unwrap();
        prop_assert_eq!(h1_quotient(&moved), h1_quotient(&f));
        prop_assert_eq!(mod2_subgroup_order(&moved), mod2_subgroup_order(&f));
        prop_assert_eq!(euler_characteristic(&moved), euler_characteristic(&f));
        if f.len() == 2 {
            prop_assert_eq!(pair_class(&moved).unwrap(), pair_class(&f).unwrap());
        }
        if f.len() == 3 {
            let before = triple_of(&f).unwrap().reduce();
            let after = triple_of(&moved).unwrap().reduce();
            prop_assert_eq!(before.tag(), after.tag());
            if before.tag() != TripleTag::Small {
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn invariants_survive_conjugation(f in arb_factorization(5), psi in arb_psi()) {
        let conjugated = f.conjugate(&psi);
        prop_assert_eq!(h1_quotient(&conjugated), h1_quotient(&f));
        prop_assert_eq!(mod2_subgroup_order(&conjugated), mod2_subgroup_order(&f));
        if f.len() == 2 {
            prop_assert_eq!(pair_class(&conjugated).unwrap(), pair_class(&f).unwrap());
        }
        if f.len() == 3 {
            let before = triple_of(&f).unwrap().reduce();
            let after = triple_of(&conjugated).unwrap().reduce();
            prop_assert_eq!(before.tag(), after.tag());
            if before.tag() != TripleTag::Small {
                prop_assert_eq!(before, after);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planted_rewrites_are_found_with_replayable_certificates(
        factors in proptest::collection::vec(arb_small_twist(), 2..=4),
        moves in proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>()), 0..=2),
    ) {
        let f = Factorization::new(factors);
        let mut g = f.clone();
        for (idx, inverse) in moves {
            let i = 1 + idx.index(g.len() - 1);
            g = if inverse {
                g.inverse_hurwitz_move(i).unwrap()
            } else {
                g.hurwitz_move(i).unwrap()
            };
        }
        // A conjugation by the common product keeps the tuples gamma-equal.
        let g = g.conjugate(&f.product());
        let bounds = SearchBounds { depth: 5, coeff_bound: u64::MAX, node_budget: 100_000 };
        match equivalent(&f, &g, &bounds) {
            Equivalence::Equivalent(cert) => prop_assert!(cert.verify(&f, &g)),
            other => prop_assert!(false, "expected equivalence, got {:?}", other),
        }
        match equivalent(&g, &f, &bounds) {
            Equivalence::Equivalent(cert) => prop_assert!(cert.verify(&g, &f)),
            other => prop_assert!(false, "expected equivalence, got {:?}", other),
        }
    }

    #[test]
    fn orbit_members_share_every_invariant(
        factors in proptest::collection::vec(arb_small_twist(), 1..=3),
    ) {
        let f = Factorization::new(factors);
        let bounds = SearchBounds { depth: 3, coeff_bound: 40, node_budget: 200 };
        let orbit = hurwitz_orbit(&f, &bounds, false);
        for member in &orbit.members {
            prop_assert_eq!(member.product(), f.product());
            prop_assert_eq!(member.len(), f.len());
            prop_assert_eq!(h1_quotient(member), h1_quotient(&f));
            prop_assert_eq!(mod2_subgroup_order(member), mod2_subgroup_order(&f));
        }
        let normalized = hurwitz_orbit(&f, &bounds, true);
        for member in &normalized.members {
            prop_assert_eq!(member.len(), f.len());
            prop_assert_eq!(h1_quotient(member), h1_quotient(&f));
            prop_assert_eq!(mod2_subgroup_order(member), mod2_subgroup_order(&f));
        }
    }
}
