//! Properties of the annihilator and the inner-automorphism calculus.

mod common;

use common::*;
use leibniz_core::{
    annihilator_generator, decompose_preserving, is_in_annihilator, is_symmetric,
    preserves_symmetric, sample, symmetrize, AnnKind, Element, InnerAuto, Rat,
};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn applications_are_algebra_endomorphisms(
        (n, v, w) in (2usize..=4).prop_flat_map(|n| (Just(n), element(n, 4), element(n, 4))),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = sample::ideal_element::<Rat, _>(&mut rng, n, 4);
        let psi = InnerAuto::new(u).unwrap();
        prop_assert_eq!(
            psi.apply(&v.bracket(&w)),
            psi.apply(&v).bracket(&psi.apply(&w))
        );
        prop_assert_eq!(psi.apply(&(&v + &w)), &psi.apply(&v) + &psi.apply(&w));
    }

    #[test]
    fn group_laws(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p1 = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, 4)).unwrap();
        let p2 = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, 4)).unwrap();
        let p3 = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, 4)).unwrap();
        let v = sample::element::<Rat, _>(&mut rng, n, 4);

        // associative and commutative
        prop_assert_eq!(p1.compose(&p2).compose(&p3), p1.compose(&p2.compose(&p3)));
        prop_assert_eq!(p1.compose(&p2), p2.compose(&p1));
        // composite action = sequential action
        prop_assert_eq!(p1.compose(&p2).apply(&v), p1.apply(&p2.apply(&v)));
        // inverse undoes
        prop_assert_eq!(p1.inverse().apply(&p1.apply(&v)), v.clone());
        prop_assert!(p1.compose(&p1.inverse()).base().is_zero());
    }

    #[test]
    fn annihilator_is_a_two_sided_bracket_ideal(
        (n, v) in (2usize..=4).prop_flat_map(|n| (Just(n), element(n, 4))),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = sample::annihilator_element::<Rat, _>(&mut rng, n, 4);
        prop_assert!(is_in_annihilator(&u));
        prop_assert!(v.bracket(&u).is_zero());
        prop_assert!(is_in_annihilator(&u.bracket(&v)));
    }

    #[test]
    fn identity_action_characterizes_the_annihilator(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ann = sample::annihilator_element::<Rat, _>(&mut rng, n, 4);
        let psi = InnerAuto::new(ann).unwrap();
        for m in 1..=n {
            prop_assert_eq!(psi.apply(&Element::generator(m, n)), Element::generator(m, n));
        }
        let v = sample::element::<Rat, _>(&mut rng, n, 4);
        prop_assert_eq!(psi.apply(&v), v);

        let non = sample::non_annihilator_element::<Rat, _>(&mut rng, n, 4);
        let psi = InnerAuto::new(non).unwrap();
        let moved = (1..=n).any(|m| {
            psi.apply(&Element::generator(m, n)) != Element::generator(m, n)
        });
        prop_assert!(moved);
    }

    #[test]
    fn splitting_criterion_both_directions(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        // annihilator + symmetric passes, and the automorphism preserves
        // symmetric elements
        let u_ann = sample::annihilator_element::<Rat, _>(&mut rng, n, 4);
        let s_full = sample::symmetric_element::<Rat, _>(&mut rng, n, 4);
        let u_sym = &s_full - &s_full.degree_component(1); // ideal part, still symmetric
        let u = &u_ann + &u_sym;
        prop_assert_eq!(preserves_symmetric(&u), Ok(true));

        let psi = InnerAuto::new(u).unwrap();
        let s = sample::symmetric_element::<Rat, _>(&mut rng, n, 3);
        prop_assert!(is_symmetric(&psi.apply(&s)));

        let (a, b) = decompose_preserving(psi.base()).unwrap();
        prop_assert!(is_in_annihilator(&a));
        prop_assert!(is_symmetric(&b));
        prop_assert_eq!(&a + &b, psi.base().clone());

        // a failing element sends some symmetric element off the
        // symmetric subalgebra; the linear invariant is a witness
        let bad = loop {
            let candidate = sample::ideal_element::<Rat, _>(&mut rng, n, 4);
            if !preserves_symmetric(&candidate).unwrap() {
                break candidate;
            }
            if rng.gen_bool(0.2) {
                break Element::commutator(1, 2, n);
            }
        };
        let psi = InnerAuto::new(bad.clone()).unwrap();
        let witness = find_broken_symmetric_image(&psi);
        prop_assert!(witness.is_some(), "no witness for {bad}");
        prop_assert_eq!(decompose_preserving(&bad), Err(leibniz_core::Error::NotPreserving));
    }
}

/// Searches low-degree symmetric elements (the linear invariant first) for
/// one whose image under `psi` fails to be symmetric.
fn find_broken_symmetric_image(psi: &InnerAuto<Rat>) -> Option<Element<Rat>> {
    let n = psi.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0);
    let mut linear = Element::zero(n);
    for i in 1..=n {
        linear = &linear + &Element::generator(i, n);
    }
    let mut candidates = vec![linear];
    for _ in 0..20 {
        candidates.push(sample::symmetric_element::<Rat, _>(&mut rng, n, 3));
    }
    candidates
        .into_iter()
        .find(|s| !is_symmetric(&psi.apply(s)))
}

proptest! {
    #[test]
    fn jacobi_defect_lies_in_the_annihilator(
        (_n, u, v, w) in element_triple(),
    ) {
        // the quotient by the annihilator is a Lie algebra: the cyclic
        // Jacobi sum and the anticommutator both land in the ideal
        let jacobi = &(&u.bracket(&v).bracket(&w) + &v.bracket(&w).bracket(&u))
            + &w.bracket(&u).bracket(&v);
        prop_assert!(is_in_annihilator(&jacobi));
        let anti = &u.bracket(&v) + &v.bracket(&u);
        prop_assert!(is_in_annihilator(&anti));
    }
}

#[test]
fn orbit_average_splits_canonically() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 2usize..=4 {
        for _ in 0..20 {
            let u_ann = sample::annihilator_element::<Rat, _>(&mut rng, n, 4);
            let s_full = sample::symmetric_element::<Rat, _>(&mut rng, n, 4);
            let u_sym = &s_full - &s_full.degree_component(1);
            let u = &u_ann + &u_sym;
            let (a, s) = decompose_preserving(&u).unwrap();
            assert_eq!(s, symmetrize(&u).unwrap());
            assert_eq!(&a + &s, u);
        }
    }
}

#[test]
fn square_constructor_matches_bilinear_expansion() {
    let n = 2;
    let v = &Element::<Rat>::generator(1, n) + &Element::generator(2, n);
    let sq = annihilator_generator(AnnKind::Square, &v, &Element::zero(n));
    let by_hand = &(&Element::commutator(1, 1, n) + &Element::commutator(2, 2, n))
        + &(&Element::commutator(1, 2, n) + &Element::commutator(2, 1, n));
    assert_eq!(sq, by_hand);
}
