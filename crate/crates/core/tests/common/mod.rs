//! Shared proptest strategies over the rational instantiation.
#![allow(dead_code)]

use leibniz_core::{CommPoly, Element, Monomial, Permutation, Rat, Scalar};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=4).prop_map(|(n, d)| Rat::from_ratio(n, d))
}

pub fn monomial(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    vec(0..n, 0..=(max_deg as usize)).prop_map(move |picks| {
        let mut exps = vec![0u32; n];
        for i in picks {
            exps[i] += 1;
        }
        Monomial::from_exps(exps)
    })
}

pub fn poly(n: usize, max_deg: u32) -> impl Strategy<Value = CommPoly<Rat>> {
    vec((monomial(n, max_deg), rat()), 0..=3)
        .prop_map(move |terms| CommPoly::from_terms(n, terms))
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images)
    })
}

pub fn element(n: usize, max_deg: u32) -> impl Strategy<Value = Element<Rat>> {
    let poly_deg = max_deg.saturating_sub(2);
    (
        vec(rat(), n),
        vec(((1..=n, 1..=n), poly(n, poly_deg)), 0..=4),
    )
        .prop_map(move |(linear, quads)| {
            Element::from_parts(n, linear, quads)
        })
}

pub fn ideal_element(n: usize, max_deg: u32) -> impl Strategy<Value = Element<Rat>> {
    let poly_deg = max_deg.saturating_sub(2);
    vec(((1..=n, 1..=n), poly(n, poly_deg)), 0..=4).prop_map(move |quads| {
        Element::from_parts(n, vec![Rat::from_int(0); n], quads)
    })
}

/// `(n, u, v, w)` with a shared random rank in `2..=4`.
pub fn element_triple() -> impl Strategy<Value = (usize, Element<Rat>, Element<Rat>, Element<Rat>)>
{
    (2usize..=4).prop_flat_map(|n| {
        (
            Just(n),
            element(n, 4),
            element(n, 4),
            element(n, 4),
        )
    })
}
