//! Seeded random generators for elements, polynomials, and raw
//! expressions.
//!
//! Used by the verification suites and the randomized tests; everything is
//! deterministic given the caller's RNG state. Coefficients are small
//! rationals so that exact arithmetic stays cheap.

use crate::element::Element;
use crate::error::Result;
use crate::expr::BracketExpr;
use crate::inner::{annihilator_generator, AnnKind};
use crate::invariants::{synthesize, SymmetricData};
use crate::perm::Permutation;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use rand::Rng;

pub fn scalar<K: Scalar, R: Rng>(rng: &mut R) -> K {
    K::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=4))
}

pub fn nonzero_scalar<K: Scalar, R: Rng>(rng: &mut R) -> K {
    K::from_ratio(
        if rng.gen_bool(0.5) {
            rng.gen_range(1..=4)
        } else {
            rng.gen_range(-4..=-1)
        },
        rng.gen_range(1..=4),
    )
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    // Fisher-Yates
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images)
}

pub fn monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exps(exps)
}

/// A polynomial with up to `max_terms` monomials of degree at most
/// `max_deg`; may be zero.
pub fn poly<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32, max_terms: usize) -> CommPoly<K> {
    let count = rng.gen_range(0..=max_terms);
    let mut p = CommPoly::zero(n);
    for _ in 0..count {
        p.add_term(monomial(rng, n, max_deg), scalar(rng));
    }
    p
}

pub fn nonzero_poly<K: Scalar, R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: u32,
    max_terms: usize,
) -> CommPoly<K> {
    loop {
        let mut p = poly(rng, n, max_deg, max_terms);
        if p.is_zero() {
            p.add_term(monomial(rng, n, max_deg), nonzero_scalar(rng));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random element of total degree at most `max_deg` (quad polynomials of
/// degree at most `max_deg − 2` when `max_deg ≥ 2`).
pub fn element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let mut u = ideal_element(rng, n, max_deg);
    let linear: Vec<K> = (0..n)
        .map(|_| if rng.gen_bool(0.6) { scalar(rng) } else { K::zero() })
        .collect();
    u = &u + &Element::from_parts(n, linear, []);
    u
}

/// A random element of the commutator ideal.
pub fn ideal_element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let poly_deg = max_deg.saturating_sub(2);
    let entries = rng.gen_range(0..=(n * n).min(4));
    let mut quad = Vec::new();
    for _ in 0..entries {
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(1..=n);
        quad.push(((i, j), poly::<K, R>(rng, n, poly_deg, 3)));
    }
    Element::from_parts(n, vec![K::zero(); n], quad)
}

/// A random element supported on the squares `[x_i, x_i]` alone.
pub fn diagonal_element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let poly_deg = max_deg.saturating_sub(2);
    let mut quad = Vec::new();
    for i in 1..=n {
        if rng.gen_bool(0.8) {
            quad.push(((i, i), poly::<K, R>(rng, n, poly_deg, 3)));
        }
    }
    Element::from_parts(n, vec![K::zero(); n], quad)
}

/// A random element supported on the mixed generators alone.
pub fn off_diagonal_element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let poly_deg = max_deg.saturating_sub(2);
    let mut quad = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && rng.gen_bool(0.6) {
                quad.push(((i, j), poly::<K, R>(rng, n, poly_deg, 2)));
            }
        }
    }
    Element::from_parts(n, vec![K::zero(); n], quad)
}

/// A symmetric diagonal element: a stabilizer-averaged `p_1` propagated to
/// the other squares by the transpositions `(1 i)`.
pub fn symmetric_diagonal<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let p = poly::<K, R>(rng, n, max_deg.saturating_sub(2), 3);
    let p1 = p.orbit_sum(&Permutation::all_fixing(&[1], n));
    let quad = (1..=n)
        .map(|i| {
            let pi = if i == 1 {
                p1.clone()
            } else {
                p1.act(&Permutation::transposition(n, 1, i))
            };
            ((i, i), pi)
        })
        .collect::<Vec<_>>();
    Element::from_parts(n, vec![K::zero(); n], quad)
}

/// A symmetric off-diagonal element built from a stabilizer-averaged
/// `q_12` via the `(α, f, g)` synthesis with `α = 0`, `f = 0`.
pub fn symmetric_off_diagonal<K: Scalar, R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: u32,
) -> Result<Element<K>> {
    if n == 1 {
        return Ok(Element::zero(1));
    }
    let q = poly::<K, R>(rng, n, max_deg.saturating_sub(2), 3);
    let q12 = q.orbit_sum(&Permutation::all_fixing(&[1, 2], n));
    synthesize(&SymmetricData {
        rank: n,
        alpha: K::zero(),
        f: CommPoly::zero(n),
        g: q12,
    })
}

/// Random valid `(α, f, g)` data.
pub fn symmetric_data<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> SymmetricData<K> {
    let deg = max_deg.saturating_sub(2);
    let f = poly::<K, R>(rng, n, deg, 3).orbit_sum(&Permutation::all_fixing(&[1], n));
    let g = if n >= 2 {
        poly::<K, R>(rng, n, deg, 3).orbit_sum(&Permutation::all_fixing(&[1, 2], n))
    } else {
        CommPoly::zero(n)
    };
    SymmetricData {
        rank: n,
        alpha: scalar(rng),
        f,
        g,
    }
}

/// A random symmetric element, through the synthesis route.
pub fn symmetric_element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    synthesize(&symmetric_data(rng, n, max_deg)).expect("sampled data is valid by construction")
}

/// A random annihilator element: a sum of polynomial multiples of squares
/// and symmetric sums of random ideal-free arguments.
pub fn annihilator_element<K: Scalar, R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Element<K> {
    let mut acc = Element::zero(n);
    let pieces = rng.gen_range(1..=3);
    for _ in 0..pieces {
        let v = element(rng, n, 1);
        let base = if rng.gen_bool(0.5) {
            annihilator_generator(AnnKind::Square, &v, &v)
        } else {
            let w = element(rng, n, 1);
            annihilator_generator(AnnKind::SymSum, &v, &w)
        };
        let p = poly::<K, R>(rng, n, max_deg.saturating_sub(2), 2);
        acc = &acc + &base.right_act(&p).expect("constructor output is in the ideal");
    }
    acc
}

/// A random ideal element outside the annihilator (rejection sampling).
/// Needs `n ≥ 2`: at rank 1 the whole commutator ideal annihilates.
pub fn non_annihilator_element<K: Scalar, R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: u32,
) -> Element<K> {
    assert!(n >= 2, "rank 1 has no non-annihilating ideal elements");
    loop {
        let u = ideal_element(rng, n, max_deg);
        if !crate::inner::is_in_annihilator(&u) {
            return u;
        }
        // guarantee progress: a lone mixed generator never annihilates
        if rng.gen_bool(0.25) {
            return Element::commutator(1, 2, n);
        }
    }
}

/// A random raw bracket expression with nesting depth at most `depth`.
pub fn bracket_expr<K: Scalar, R: Rng>(rng: &mut R, n: usize, depth: u32) -> BracketExpr<K> {
    if depth == 0 {
        return BracketExpr::Generator(rng.gen_range(1..=n));
    }
    match rng.gen_range(0..10) {
        0..=2 => BracketExpr::Generator(rng.gen_range(1..=n)),
        3..=5 => BracketExpr::bracket(
            bracket_expr(rng, n, depth - 1),
            bracket_expr(rng, n, depth - 1),
        ),
        6 => BracketExpr::scaled(nonzero_scalar(rng), bracket_expr(rng, n, depth - 1)),
        7 => {
            let len = rng.gen_range(2..=3);
            BracketExpr::Sum((0..len).map(|_| bracket_expr(rng, n, depth - 1)).collect())
        }
        _ => BracketExpr::adj(bracket_expr(rng, n, depth - 1), rng.gen_range(1..=n)),
    }
}

/// Rewrites applicable to a subexpression that preserve the value modulo
/// the defining identities.
fn rewrite_candidates<K: Scalar>(e: &BracketExpr<K>) -> Vec<u8> {
    let mut kinds = Vec::new();
    match e {
        BracketExpr::Bracket(a, _) => {
            kinds.push(1); // square expansion applies to any bracket
            if matches!(**a, BracketExpr::Bracket(..)) {
                kinds.push(0); // left-normed rearrangement
            }
        }
        BracketExpr::RightAdj(..) => kinds.push(2), // unfold to a bracket
        _ => {}
    }
    kinds
}

fn apply_rewrite<K: Scalar>(e: &BracketExpr<K>, kind: u8) -> BracketExpr<K> {
    match (kind, e) {
        // [[a,b],c] = [[a,c],b] + [a,[b,c]]
        (0, BracketExpr::Bracket(ab, c)) => {
            if let BracketExpr::Bracket(a, b) = &**ab {
                BracketExpr::sum([
                    BracketExpr::bracket(
                        BracketExpr::bracket((**a).clone(), (**c).clone()),
                        (**b).clone(),
                    ),
                    BracketExpr::bracket(
                        (**a).clone(),
                        BracketExpr::bracket((**b).clone(), (**c).clone()),
                    ),
                ])
            } else {
                e.clone()
            }
        }
        // [a,b] = [a+b,a+b] − [a,a] − [b,b] − [b,a]
        (1, BracketExpr::Bracket(a, b)) => {
            let a = (**a).clone();
            let b = (**b).clone();
            let apb = BracketExpr::sum([a.clone(), b.clone()]);
            let minus_one = -K::one();
            BracketExpr::sum([
                BracketExpr::bracket(apb.clone(), apb),
                BracketExpr::scaled(
                    minus_one.clone(),
                    BracketExpr::bracket(a.clone(), a.clone()),
                ),
                BracketExpr::scaled(
                    minus_one.clone(),
                    BracketExpr::bracket(b.clone(), b.clone()),
                ),
                BracketExpr::scaled(minus_one, BracketExpr::bracket(b, a)),
            ])
        }
        // e.rI = [e, xI]
        (2, BracketExpr::RightAdj(inner, m)) => {
            BracketExpr::bracket((**inner).clone(), BracketExpr::Generator(*m))
        }
        _ => e.clone(),
    }
}

/// All `(path, kind)` pairs where a value-preserving rewrite applies.
fn collect_sites<K: Scalar>(
    e: &BracketExpr<K>,
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, u8)>,
) {
    for kind in rewrite_candidates(e) {
        out.push((path.clone(), kind));
    }
    let children: Vec<&BracketExpr<K>> = match e {
        BracketExpr::Generator(_) => vec![],
        BracketExpr::Scaled(_, inner) | BracketExpr::RightAdj(inner, _) => vec![inner],
        BracketExpr::Sum(items) => items.iter().collect(),
        BracketExpr::Bracket(a, b) => vec![a, b],
    };
    for (idx, child) in children.into_iter().enumerate() {
        path.push(idx);
        collect_sites(child, path, out);
        path.pop();
    }
}

fn rewrite_at<K: Scalar>(e: &BracketExpr<K>, path: &[usize], kind: u8) -> BracketExpr<K> {
    if path.is_empty() {
        return apply_rewrite(e, kind);
    }
    let idx = path[0];
    let rest = &path[1..];
    match e {
        BracketExpr::Scaled(c, inner) => {
            BracketExpr::scaled(c.clone(), rewrite_at(inner, rest, kind))
        }
        BracketExpr::RightAdj(inner, m) => BracketExpr::adj(rewrite_at(inner, rest, kind), *m),
        BracketExpr::Sum(items) => BracketExpr::Sum(
            items
                .iter()
                .enumerate()
                .map(|(k, item)| {
                    if k == idx {
                        rewrite_at(item, rest, kind)
                    } else {
                        item.clone()
                    }
                })
                .collect(),
        ),
        BracketExpr::Bracket(a, b) => {
            if idx == 0 {
                BracketExpr::bracket(rewrite_at(a, rest, kind), (**b).clone())
            } else {
                BracketExpr::bracket((**a).clone(), rewrite_at(b, rest, kind))
            }
        }
        BracketExpr::Generator(_) => e.clone(),
    }
}

/// A pair of structurally different expressions equal modulo the defining
/// identities: the second is obtained from the first by one to three
/// random identity-preserving rewrites.
pub fn equivalent_pair<K: Scalar, R: Rng>(
    rng: &mut R,
    n: usize,
    depth: u32,
) -> (BracketExpr<K>, BracketExpr<K>) {
    // bias towards expressions with at least one bracket
    let base = loop {
        let e = bracket_expr::<K, R>(rng, n, depth);
        let mut sites = Vec::new();
        collect_sites(&e, &mut Vec::new(), &mut sites);
        if !sites.is_empty() {
            break e;
        }
    };
    let mut rewritten = base.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let mut sites = Vec::new();
        collect_sites(&rewritten, &mut Vec::new(), &mut sites);
        if sites.is_empty() {
            break;
        }
        let (path, kind) = sites[rng.gen_range(0..sites.len())].clone();
        rewritten = rewrite_at(&rewritten, &path, kind);
    }
    (base, rewritten)
}
