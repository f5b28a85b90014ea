//! Randomized verification suites exposed through the `verify`
//! subcommand.
//!
//! Each check runs a fixed number of seeded cases, counts passes, and
//! keeps the first counterexample rendered in the element text syntax.

use leibniz_core::{
    decompose_preserving, decompose_symmetric, diagonal_symmetry_conditions, is_in_annihilator,
    is_symmetric, linalg, off_diagonal_symmetry_conditions, oracle, preserves_symmetric, sample,
    symmetrize, synthesize, CommPoly, Element, InnerAuto, Permutation, Rat, RatElement, Scalar,
    SymmetricData,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Identities,
    Theorems,
    Inner,
    All,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub cases: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_deg: u32,
}

pub struct CheckResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub counterexample: Option<String>,
}

pub struct SuiteResult {
    pub name: &'static str,
    pub checks: Vec<CheckResult>,
}

pub fn run(config: &VerifyConfig) -> Vec<SuiteResult> {
    let mut out = Vec::new();
    if matches!(config.suite, Suite::Identities | Suite::All) {
        out.push(identities_suite(config));
    }
    if matches!(config.suite, Suite::Theorems | Suite::All) {
        out.push(theorems_suite(config));
    }
    if matches!(config.suite, Suite::Inner | Suite::All) {
        out.push(inner_suite(config));
    }
    out
}

pub fn all_passed(results: &[SuiteResult]) -> bool {
    results
        .iter()
        .all(|s| s.checks.iter().all(|c| c.passed == c.total))
}

pub fn render_report(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for suite in results {
        let line = suite
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{} {}/{}{}",
                    c.name,
                    c.passed,
                    c.total,
                    if c.passed == c.total { "" } else { " FAIL" }
                )
            })
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("suite {}: {}\n", suite.name, line));
        for c in &suite.checks {
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("  first counterexample [{}]: {}\n", c.name, ce));
            }
        }
    }
    if all_passed(results) {
        out.push_str("all checks passed\n");
    } else {
        out.push_str("FAILURES detected\n");
    }
    out
}

fn check<F>(name: &'static str, total: usize, mut body: F) -> CheckResult
where
    F: FnMut(usize) -> Option<String>,
{
    let mut passed = 0;
    let mut counterexample = None;
    for case in 0..total {
        match body(case) {
            None => passed += 1,
            Some(ce) => {
                if counterexample.is_none() {
                    counterexample = Some(ce);
                }
            }
        }
    }
    CheckResult {
        name,
        passed,
        total,
        counterexample,
    }
}

fn rank_for(case: usize, max_n: usize) -> usize {
    let lo = 2.min(max_n);
    lo + case % (max_n - lo + 1)
}

fn identities_suite(config: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let deg = config.max_deg;
    let cases = config.cases;

    let leibniz = check("leibniz", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u: RatElement = sample::element(&mut rng, n, deg);
        let v: RatElement = sample::element(&mut rng, n, deg);
        let w: RatElement = sample::element(&mut rng, n, deg);
        let lhs = u.bracket(&v).bracket(&w);
        let rhs = &u.bracket(&w).bracket(&v) + &u.bracket(&v.bracket(&w));
        (lhs != rhs).then(|| format!("u = {u}; v = {v}; w = {w}"))
    });

    let metabelian = check("metabelian", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u: RatElement = sample::element(&mut rng, n, deg);
        let v: RatElement = sample::element(&mut rng, n, deg);
        let s: RatElement = sample::element(&mut rng, n, deg);
        let t: RatElement = sample::element(&mut rng, n, deg);
        let prod = u.bracket(&v).bracket(&s.bracket(&t));
        (!prod.is_zero()).then(|| format!("u = {u}; v = {v}; s = {s}; t = {t}"))
    });

    let adjoint_form = check("adjoint-form", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u: RatElement = sample::element(&mut rng, n, deg);
        let v: RatElement = sample::element(&mut rng, n, deg);
        let m = rng.gen_range(1..=n);
        let xm = Element::generator(m, n);
        let lhs = u.bracket(&v).bracket(&xm);
        let rhs = &u.bracket(&xm).bracket(&v) + &u.bracket(&v.bracket(&xm));
        (lhs != rhs).then(|| format!("u = {u}; v = {v}; m = {m}"))
    });

    let module_action = check("module-action", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u: RatElement = sample::ideal_element(&mut rng, n, deg);
        let p: CommPoly<Rat> = sample::poly(&mut rng, n, 2, 2);
        let q: CommPoly<Rat> = sample::poly(&mut rng, n, 2, 2);
        let via_product = u.right_act(&(&p * &q)).unwrap();
        let sequential = u.right_act(&p).unwrap().right_act(&q).unwrap();
        (via_product != sequential).then(|| format!("u = {u}; p = {p}; q = {q}"))
    });

    let normal_form = check("normal-form", cases, |case| {
        let n = rank_for(case, config.max_n.min(3));
        let (a, b) = sample::equivalent_pair::<Rat, _>(&mut rng, n, 3);
        let na = a.normalize(n).unwrap();
        let nb = b.normalize(n).unwrap();
        (na != nb).then(|| format!("normal forms differ: {na} vs {nb}"))
    });

    SuiteResult {
        name: "identities",
        checks: vec![leibniz, metabelian, adjoint_form, module_action, normal_form],
    }
}

fn theorems_suite(config: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    let deg = config.max_deg;
    let cases = config.cases;

    let diagonal = check("diagonal-conditions", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u = sampled_submodule_element(&mut rng, n, deg, true);
        let by_conditions = diagonal_symmetry_conditions(&u).unwrap();
        let by_action = is_symmetric(&u);
        (by_conditions != by_action).then(|| format!("u = {u}"))
    });

    let off_diagonal = check("off-diagonal-conditions", cases, |case| {
        let n = rank_for(case, config.max_n);
        let u = sampled_submodule_element(&mut rng, n, deg, false);
        let by_conditions = off_diagonal_symmetry_conditions(&u).unwrap();
        let by_action = is_symmetric(&u);
        (by_conditions != by_action).then(|| format!("u = {u}"))
    });

    let projection = check("symmetrization", cases / 2, |case| {
        let n = rank_for(case, config.max_n);
        let u: RatElement = sample::element(&mut rng, n, deg);
        let s = symmetrize(&u).unwrap();
        if !is_symmetric(&s) || symmetrize(&s).unwrap() != s {
            return Some(format!("u = {u}"));
        }
        None
    });

    let roundtrip = check("decompose-roundtrip", cases / 2, |case| {
        let n = rank_for(case, config.max_n);
        let d = sample::symmetric_data::<Rat, _>(&mut rng, n, deg);
        let s = synthesize(&d).unwrap();
        if decompose_symmetric(&s) != Ok(d.clone()) {
            return Some(format!("s = {s}"));
        }
        None
    });

    let spans = {
        let max_d = config.max_deg.clamp(1, 5);
        let pairs: Vec<(usize, u32)> = [2usize, 3]
            .iter()
            .flat_map(|&n| (1..=max_d).map(move |d| (n, d)))
            .collect();
        let mut iter = pairs.into_iter();
        check("oracle-span", (config.max_deg.clamp(1, 5) as usize) * 2, move |_| {
            let (n, d) = iter.next().expect("pair count matches total");
            if synthesis_matches_oracle(n, d) {
                None
            } else {
                Some(format!("span mismatch at n = {n}, d = {d}"))
            }
        })
    };

    SuiteResult {
        name: "theorems",
        checks: vec![diagonal, off_diagonal, projection, roundtrip, spans],
    }
}

/// Half the samples satisfy the symmetry conditions, half carry a single
/// perturbed coefficient.
fn sampled_submodule_element<R: Rng>(
    rng: &mut R,
    n: usize,
    deg: u32,
    diagonal: bool,
) -> RatElement {
    let base = if diagonal {
        sample::symmetric_diagonal::<Rat, _>(rng, n, deg)
    } else {
        sample::symmetric_off_diagonal::<Rat, _>(rng, n, deg).unwrap()
    };
    if rng.gen_bool(0.5) {
        return base;
    }
    let (i, j) = if diagonal {
        let i = rng.gen_range(1..=n);
        (i, i)
    } else {
        loop {
            let i = rng.gen_range(1..=n);
            let j = rng.gen_range(1..=n);
            if i != j {
                break (i, j);
            }
        }
    };
    let delta: CommPoly<Rat> = CommPoly::from_terms(
        n,
        [(
            sample::monomial(rng, n, deg.saturating_sub(2)),
            sample::nonzero_scalar::<Rat, _>(rng),
        )],
    );
    let mut quad: Vec<((usize, usize), CommPoly<Rat>)> = base
        .quad_entries()
        .map(|(&ij, p)| (ij, p.clone()))
        .collect();
    quad.push(((i, j), delta));
    Element::from_parts(n, base.linear().to_vec(), quad)
}

fn synthesis_matches_oracle(n: usize, d: u32) -> bool {
    let oracle_basis: Vec<RatElement> = match oracle::invariant_basis(n, d) {
        Ok(b) => b,
        Err(_) => return false,
    };
    let oracle_coords: Vec<Vec<Rat>> = oracle_basis
        .iter()
        .map(|u| oracle::coordinates(u, d))
        .collect();
    let mut synth_coords: Vec<Vec<Rat>> = Vec::new();
    if d == 1 {
        let data = SymmetricData {
            rank: n,
            alpha: Rat::from_int(1),
            f: CommPoly::zero(n),
            g: CommPoly::zero(n),
        };
        synth_coords.push(oracle::coordinates(&synthesize(&data).unwrap(), d));
    } else {
        let stab1 = Permutation::all_fixing(&[1], n);
        let stab12 = Permutation::all_fixing(&[1, 2], n);
        for m in oracle::monomials_of_degree(n, d - 2) {
            let mono: CommPoly<Rat> = CommPoly::from_terms(n, [(m, Rat::from_int(1))]);
            for (f, g) in [
                (mono.orbit_sum(&stab1), CommPoly::zero(n)),
                (CommPoly::zero(n), mono.orbit_sum(&stab12)),
            ] {
                if f.is_zero() && g.is_zero() {
                    continue;
                }
                let data = SymmetricData {
                    rank: n,
                    alpha: Rat::from_int(0),
                    f,
                    g,
                };
                synth_coords.push(oracle::coordinates(&synthesize(&data).unwrap(), d));
            }
        }
    }
    linalg::same_span(&oracle_coords, &synth_coords)
}

fn inner_suite(config: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(2));
    let deg = config.max_deg;
    let cases = config.cases;

    let endomorphism = check("endomorphism", cases, |case| {
        let n = rank_for(case, config.max_n);
        let psi = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, deg)).unwrap();
        let v: RatElement = sample::element(&mut rng, n, deg);
        let w: RatElement = sample::element(&mut rng, n, deg);
        let lhs = psi.apply(&v.bracket(&w));
        let rhs = psi.apply(&v).bracket(&psi.apply(&w));
        (lhs != rhs).then(|| format!("u = {}; v = {v}; w = {w}", psi.base()))
    });

    let group_laws = check("group-laws", cases / 2, |case| {
        let n = rank_for(case, config.max_n);
        let p1 = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, deg)).unwrap();
        let p2 = InnerAuto::new(sample::ideal_element::<Rat, _>(&mut rng, n, deg)).unwrap();
        let v: RatElement = sample::element(&mut rng, n, deg);
        if p1.compose(&p2).apply(&v) != p1.apply(&p2.apply(&v)) {
            return Some(format!("composition failed: u1 = {}", p1.base()));
        }
        if p1.compose(&p2) != p2.compose(&p1) {
            return Some("commutativity failed".to_string());
        }
        if p1.inverse().apply(&p1.apply(&v)) != v {
            return Some(format!("inverse failed: u = {}", p1.base()));
        }
        None
    });

    let annihilator_iff = check("annihilator-action", cases / 2, |case| {
        let n = rank_for(case, config.max_n);
        if case % 2 == 0 {
            let u = sample::annihilator_element::<Rat, _>(&mut rng, n, deg);
            let psi = InnerAuto::new(u).unwrap();
            let v: RatElement = sample::element(&mut rng, n, deg);
            (psi.apply(&v) != v).then(|| format!("u = {} moved {v}", psi.base()))
        } else {
            let u = sample::non_annihilator_element::<Rat, _>(&mut rng, n, deg);
            let psi = InnerAuto::new(u).unwrap();
            let moved = (1..=n)
                .any(|m| psi.apply(&Element::generator(m, n)) != Element::generator(m, n));
            (!moved).then(|| format!("u = {} fixed every generator", psi.base()))
        }
    });

    let preservation = check("symmetric-preservation", cases / 2, |case| {
        let n = rank_for(case, config.max_n);
        if case % 2 == 0 {
            let u_ann = sample::annihilator_element::<Rat, _>(&mut rng, n, deg);
            let s_full = sample::symmetric_element::<Rat, _>(&mut rng, n, deg);
            let u = &u_ann + &(&s_full - &s_full.degree_component(1));
            if preserves_symmetric(&u) != Ok(true) {
                return Some(format!("splitting element rejected: u = {u}"));
            }
            let psi = InnerAuto::new(u).unwrap();
            let s = sample::symmetric_element::<Rat, _>(&mut rng, n, 3);
            if !is_symmetric(&psi.apply(&s)) {
                return Some(format!("image of {s} not symmetric"));
            }
            let (a, b) = decompose_preserving(psi.base()).unwrap();
            if !is_in_annihilator(&a) || !is_symmetric(&b) || &(&a + &b) != psi.base() {
                return Some(format!("bad splitting of {}", psi.base()));
            }
            None
        } else {
            let u = loop {
                let candidate = sample::ideal_element::<Rat, _>(&mut rng, n, deg);
                if !preserves_symmetric(&candidate).unwrap() {
                    break candidate;
                }
                if rng.gen_bool(0.2) {
                    break Element::commutator(1, 2, n);
                }
            };
            let psi = InnerAuto::new(u.clone()).unwrap();
            if find_broken_image(&mut rng, &psi).is_none() {
                return Some(format!("no witness for u = {u}"));
            }
            if decompose_preserving(&u).is_ok() {
                return Some(format!("splitting accepted for failing u = {u}"));
            }
            None
        }
    });

    SuiteResult {
        name: "inner",
        checks: vec![endomorphism, group_laws, annihilator_iff, preservation],
    }
}

/// Searches low-degree symmetric elements, starting with the linear
/// invariant, for one whose image is not symmetric.
fn find_broken_image<R: Rng>(rng: &mut R, psi: &InnerAuto<Rat>) -> Option<RatElement> {
    let n = psi.rank();
    let mut linear = Element::zero(n);
    for i in 1..=n {
        linear = &linear + &Element::generator(i, n);
    }
    let mut candidates = vec![linear];
    for _ in 0..15 {
        candidates.push(sample::symmetric_element::<Rat, _>(rng, n, 3));
    }
    candidates
        .into_iter()
        .find(|s| !is_symmetric(&psi.apply(s)))
}
