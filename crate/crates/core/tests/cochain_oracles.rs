//! The CE differential and the vertical bracket agree with commutators of
//! derivations computed from scratch on generators.

mod support;

use liepair::cochain::{ce_differential, congo_bracket, CECochain};
use liepair::corpus::{bundled_pairs, connections};
use liepair::exact::int;
use liepair::kapranov::{hvf_coefficients, mc_residual};
use liepair::PbwContext;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{ce_operator, cochain_der, commutator, der_cochain, random_cochain, total_operator, SuperPoly};

#[test]
fn ce_operator_squares_to_zero() {
    for b in bundled_pairs() {
        let p = &b.pair;
        let d = ce_operator(p);
        let nus: Vec<usize> = p.sub_slots().collect();
        let dd = commutator(&d, &d, &nus, p.quotient_dim());
        assert!(dd.on_nu.values().chain(dd.on_x.values()).all(SuperPoly::is_zero), "{}", b.name);
    }
}

#[test]
fn differential_is_commutator_with_ce_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for b in bundled_pairs() {
        let p = &b.pair;
        let nus: Vec<usize> = p.sub_slots().collect();
        let d = ce_operator(p);
        for deg in 0..=p.sub_dim() {
            for k in 0..=3 {
                let w = random_cochain(p, deg, k, &mut rng);
                let expect = der_cochain(&commutator(&d, &cochain_der(&w), &nus, p.quotient_dim()));
                assert_eq!(ce_differential(p, &w), expect, "{} p={deg} k={k}", b.name);
            }
        }
    }
}

#[test]
fn differential_squares_to_zero_on_random_cochains() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for b in bundled_pairs() {
        for deg in 0..b.pair.sub_dim() {
            for k in 0..=3 {
                let w = random_cochain(&b.pair, deg, k, &mut rng);
                assert!(ce_differential(&b.pair, &ce_differential(&b.pair, &w)).is_zero(), "{}", b.name);
            }
        }
    }
}

#[test]
fn bracket_is_commutator_of_vertical_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for b in bundled_pairs() {
        let p = &b.pair;
        let nus: Vec<usize> = p.sub_slots().collect();
        for (p1, p2) in [(0, 0), (0, 1), (1, 1), (1, 0)] {
            if p1.max(p2) > p.sub_dim() {
                continue;
            }
            for (k1, k2) in [(0, 2), (1, 1), (2, 3), (3, 2)] {
                let x = random_cochain(p, p1, k1, &mut rng);
                let y = random_cochain(p, p2, k2, &mut rng);
                let expect = der_cochain(&commutator(&cochain_der(&x), &cochain_der(&y), &nus, p.quotient_dim()));
                assert_eq!(congo_bracket(&x, &y), expect, "{}", b.name);
            }
        }
    }
}

fn graded_jacobi(x: (&CECochain, usize), y: (&CECochain, usize), z: (&CECochain, usize)) -> CECochain {
    // [x,[y,z]] − [[x,y],z] − (−1)^{|x||y|} [y,[x,z]]
    let mut out = congo_bracket(x.0, &congo_bracket(y.0, z.0));
    out = out.sub(&congo_bracket(&congo_bracket(x.0, y.0), z.0));
    let s = if (x.1 * y.1) % 2 == 0 { int(1) } else { int(-1) };
    out.add_scaled(&-s, &congo_bracket(y.0, &congo_bracket(x.0, z.0)));
    out
}

#[test]
fn bracket_satisfies_graded_jacobi_and_antisymmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for b in bundled_pairs() {
        let p = &b.pair;
        let m = p.sub_dim();
        for degs in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 2), (2, 1, 0)] {
            if degs.0.max(degs.1).max(degs.2) > m || degs.0 + degs.1 + degs.2 > m.max(3) {
                continue;
            }
            let x = random_cochain(p, degs.0, 2, &mut rng);
            let y = random_cochain(p, degs.1, 1, &mut rng);
            let z = random_cochain(p, degs.2, 3, &mut rng);
            assert!(graded_jacobi((&x, degs.0), (&y, degs.1), (&z, degs.2)).is_zero(), "{} {:?}", b.name, degs);
            let mut anti = congo_bracket(&x, &y);
            let s = if (degs.0 * degs.1) % 2 == 0 { int(1) } else { int(-1) };
            anti.add_scaled(&s, &congo_bracket(&y, &x));
            assert!(anti.is_zero());
        }
    }
}

/// `D² = 0` for `D = d + Σ R_k`, checked on generators in every weight that
/// receives all contributions; independent of the library's MC residual.
#[test]
fn total_operator_squares_to_zero() {
    let n = 4;
    for b in bundled_pairs() {
        for conn in connections(&b.pair) {
            let p = &b.pair;
            let ctx = PbwContext::new(p.clone(), conn);
            let hvf = hvf_coefficients(&ctx, n);
            let d = total_operator(p, &hvf);
            let nus: Vec<usize> = p.sub_slots().collect();
            let dd = commutator(&d, &d, &nus, p.quotient_dim());
            for img in dd.on_nu.values().chain(dd.on_x.values()) {
                for w in 0..=n {
                    assert!(img.weight(w).is_zero(), "{} weight {w}", b.name);
                }
            }
            assert!(mc_residual(p, &hvf).passed());
        }
    }
}
