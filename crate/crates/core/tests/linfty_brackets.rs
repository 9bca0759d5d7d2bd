mod support;

use liepair::corpus::{abelian2, bundled_pairs, connections, sl2_borel};
use liepair::exact::{int, ExtIndex};
use liepair::kapranov::hvf_coefficients;
use liepair::linfty::{graded_basis, jacobi_check, koszul_sign, GradedElt, LInfty};
use liepair::{Connection, Execution, PbwContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::derived_bracket;

#[test]
fn koszul_sign_examples() {
    assert_eq!(koszul_sign(&[0, 1, 2], &[1, 0, 1]), 1);
    assert_eq!(koszul_sign(&[1, 0], &[1, 1]), -1);
    assert_eq!(koszul_sign(&[1, 0], &[0, 1]), 1);
}

/// Brackets agree with derived brackets of `D` on all basis tuples, k ≤ 3.
#[test]
fn brackets_match_derived_brackets() {
    for b in bundled_pairs() {
        for conn in connections(&b.pair) {
            let p = &b.pair;
            let hvf = hvf_coefficients(&PbwContext::new(p.clone(), conn), 4);
            let l = LInfty::new(p, &hvf);
            let basis = graded_basis(p);
            for k in 1..=3usize {
                let mut idx = vec![0usize; k];
                'tuples: loop {
                    let args: Vec<(ExtIndex, usize)> = idx.iter().map(|&i| basis[i].clone()).collect();
                    let elts: Vec<GradedElt> = args.iter().map(|(e, j)| GradedElt::basis(e.clone(), *j)).collect();
                    let ours = l.lambda(&elts).unwrap().to_cochain();
                    assert_eq!(ours, derived_bracket(p, &hvf, &args), "{} {:?}", b.name, args);
                    let mut t = 0;
                    loop {
                        if t == k {
                            break 'tuples;
                        }
                        idx[t] += 1;
                        if idx[t] < basis.len() {
                            break;
                        }
                        idx[t] = 0;
                        t += 1;
                    }
                }
            }
        }
    }
}

#[test]
fn brackets_are_graded_symmetric_and_multilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for b in bundled_pairs() {
        let p = &b.pair;
        let conn = connections(p).pop().unwrap();
        let hvf = hvf_coefficients(&PbwContext::new(p.clone(), conn), 4);
        let l = LInfty::new(p, &hvf);
        let basis = graded_basis(p);
        if basis.is_empty() {
            continue;
        }
        for _ in 0..30 {
            let k = rng.gen_range(2..=4);
            let args: Vec<GradedElt> = (0..k)
                .map(|_| {
                    let (e, j) = &basis[rng.gen_range(0..basis.len())];
                    GradedElt::basis(e.clone(), *j)
                })
                .collect();
            let degs: Vec<usize> = args.iter().map(|a| a.degree().unwrap()).collect();
            let base = l.lambda(&args).unwrap();
            let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
            let mut perm: Vec<usize> = (0..k).collect();
            perm.swap(i, j);
            let swapped: Vec<GradedElt> = perm.iter().map(|&t| args[t].clone()).collect();
            let eps = koszul_sign(&perm, &degs);
            assert_eq!(l.lambda(&swapped).unwrap(), base.scaled(&int(eps as i64)), "{}", b.name);

            // linearity in the first slot
            let extra = {
                let (e, j) = &basis[rng.gen_range(0..basis.len())];
                GradedElt::basis(e.clone(), *j)
            };
            if extra.degree() == args[0].degree() {
                let mut sum = args[0].scaled(&int(3));
                sum.add_scaled(&int(-2), &extra);
                let mut combined = args.clone();
                combined[0] = sum;
                let mut other = args.clone();
                other[0] = extra;
                let mut expect = base.scaled(&int(3));
                expect.add_scaled(&int(-2), &l.lambda(&other).unwrap());
                assert_eq!(l.lambda(&combined).unwrap(), expect);
            }
        }
    }
}

#[test]
fn forms_factor_out_with_sign() {
    // λ₂(ξ⊗e₁, e₂) = (−1)^{|ξ|} ξ ∧ λ₂(e₁, e₂) on the Borel pair
    let b = sl2_borel();
    let p = &b.pair;
    let conn = connections(p).pop().unwrap();
    let hvf = hvf_coefficients(&PbwContext::new(p.clone(), conn), 3);
    let l = LInfty::new(p, &hvf);
    let e0 = GradedElt::basis(ExtIndex::empty(), 0);
    for xi in [ExtIndex::single(1), ExtIndex::single(2)] {
        let lhs = l.lambda(&[e0.wedge_left(&xi), e0.clone()]).unwrap();
        let rhs = l.lambda(&[e0.clone(), e0.clone()]).unwrap().wedge_left(&xi).scaled(&int(-1));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn bracket_examples() {
    let a = abelian2();
    let hvf = hvf_coefficients(&PbwContext::new(a.pair.clone(), Connection::zero_extension(&a.pair)), 4);
    let l = LInfty::new(&a.pair, &hvf);
    let e0 = GradedElt::basis(ExtIndex::empty(), 0);
    for k in 2..=4 {
        assert!(l.lambda(&vec![e0.clone(); k]).unwrap().is_zero());
    }

    let b = sl2_borel();
    let hvf = hvf_coefficients(&PbwContext::new(b.pair.clone(), Connection::zero_extension(&b.pair)), 3);
    let l = LInfty::new(&b.pair, &hvf);
    let f = GradedElt::basis(ExtIndex::empty(), 0);
    // ν_e ⊗ 2f̄
    assert_eq!(l.lambda(&[f.clone(), f]).unwrap(), GradedElt::basis(ExtIndex::single(1), 0).scaled(&int(2)));
}

#[test]
fn jacobi_identities_hold() {
    for b in bundled_pairs() {
        for conn in connections(&b.pair) {
            let hvf = hvf_coefficients(&PbwContext::new(b.pair.clone(), conn), 5);
            let r = jacobi_check(&b.pair, &hvf, 4, Execution::default()).unwrap();
            assert!(r.passed(), "{}: {:?}", b.name, r.failures);
        }
    }
}

#[test]
fn flipping_odd_arities_breaks_arity_four() {
    // Dropping the (−1)^k factor flips λ_3 only; the arity-4 identity then
    // fails on the Borel pair with a generic connection.
    let b = sl2_borel();
    let conn = connections(&b.pair)[1].clone();
    let mut hvf = hvf_coefficients(&PbwContext::new(b.pair.clone(), conn), 5);
    for k in [3, 5] {
        let flipped = hvf.get(k).scaled(&int(-1));
        hvf.set(k, flipped);
    }
    let r = jacobi_check(&b.pair, &hvf, 4, Execution::default()).unwrap();
    assert!(r.failures.contains_key(&4));
}
