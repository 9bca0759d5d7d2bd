use liepair::exact::{
    big, factorial, format_scalar, frac, int, pair, parse_scalar, polarize, polarize_monomial, DualSymTensor, MultiIndex,
    Scalar, SymTensor,
};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// `∂^α x^β` evaluated at 0, by repeated differentiation of one monomial.
fn differentiate_at_zero(alpha: &MultiIndex, beta: &MultiIndex) -> Scalar {
    let mut coeff = Scalar::one();
    let mut cur = beta.clone();
    for &s in alpha.slots() {
        let e = cur.exponent(s);
        if e == 0 {
            return Scalar::zero();
        }
        coeff *= int(e as i64);
        cur = cur.without(s).unwrap();
    }
    if cur.is_one() {
        coeff
    } else {
        Scalar::zero()
    }
}

#[test]
fn pairing_examples() {
    let e1 = MultiIndex::new(vec![0]);
    let e11 = MultiIndex::new(vec![0, 0]);
    let e12 = MultiIndex::new(vec![0, 1]);
    let d = |m: &MultiIndex| DualSymTensor::monomial(m.clone(), int(1));
    let s = |m: &MultiIndex| SymTensor::monomial(m.clone(), int(1));
    assert_eq!(pair(&d(&e1), &s(&e1)).unwrap(), int(1));
    assert_eq!(pair(&d(&e11), &s(&e11)).unwrap(), int(2));
    assert_eq!(pair(&d(&e11), &s(&e12)).unwrap(), int(0));
    assert!(pair(&d(&e1), &s(&e11)).is_err());
}

#[test]
fn pairing_gram_matrix_is_diagonal_factorial() {
    for dim in 1..=3 {
        for w in 0..=4 {
            let basis = MultiIndex::all_of_weight(w, dim);
            for a in &basis {
                for b in &basis {
                    let v = pair(&DualSymTensor::monomial(a.clone(), int(1)), &SymTensor::monomial(b.clone(), int(1))).unwrap();
                    assert_eq!(v, differentiate_at_zero(a, b));
                    if a == b {
                        assert_eq!(v, big(&a.factorial()));
                        assert!(v > Scalar::zero());
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn polarization_examples() {
    let b1 = vec![int(1), int(2)];
    let b2 = vec![int(-1), int(3)];
    let b3 = vec![frac(1, 2), int(0)];
    let sq = |b: &[Scalar]| SymTensor::power(b, 2);
    let expect = SymTensor::from_vector(&b1).sym_mul(&SymTensor::from_vector(&b2));
    assert_eq!(polarize(&[b1.clone(), b2.clone()], sq), expect);
    let cube = |b: &[Scalar]| SymTensor::power(b, 3);
    let expect = expect.sym_mul(&SymTensor::from_vector(&b3));
    assert_eq!(polarize(&[b1.clone(), b2, b3], cube), expect);
    assert_eq!(polarize(&[b1.clone()], |b: &[Scalar]| b.to_vec()), b1);
}

fn small() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn vec3() -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small(), 3)
}

fn huge() -> impl Strategy<Value = Scalar> {
    (proptest::collection::vec(any::<u32>(), 8), proptest::collection::vec(any::<u32>(), 8), any::<bool>()).prop_map(
        |(n, d, neg)| {
            let num = BigInt::from_slice(if neg { Sign::Minus } else { Sign::Plus }, &n);
            let den = BigInt::from_slice(Sign::Plus, &d) + 1;
            Scalar::new(num, den)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_arithmetic_round_trips(a in huge(), b in huge()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(parse_scalar(&format_scalar(&a)).unwrap(), a);
    }

    /// A random symmetric quadratic/cubic map given on the diagonal is
    /// reproduced by polarization on the diagonal.
    #[test]
    fn polarization_restricts_to_power_map(coeffs in proptest::collection::vec(small(), 10), b in vec3(), cubic in any::<bool>()) {
        let n = if cubic { 3 } else { 2 };
        let map = |v: &[Scalar]| {
            let mut out = SymTensor::zero();
            let p = SymTensor::power(v, n);
            for ((m, c), k) in p.terms().zip(coeffs.iter().cycle()) {
                out.add_term(MultiIndex::new(vec![m.slots()[0]]), c * k);
            }
            out.sym_mul(&SymTensor::from_vector(v))
        };
        let args = vec![b.clone(); n + 1];
        prop_assert_eq!(polarize(&args, map), map(&b));
    }

    #[test]
    fn monomial_polarization_matches_generic(b1 in vec3(), exps in proptest::collection::vec(0usize..=2, 3)) {
        let m = MultiIndex::from_exponents(&exps);
        let f = |v: &[Scalar]| {
            let mut t = SymTensor::power(v, m.weight());
            t.add_scaled(&frac(1, 3), &SymTensor::power(&b1, m.weight()));
            t
        };
        let args: Vec<Vec<Scalar>> = m.slots().iter().map(|&s| {
            let mut e = vec![Scalar::zero(); 3];
            e[s] = Scalar::one();
            e
        }).collect();
        prop_assert_eq!(polarize_monomial(&m, 3, f), polarize(&args, f));
    }

    #[test]
    fn deconcatenation_is_coassociative(exps in proptest::collection::vec(0usize..=2, 3)) {
        let m = MultiIndex::from_exponents(&exps);
        // (Δ⊗id)Δ and (id⊗Δ)Δ as sums over ordered triples
        let mut left = std::collections::BTreeMap::new();
        let mut right = std::collections::BTreeMap::new();
        for (a, rest, c1) in m.splits() {
            for (b, c, c2) in rest.splits() {
                *left.entry((a.clone(), b, c)).or_insert_with(BigInt::zero) += &c1 * &c2;
            }
        }
        for (ab, c, c1) in m.splits() {
            for (a, b, c2) in ab.splits() {
                *right.entry((a, b, c.clone())).or_insert_with(BigInt::zero) += &c1 * &c2;
            }
        }
        prop_assert_eq!(left, right);
    }
}

#[test]
fn factorial_matches_product() {
    assert_eq!(factorial(5), BigInt::from(120));
}
