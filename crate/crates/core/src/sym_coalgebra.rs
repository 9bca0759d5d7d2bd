//! Coderivations of the symmetric coalgebra S(V) given by Taylor components.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;

use crate::exact::{big, int, MultiIndex, Scalar, SymTensor, TensorPair};
use crate::linalg::Matrix;

/// Coderivation of S(V), `dim V = dim`, determined by
/// `taylor[k]: S^k(V) → V` on monomials (missing entries are zero).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coderivation {
    dim: usize,
    taylor: BTreeMap<usize, BTreeMap<MultiIndex, Vec<Scalar>>>,
}

impl Coderivation {
    pub fn zero(dim: usize) -> Self {
        Coderivation { dim, taylor: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, m: MultiIndex, value: Vec<Scalar>) {
        assert_eq!(value.len(), self.dim);
        self.taylor.entry(m.weight()).or_default().insert(m, value);
    }

    pub fn component(&self, m: &MultiIndex) -> SymTensor {
        self.taylor
            .get(&m.weight())
            .and_then(|t| t.get(m))
            .map(|v| SymTensor::from_vector(v))
            .unwrap_or_default()
    }

    /// Random integer Taylor components up to `max_arity`; `taylor[0]` is
    /// zero unless `constant` is set, in which case it is nonzero.
    pub fn random(dim: usize, max_arity: usize, constant: bool, rng: &mut impl Rng) -> Self {
        let mut d = Coderivation::zero(dim);
        for k in 0..=max_arity {
            for m in MultiIndex::all_of_weight(k, dim) {
                let mut v: Vec<Scalar> = (0..dim).map(|_| int(rng.gen_range(-3..=3))).collect();
                if k == 0 {
                    if !constant {
                        continue;
                    }
                    if v.iter().all(Zero::is_zero) {
                        v[rng.gen_range(0..dim)] = int(1);
                    }
                }
                d.set(m, v);
            }
        }
        d
    }

    /// `δ(v_1⋯v_n) = Σ_{S} taylor[|S|](v_S) ⊙ v_{S^c}`.
    pub fn apply(&self, s: &SymTensor) -> SymTensor {
        let mut out = SymTensor::zero();
        for (m, c) in s.terms() {
            for (l, r, mult) in m.splits() {
                let t = self.component(&l);
                if t.is_zero() {
                    continue;
                }
                out.add_scaled(&(c * big(&mult)), &t.sym_mul(&SymTensor::monomial(r, int(1))));
            }
        }
        out
    }
}

/// `Δ∘δ = (δ⊗id + id⊗δ)∘Δ` on all monomials of weight `≤ max_weight`.
pub fn is_coderivation(map: impl Fn(&MultiIndex) -> SymTensor, dim: usize, max_weight: usize) -> bool {
    MultiIndex::all_up_to_weight(max_weight, dim).iter().all(|m| {
        let lhs = map(m).deconcatenate();
        let mut rhs = TensorPair::zero();
        for (l, r, mult) in m.splits() {
            let c = big(&mult);
            rhs.add_tensor(&c, &map(&l), &SymTensor::monomial(r.clone(), int(1)));
            rhs.add_tensor(&c, &SymTensor::monomial(l, int(1)), &map(&r));
        }
        lhs == rhs
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoderivationVerdict {
    pub filtration_preserved: bool,
    pub delta1_zero: bool,
    /// Primitives of weight `≤ N` are exactly S¹(V).
    pub primitives_are_linear: bool,
}

impl CoderivationVerdict {
    pub fn equivalent(&self) -> bool {
        self.filtration_preserved == self.delta1_zero
    }
}

pub fn shark_check(delta: &Coderivation, max_weight: usize) -> CoderivationVerdict {
    let dim = delta.dim();
    let filtration_preserved = MultiIndex::all_up_to_weight(max_weight, dim).iter().all(|m| {
        delta.apply(&SymTensor::monomial(m.clone(), int(1))).max_weight().is_none_or(|w| w <= m.weight())
    });
    let delta1_zero = delta.apply(&SymTensor::one()).is_zero();
    CoderivationVerdict { filtration_preserved, delta1_zero, primitives_are_linear: primitives_are_linear(dim, max_weight) }
}

/// Exact kernel of `Δ − (1⊗id + id⊗1)` on `S^{≤N}(V)` equals `S¹(V)`.
pub fn primitives_are_linear(dim: usize, max_weight: usize) -> bool {
    let basis = MultiIndex::all_up_to_weight(max_weight, dim);
    let mut rows: BTreeMap<(MultiIndex, MultiIndex), usize> = BTreeMap::new();
    let mut columns = Vec::new();
    for m in &basis {
        let x = SymTensor::monomial(m.clone(), int(1));
        let mut t = x.deconcatenate();
        let mut prim = TensorPair::zero();
        prim.add_tensor(&int(1), &SymTensor::one(), &x);
        prim.add_tensor(&int(1), &x, &SymTensor::one());
        t = t.sub(&prim);
        let col: Vec<((MultiIndex, MultiIndex), Scalar)> = t.terms().map(|(k, v)| (k.clone(), v.clone())).collect();
        for (k, _) in &col {
            let next = rows.len();
            rows.entry(k.clone()).or_insert(next);
        }
        columns.push(col);
    }
    let mut a = Matrix::zeros(rows.len(), basis.len());
    for (c, col) in columns.into_iter().enumerate() {
        for (k, v) in col {
            a.set(rows[&k], c, v);
        }
    }
    let kernel = a.kernel();
    kernel.len() == dim
        && kernel.iter().all(|v| v.iter().zip(&basis).all(|(x, m)| x.is_zero() || m.weight() == 1))
}

/// Checks, for an arbitrary endomorphism, that being a coderivation forces
/// its value on 1 into S¹(V).
pub fn constant_term_is_linear(map: impl Fn(&MultiIndex) -> SymTensor + Copy, dim: usize, max_weight: usize) -> bool {
    !is_coderivation(map, dim, max_weight) || map(&MultiIndex::one()).terms().all(|(m, _)| m.weight() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weight_two_expansion() {
        let mut d = Coderivation::zero(1);
        d.set(MultiIndex::one(), vec![int(5)]);
        d.set(MultiIndex::new(vec![0]), vec![int(2)]);
        d.set(MultiIndex::new(vec![0, 0]), vec![int(7)]);
        let v2 = SymTensor::monomial(MultiIndex::new(vec![0, 0]), int(1));
        let expect = SymTensor::from_terms([
            (MultiIndex::new(vec![0]), int(7)),
            (MultiIndex::new(vec![0, 0]), int(4)),
            (MultiIndex::new(vec![0, 0, 0]), int(5)),
        ]);
        assert_eq!(d.apply(&v2), expect);
    }

    #[test]
    fn random_coderivations_are_coderivations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in 1..=2 {
            let d = Coderivation::random(dim, 3, true, &mut rng);
            assert!(is_coderivation(|m| d.apply(&SymTensor::monomial(m.clone(), int(1))), dim, 4));
        }
    }
}
