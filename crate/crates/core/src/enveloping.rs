//! PBW normal forms in U(g) and the quotient U(g)/U(g)h.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::One;

use crate::error::Error;
use crate::exact::{big, factorial, space, Combination, MultiIndex, Scalar, TensorPair};
use crate::lie_pair::LiePair;

/// Element of U(g) in the PBW basis (monomials are weakly increasing words).
pub type UEElt = Combination<space::Enveloping>;
/// Element of U(g)/U(g)h, spanned by monomials in the complement slots.
pub type QuotElt = Combination<space::Quotient>;

/// Rewriting engine for U(g) with a memo of normal forms per word.
/// The cache only ever stores the value a word rewrites to, so sharing it
/// between threads is unobservable.
#[derive(Debug)]
pub struct Envelope {
    pair: LiePair,
    cache: RwLock<HashMap<Vec<usize>, UEElt>>,
}

impl Clone for Envelope {
    fn clone(&self) -> Self {
        Envelope::new(self.pair.clone())
    }
}

impl Envelope {
    pub fn new(pair: LiePair) -> Self {
        Envelope { pair, cache: RwLock::new(HashMap::new()) }
    }

    pub fn pair(&self) -> &LiePair {
        &self.pair
    }

    /// Rewrites `word` by replacing the leftmost out-of-order pair
    /// `e_j e_i` (j > i) with `e_i e_j + [e_j, e_i]` until sorted.
    pub fn normal_form(&self, word: &[usize]) -> UEElt {
        let Some(pos) = word.windows(2).position(|w| w[0] > w[1]) else {
            return UEElt::monomial(MultiIndex::new(word.to_vec()), Scalar::one());
        };
        if let Some(hit) = self.cache.read().unwrap().get(word) {
            return hit.clone();
        }
        let mut swapped = word.to_vec();
        swapped.swap(pos, pos + 1);
        let mut out = self.normal_form(&swapped);
        let (j, i) = (word[pos], word[pos + 1]);
        for (k, c) in self.pair.bracket(j, i) {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..pos]);
            shorter.push(*k);
            shorter.extend_from_slice(&word[pos + 2..]);
            out.add_scaled(c, &self.normal_form(&shorter));
        }
        self.cache.write().unwrap().insert(word.to_vec(), out.clone());
        out
    }

    /// Normal form using a caller-chosen out-of-order position at each step
    /// (no memo); any choice gives the same result.
    pub fn normal_form_by(&self, word: &[usize], choose: &mut dyn FnMut(&[usize]) -> usize) -> UEElt {
        let bad: Vec<usize> = (0..word.len().saturating_sub(1)).filter(|&p| word[p] > word[p + 1]).collect();
        if bad.is_empty() {
            return UEElt::monomial(MultiIndex::new(word.to_vec()), Scalar::one());
        }
        let pos = bad[choose(&bad) % bad.len()];
        let mut swapped = word.to_vec();
        swapped.swap(pos, pos + 1);
        let mut out = self.normal_form_by(&swapped, choose);
        for (k, c) in self.pair.bracket(word[pos], word[pos + 1]) {
            let mut shorter = word[..pos].to_vec();
            shorter.push(*k);
            shorter.extend_from_slice(&word[pos + 2..]);
            out.add_scaled(c, &self.normal_form_by(&shorter, choose));
        }
        out
    }

    pub fn word(&self, word: &[usize], coeff: &Scalar) -> UEElt {
        self.normal_form(word).scaled(coeff)
    }

    pub fn multiply(&self, u: &UEElt, v: &UEElt) -> UEElt {
        let mut out = UEElt::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                let mut w = a.slots().to_vec();
                w.extend_from_slice(b.slots());
                out.add_scaled(&(x * y), &self.normal_form(&w));
            }
        }
        out
    }

    /// `e_l · u`.
    pub fn left_mul_generator(&self, l: usize, u: &UEElt) -> UEElt {
        let mut out = UEElt::zero();
        for (a, x) in u.terms() {
            let mut w = Vec::with_capacity(a.weight() + 1);
            w.push(l);
            w.extend_from_slice(a.slots());
            out.add_scaled(x, &self.normal_form(&w));
        }
        out
    }

    /// Drops monomials containing an h slot (they lie in U(g)h).
    pub fn reduce_mod_ideal(&self, u: &UEElt) -> QuotElt {
        let q = self.pair.quotient_dim();
        u.filter(|m| m.max_slot().is_none_or(|s| s < q)).cast()
    }

    pub fn lift(&self, u: &QuotElt) -> UEElt {
        u.clone().cast()
    }

    /// `e_a · u` in the quotient, for `a` an h slot.
    pub fn left_action(&self, a: usize, u: &QuotElt) -> Result<QuotElt, Error> {
        if !self.pair.is_sub_slot(a) {
            return Err(Error::Contract(format!("slot {} is not in the subalgebra", a + 1)));
        }
        Ok(self.quot_left_mul(a, u))
    }

    /// `e_l · u` in the quotient for any slot `l`.
    pub fn quot_left_mul(&self, l: usize, u: &QuotElt) -> QuotElt {
        self.reduce_mod_ideal(&self.left_mul_generator(l, &self.lift(u)))
    }

    /// `(1/n!) Σ_σ e_{s_σ(1)} ⋯ e_{s_σ(n)}` over the slots of `m`.
    pub fn symmetrize(&self, m: &MultiIndex) -> UEElt {
        let n = m.weight();
        let mut words = Vec::new();
        distinct_permutations(m.slots(), &mut Vec::new(), &mut vec![false; n], &mut words);
        let mult = big(&m.factorial()) / big(&factorial(n));
        let mut out = UEElt::zero();
        for w in words {
            out.add_scaled(&mult, &self.normal_form(&w));
        }
        out
    }
}

fn distinct_permutations(items: &[usize], cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == items.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..items.len() {
        if used[i] || (i > 0 && items[i] == items[i - 1] && !used[i - 1]) {
            continue;
        }
        used[i] = true;
        cur.push(items[i]);
        distinct_permutations(items, cur, used, out);
        cur.pop();
        used[i] = false;
    }
}

/// Coproduct on PBW monomials: sub-words of a sorted word stay sorted, so
/// the shuffle expansion is already in normal form.
pub fn comultiply(u: &UEElt) -> TensorPair {
    u.deconcatenate()
}

pub fn quot_comultiply(u: &QuotElt) -> TensorPair {
    u.deconcatenate()
}

/// `ε`: the constant term.
pub fn counit<S>(u: &Combination<S>) -> Scalar {
    u.coeff(&MultiIndex::one())
}
