//! Cochains Λ^p h* ⊗ S^k((g/h)*) ⊗ g/h, read as h*-form valued polynomial
//! vector fields on g/h, with the CE differential and the vector-field bracket.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{big, int, sign_scalar, ExtIndex, MultiIndex, Scalar};
use crate::lie_pair::LiePair;

/// Key: exterior monomial ν^I (h slots), polynomial monomial x^β
/// (quotient slots), output direction ∂_j. Values are polynomial
/// coefficients; the value on the symmetric monomial b^β is `coeff · β!`.
pub type CochainKey = (ExtIndex, MultiIndex, usize);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CECochain {
    entries: BTreeMap<CochainKey, Scalar>,
}

impl CECochain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, ext: ExtIndex, mono: MultiIndex, out: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry((ext, mono, out)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, ext: &ExtIndex, mono: &MultiIndex, out: usize) -> Scalar {
        self.entries.get(&(ext.clone(), mono.clone(), out)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CochainKey, &Scalar)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &CECochain) {
        if c.is_zero() {
            return;
        }
        for ((e, m, o), x) in &other.entries {
            self.add_term(e.clone(), m.clone(), *o, c * x);
        }
    }

    pub fn add_assign(&mut self, other: &CECochain) {
        self.add_scaled(&int(1), other);
    }

    pub fn sub(&self, other: &CECochain) -> CECochain {
        let mut out = self.clone();
        out.add_scaled(&int(-1), other);
        out
    }

    pub fn scaled(&self, c: &Scalar) -> CECochain {
        let mut out = CECochain::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn filter(&self, keep: impl Fn(&CochainKey) -> bool) -> CECochain {
        CECochain { entries: self.entries.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    /// Components of polynomial weight `k`.
    pub fn weight_component(&self, k: usize) -> CECochain {
        self.filter(|(_, m, _)| m.weight() == k)
    }

    /// Components of exterior degree `p`.
    pub fn degree_component(&self, p: usize) -> CECochain {
        self.filter(|(e, _, _)| e.degree() == p)
    }

    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.entries.keys().map(|(_, m, _)| m.weight()).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// Value on the symmetric monomial `b^mono` as a quotient vector.
    pub fn evaluate(&self, ext: &ExtIndex, mono: &MultiIndex, q: usize) -> Vec<Scalar> {
        let f = big(&mono.factorial());
        (0..q).map(|j| self.coeff(ext, mono, j) * &f).collect()
    }

    /// Stores a value on `b^mono` (inverse of [`evaluate`](Self::evaluate)).
    pub fn add_value(&mut self, ext: ExtIndex, mono: &MultiIndex, value: &[Scalar]) {
        let f = big(&mono.factorial());
        for (j, v) in value.iter().enumerate() {
            self.add_term(ext.clone(), mono.clone(), j, v / &f);
        }
    }
}

/// `dν_c = −Σ_{a<b} c^c_{ab} ν_a ∧ ν_b` on h, and the Bott action on
/// polynomial vector fields; `d(ν^I ⊗ Y) = dν^I ⊗ Y + (−1)^p ν^I ∧ ν_k ⊗ (e_k · Y)`.
pub fn ce_differential(pair: &LiePair, omega: &CECochain) -> CECochain {
    let q = pair.quotient_dim();
    let subs: Vec<usize> = pair.sub_slots().collect();
    let c = pair.structure();
    let mut out = CECochain::zero();
    for ((ext, mono, j), x) in omega.terms() {
        let p = ext.degree();
        // exterior part
        for (r, &ir) in ext.slots().iter().enumerate() {
            for (ai, &a) in subs.iter().enumerate() {
                for &b in &subs[ai + 1..] {
                    let cab = &c[a][b][ir];
                    if cab.is_zero() {
                        continue;
                    }
                    let mut word = ext.slots().to_vec();
                    word.splice(r..=r, [a, b]);
                    if let Some((s, sorted)) = ExtIndex::sort(word) {
                        let coef = -(x * cab) * int(s as i64) * sign_scalar(r);
                        out.add_term(sorted, mono.clone(), *j, coef);
                    }
                }
            }
        }
        // module part
        for &k in &subs {
            let Some((s, wedged)) = ext.wedge(&ExtIndex::single(k)) else { continue };
            let base = x * int(s as i64) * sign_scalar(p);
            // dual action on the polynomial: x_i ↦ −Σ_t c[k][t][i] x_t
            for (i, e) in mono.exponents() {
                let rest = mono.without(i).unwrap();
                for t in 0..q {
                    let g = &c[k][t][i];
                    if !g.is_zero() {
                        let coef = -(&base * g) * int(e as i64);
                        out.add_term(wedged.clone(), rest.with(t), *j, coef);
                    }
                }
            }
            // action on the output direction
            for t in 0..q {
                let g = &c[k][*j][t];
                if !g.is_zero() {
                    out.add_term(wedged.clone(), mono.clone(), t, &base * g);
                }
            }
        }
    }
    out
}

/// `[ν^I f ∂_i, ν^J g ∂_j] = ν^I∧ν^J (f ∂_i g ∂_j − g ∂_j f ∂_i)`.
pub fn congo_bracket(x: &CECochain, y: &CECochain) -> CECochain {
    let mut out = CECochain::zero();
    for ((e1, m1, j1), c1) in x.terms() {
        for ((e2, m2, j2), c2) in y.terms() {
            let Some((s, ext)) = e1.wedge(e2) else { continue };
            let base = c1 * c2 * int(s as i64);
            let a = m2.exponent(*j1);
            if a > 0 {
                let mono = m1.times(&m2.without(*j1).unwrap());
                out.add_term(ext.clone(), mono, *j2, &base * int(a as i64));
            }
            let b = m1.exponent(*j2);
            if b > 0 {
                let mono = m2.times(&m1.without(*j2).unwrap());
                out.add_term(ext, mono, *j1, -(&base * int(b as i64)));
            }
        }
    }
    out
}
