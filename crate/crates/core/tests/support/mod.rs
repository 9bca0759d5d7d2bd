//! Independent oracles shared by the integration tests.
//!
//! `SuperPoly` / `Der` model the algebra Λ(h*) ⊗ S((g/h)*) with odd
//! generators ν_a (global h slots) and even x_i (quotient slots), and
//! derivations of it given by their values on generators. Nothing here
//! reuses the library's cochain arithmetic.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use liepair::cochain::CECochain;
use liepair::enveloping::QuotElt;
use liepair::exact::{int, polarize_monomial, ExtIndex, MultiIndex, Scalar, SymTensor};
use liepair::kapranov::HvfCoefficients;
use liepair::lie_pair::LiePair;
use liepair::pbw::{quot_left_mul_vec, PbwContext};
use num_traits::{One, Zero};

pub type Key = (Vec<usize>, MultiIndex);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPoly(pub BTreeMap<Key, Scalar>);

impl SuperPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(nu: Vec<usize>, x: MultiIndex, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add(nu, x, c);
        p
    }

    pub fn nu(a: usize) -> Self {
        Self::term(vec![a], MultiIndex::one(), Scalar::one())
    }

    pub fn x(i: usize) -> Self {
        Self::term(vec![], MultiIndex::single(i), Scalar::one())
    }

    /// `nu` must be strictly increasing.
    pub fn add(&mut self, nu: Vec<usize>, x: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((nu.clone(), x.clone())).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&(nu, x));
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &SuperPoly) {
        for ((n, x), v) in &other.0 {
            self.add(n.clone(), x.clone(), c * v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for ((i, a), c) in &self.0 {
            for ((j, b), d) in &other.0 {
                if let Some((sign, merged)) = merge(i, j) {
                    out.add(merged, a.times(b), int(sign) * c * d);
                }
            }
        }
        out
    }

    /// Part of polynomial weight `w`.
    pub fn weight(&self, w: usize) -> SuperPoly {
        SuperPoly(self.0.iter().filter(|((_, x), _)| x.weight() == w).map(|(k, v)| (k.clone(), v.clone())).collect())
    }
}

/// Concatenate two increasing odd words and sort, with the sign.
fn merge(i: &[usize], j: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut inversions = 0;
    for a in i {
        for b in j {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    let mut all: Vec<usize> = i.iter().chain(j).copied().collect();
    all.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, all))
}

/// Derivation of degree `degree` given on generators.
#[derive(Clone, Debug, Default)]
pub struct Der {
    pub degree: usize,
    pub on_nu: BTreeMap<usize, SuperPoly>,
    pub on_x: BTreeMap<usize, SuperPoly>,
}

impl Der {
    pub fn apply(&self, f: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for ((nu, x), c) in &f.0 {
            let c = SuperPoly::term(vec![], MultiIndex::one(), c.clone());
            for (r, a) in nu.iter().enumerate() {
                let Some(img) = self.on_nu.get(a) else { continue };
                let head = SuperPoly::term(nu[..r].to_vec(), MultiIndex::one(), sgn(self.degree * r));
                let tail = SuperPoly::term(nu[r + 1..].to_vec(), x.clone(), Scalar::one());
                out.add_scaled(&Scalar::one(), &c.mul(&head).mul(img).mul(&tail));
            }
            for (s, e) in x.exponents() {
                let Some(img) = self.on_x.get(&s) else { continue };
                let head = SuperPoly::term(nu.clone(), MultiIndex::one(), sgn(self.degree * nu.len()) * int(e as i64));
                let rest = SuperPoly::term(vec![], x.without(s).unwrap(), Scalar::one());
                out.add_scaled(&Scalar::one(), &c.mul(&head).mul(img).mul(&rest));
            }
        }
        out
    }

    pub fn add(&mut self, other: &Der) {
        assert_eq!(self.degree % 2, other.degree % 2);
        for (k, v) in &other.on_nu {
            self.on_nu.entry(*k).or_default().add_scaled(&Scalar::one(), v);
        }
        for (k, v) in &other.on_x {
            self.on_x.entry(*k).or_default().add_scaled(&Scalar::one(), v);
        }
    }
}

fn sgn(k: usize) -> Scalar {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `[D1, D2] = D1 D2 − (−1)^{|D1||D2|} D2 D1`, on the given generators.
pub fn commutator(d1: &Der, d2: &Der, nus: &[usize], q: usize) -> Der {
    let eps = sgn(d1.degree * d2.degree);
    let on = |g: &SuperPoly| {
        let mut v = d1.apply(&d2.apply(g));
        v.add_scaled(&-eps.clone(), &d2.apply(&d1.apply(g)));
        v
    };
    let mut out = Der { degree: d1.degree + d2.degree, ..Der::default() };
    for &a in nus {
        out.on_nu.insert(a, on(&SuperPoly::nu(a)));
    }
    for i in 0..q {
        out.on_x.insert(i, on(&SuperPoly::x(i)));
    }
    out
}

/// The CE differential of h with coefficients in functions on g/h:
/// `ν_c ↦ −Σ_{a<b} c^c_{ab} ν_a ν_b`, `x_i ↦ −Σ_{k,t} c^i_{kt} ν_k x_t`.
pub fn ce_operator(pair: &LiePair) -> Der {
    let c = pair.structure();
    let q = pair.quotient_dim();
    let subs: Vec<usize> = pair.sub_slots().collect();
    let mut d = Der { degree: 1, ..Der::default() };
    for &cc in &subs {
        let mut img = SuperPoly::zero();
        for (ai, &a) in subs.iter().enumerate() {
            for &b in &subs[ai + 1..] {
                img.add(vec![a, b], MultiIndex::one(), -c[a][b][cc].clone());
            }
        }
        d.on_nu.insert(cc, img);
    }
    for i in 0..q {
        let mut img = SuperPoly::zero();
        for &k in &subs {
            for t in 0..q {
                img.add(vec![k], MultiIndex::single(t), -c[k][t][i].clone());
            }
        }
        d.on_x.insert(i, img);
    }
    d
}

/// `ν^I x^β ∂_j` terms of a homogeneous cochain as a vertical derivation.
pub fn cochain_der(c: &CECochain) -> Der {
    let mut d = Der::default();
    let mut degree = None;
    for ((e, m, j), v) in c.terms() {
        assert!(degree.is_none_or(|p| p == e.degree()), "inhomogeneous cochain");
        degree = Some(e.degree());
        d.on_x.entry(*j).or_default().add(e.slots().to_vec(), m.clone(), v.clone());
    }
    d.degree = degree.unwrap_or(0);
    d
}

/// Reads a vertical derivation (no ν component) back as a cochain.
pub fn der_cochain(d: &Der) -> CECochain {
    assert!(d.on_nu.values().all(SuperPoly::is_zero), "derivation moves ν");
    let mut out = CECochain::zero();
    for (j, p) in &d.on_x {
        for ((nu, x), v) in &p.0 {
            out.add_term(ExtIndex::new(nu.clone()).unwrap(), x.clone(), *j, v.clone());
        }
    }
    out
}

/// `D = d_CE + Σ R_k`.
pub fn total_operator(pair: &LiePair, hvf: &HvfCoefficients) -> Der {
    let mut d = ce_operator(pair);
    for (_, r) in hvf.iter() {
        if !r.is_zero() {
            d.add(&cochain_der(r));
        }
    }
    d
}

/// `[[…[D, X_1], …], X_k]` restricted to the zero section, for constant
/// vertical fields `X_i = ν^{I_i} ∂_{j_i}`.
pub fn derived_bracket(pair: &LiePair, hvf: &HvfCoefficients, args: &[(ExtIndex, usize)]) -> CECochain {
    let nus: Vec<usize> = pair.sub_slots().collect();
    let q = pair.quotient_dim();
    let mut acc = total_operator(pair, hvf);
    for (e, j) in args {
        let mut x = CECochain::zero();
        x.add_term(e.clone(), MultiIndex::one(), *j, Scalar::one());
        acc = commutator(&acc, &cochain_der(&x), &nus, q);
    }
    let mut out = CECochain::zero();
    for (j, p) in &acc.on_x {
        for ((nu, x), v) in &p.weight(0).0 {
            out.add_term(ExtIndex::new(nu.clone()).unwrap(), x.clone(), *j, v.clone());
        }
    }
    out
}

/// pbw on monomials up to `max_weight` from the power recursion
/// `pbw(b^{n+1}) = j(b)·pbw(b^n) − pbw(∇_{j(b)} b^n)` and polarization.
pub fn pbw_by_powers(ctx: &PbwContext, max_weight: usize) -> HashMap<MultiIndex, QuotElt> {
    let pair = ctx.pair();
    let q = pair.quotient_dim();
    let mut table: HashMap<MultiIndex, QuotElt> = HashMap::new();
    table.insert(MultiIndex::one(), QuotElt::one());
    let apply = |t: &HashMap<MultiIndex, QuotElt>, s: &SymTensor| {
        let mut out = QuotElt::zero();
        for (m, c) in s.terms() {
            out.add_scaled(c, &t[m]);
        }
        out
    };
    for w in 1..=max_weight {
        let mut fresh = Vec::new();
        for m in MultiIndex::all_of_weight(w, q) {
            let v = polarize_monomial(&m, q, |b| {
                let jb = pair.lift(b);
                let bn = SymTensor::power(b, w - 1);
                let mut out = quot_left_mul_vec(ctx.envelope(), &jb, &apply(&table, &bn));
                out.sub_assign(&apply(&table, &ctx.conn().on_sym(&jb, &bn)));
                out
            });
            fresh.push((m, v));
        }
        table.extend(fresh);
    }
    table
}

pub fn mono(v: &[usize]) -> MultiIndex {
    MultiIndex::new(v.to_vec())
}

pub fn vector(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

/// Random integer (p, k)-cochain with entries in `-2..=2`.
pub fn random_cochain(pair: &LiePair, p: usize, k: usize, rng: &mut impl rand::Rng) -> CECochain {
    let q = pair.quotient_dim();
    let mut c = CECochain::zero();
    for e in ExtIndex::all_of_degree(p, pair.sub_slots()) {
        for m in MultiIndex::all_of_weight(k, q) {
            for j in 0..q {
                c.add_term(e.clone(), m.clone(), j, int(rng.gen_range(-2..=2)));
            }
        }
    }
    c
}
