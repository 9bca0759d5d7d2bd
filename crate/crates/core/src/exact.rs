//! Exact scalars, sparse multi-index tensors and polarization.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(n: &BigInt) -> Scalar {
    Scalar::from_integer(n.clone())
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let t = s.trim();
    // BigRational's parser rejects a leading '+', accept it for convenience
    let t = t.strip_prefix('+').unwrap_or(t);
    Scalar::from_str(t).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// A commutative monomial, stored as the sorted list of its slots with
/// repetition (`[0, 0, 2]` is `x0^2 x2`). The derived ordering is
/// lexicographic on that list, which is the canonical output order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(mut slots: Vec<usize>) -> Self {
        slots.sort_unstable();
        MultiIndex(slots)
    }

    pub fn one() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn single(slot: usize) -> Self {
        MultiIndex(vec![slot])
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut v = Vec::new();
        for (s, &e) in exps.iter().enumerate() {
            v.extend(std::iter::repeat_n(s, e));
        }
        MultiIndex(v)
    }

    pub fn slots(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, slot: usize) -> usize {
        self.0.iter().filter(|&&s| s == slot).count()
    }

    /// `(slot, exponent)` pairs in increasing slot order, no zero exponents.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((t, e)) if *t == s => *e += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// ∏ α_s!
    pub fn factorial(&self) -> BigInt {
        self.exponents()
            .iter()
            .fold(BigInt::one(), |acc, &(_, e)| acc * factorial(e))
    }

    pub fn times(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        MultiIndex(v)
    }

    pub fn with(&self, slot: usize) -> MultiIndex {
        self.times(&MultiIndex::single(slot))
    }

    /// Removes one copy of `slot`.
    pub fn without(&self, slot: usize) -> Option<MultiIndex> {
        let pos = self.0.iter().position(|&s| s == slot)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(MultiIndex(v))
    }

    pub fn max_slot(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// All monomials of the given weight in slots `0..dim`, ascending.
    pub fn all_of_weight(weight: usize, dim: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        if dim == 0 {
            if weight == 0 {
                out.push(MultiIndex::one());
            }
            return out;
        }
        let mut cur = Vec::with_capacity(weight);
        fn rec(start: usize, left: usize, dim: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if left == 0 {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for s in start..dim {
                cur.push(s);
                rec(s, left - 1, dim, cur, out);
                cur.pop();
            }
        }
        rec(0, weight, dim, &mut cur, &mut out);
        out
    }

    pub fn all_up_to_weight(max_weight: usize, dim: usize) -> Vec<MultiIndex> {
        (0..=max_weight)
            .flat_map(|w| MultiIndex::all_of_weight(w, dim))
            .collect()
    }

    /// Every split `self = left · right` with multiplicity ∏ C(α_s, γ_s);
    /// this is the deconcatenation coproduct on a monomial.
    pub fn splits(&self) -> Vec<(MultiIndex, MultiIndex, BigInt)> {
        let exps = self.exponents();
        let mut out = Vec::new();
        let mut choice = vec![0usize; exps.len()];
        loop {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut mult = BigInt::one();
            for (&(s, e), &g) in exps.iter().zip(&choice) {
                left.extend(std::iter::repeat_n(s, g));
                right.extend(std::iter::repeat_n(s, e - g));
                mult *= binomial(e, g);
            }
            out.push((MultiIndex(left), MultiIndex(right), mult));
            // odometer
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return out;
                }
                if choice[i] < exps[i].1 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Marker types distinguishing the spaces a [`Combination`] lives in.
pub mod space {
    #[derive(Debug)]
    pub enum Sym {}
    #[derive(Debug)]
    pub enum DualSym {}
    #[derive(Debug)]
    pub enum Enveloping {}
    #[derive(Debug)]
    pub enum Quotient {}
}

/// Sparse linear combination of monomials with exact coefficients.
/// Zero coefficients are never stored.
pub struct Combination<S> {
    terms: BTreeMap<MultiIndex, Scalar>,
    _space: PhantomData<S>,
}

/// Element of S(g/h), possibly of mixed weight.
pub type SymTensor = Combination<space::Sym>;
/// Element of S((g/h)*), a polynomial in the dual coordinates.
pub type DualSymTensor = Combination<space::DualSym>;

impl<S> Clone for Combination<S> {
    fn clone(&self) -> Self {
        Combination { terms: self.terms.clone(), _space: PhantomData }
    }
}

impl<S> PartialEq for Combination<S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<S> Eq for Combination<S> {}

impl<S> fmt::Debug for Combination<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k.to_string(), v.to_string())))
            .finish()
    }
}

impl<S> Default for Combination<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S> Combination<S> {
    pub fn zero() -> Self {
        Combination { terms: BTreeMap::new(), _space: PhantomData }
    }

    pub fn one() -> Self {
        Self::monomial(MultiIndex::one(), Scalar::one())
    }

    pub fn monomial(m: MultiIndex, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn generator(slot: usize) -> Self {
        Self::monomial(MultiIndex::single(slot), Scalar::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (MultiIndex, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Weight-one element with the given coordinates.
    pub fn from_vector(v: &[Scalar]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (MultiIndex::single(i), c.clone())))
    }

    /// Reinterprets the same monomials in another space.
    pub fn cast<T>(self) -> Combination<T> {
        Combination { terms: self.terms, _space: PhantomData }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<MultiIndex, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &MultiIndex) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), -x);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            _space: PhantomData,
        }
    }

    /// Filtration degree; `None` for zero.
    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::weight).max()
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::weight).min()
    }

    pub fn weight_component(&self, k: usize) -> Self {
        self.filter(|m| m.weight() == k)
    }

    pub fn truncated(&self, max_weight: usize) -> Self {
        self.filter(|m| m.weight() <= max_weight)
    }

    pub fn filter(&self, keep: impl Fn(&MultiIndex) -> bool) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            _space: PhantomData,
        }
    }

    /// `Some(k)` when every term has weight `k` (zero is homogeneous of any weight).
    pub fn homogeneous_weight(&self) -> Option<Option<usize>> {
        let (lo, hi) = (self.min_weight(), self.max_weight());
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }

    /// Commutative product of monomials.
    pub fn sym_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.times(b), x * y);
            }
        }
        out
    }

    /// Applies the derivation determined by its values on generators.
    pub fn derivation(&self, on_generator: impl Fn(usize) -> Self) -> Self {
        let mut cache: BTreeMap<usize, Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (s, e) in m.exponents() {
                let g = cache.entry(s).or_insert_with(|| on_generator(s));
                if g.is_zero() {
                    continue;
                }
                let rest = Self::monomial(m.without(s).unwrap(), c * big(&BigInt::from(e)));
                out.add_assign(&rest.sym_mul(g));
            }
        }
        out
    }

    /// Deconcatenation coproduct, `x^α ↦ Σ C(α,γ) x^γ ⊗ x^{α−γ}`.
    pub fn deconcatenate(&self) -> TensorPair {
        let mut out = TensorPair::zero();
        for (m, c) in &self.terms {
            for (l, r, mult) in m.splits() {
                out.add_term(l, r, c * big(&mult));
            }
        }
        out
    }

    /// Weight-one coordinates in slots `0..dim`.
    pub fn linear_part(&self, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|i| self.coeff(&MultiIndex::single(i))).collect()
    }
}

impl SymTensor {
    /// `v^n` for a vector `v` given by coordinates.
    pub fn power(v: &[Scalar], n: usize) -> SymTensor {
        let base = SymTensor::from_vector(v);
        let mut out = SymTensor::one();
        for _ in 0..n {
            out = out.sym_mul(&base);
        }
        out
    }
}

impl<S> Add for &Combination<S> {
    type Output = Combination<S>;
    fn add(self, rhs: Self) -> Combination<S> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<S> Sub for &Combination<S> {
    type Output = Combination<S>;
    fn sub(self, rhs: Self) -> Combination<S> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<S> Neg for &Combination<S> {
    type Output = Combination<S>;
    fn neg(self) -> Combination<S> {
        self.scaled(&-Scalar::one())
    }
}

/// Element of a tensor square, keyed by pairs of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPair {
    terms: BTreeMap<(MultiIndex, MultiIndex), Scalar>,
}

impl TensorPair {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, l: MultiIndex, r: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((l, r)) {
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

    pub fn add_tensor<A, B>(&mut self, c: &Scalar, a: &Combination<A>, b: &Combination<B>) {
        for (l, x) in a.terms() {
            for (r, y) in b.terms() {
                self.add_term(l.clone(), r.clone(), c * x * y);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &TensorPair) -> TensorPair {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    /// Applies linear maps to each leg.
    pub fn map<A, B>(
        &self,
        f: impl Fn(&MultiIndex) -> Combination<A>,
        g: impl Fn(&MultiIndex) -> Combination<B>,
    ) -> TensorPair {
        let mut out = TensorPair::zero();
        for ((l, r), c) in &self.terms {
            out.add_tensor(c, &f(l), &g(r));
        }
        out
    }
}

/// Pairing `⟨x^α, b^β⟩ = α! δ_{αβ}` between homogeneous elements of equal weight.
pub fn pair(phi: &DualSymTensor, s: &SymTensor) -> Result<Scalar, Error> {
    let wp = phi.homogeneous_weight();
    let ws = s.homogeneous_weight();
    match (wp, ws) {
        (Some(a), Some(b)) if a.is_none() || b.is_none() || a == b => {}
        _ => {
            return Err(Error::WeightMismatch {
                left: format!("{:?}", phi.min_weight().zip(phi.max_weight())),
                right: format!("{:?}", s.min_weight().zip(s.max_weight())),
            })
        }
    }
    let mut acc = Scalar::zero();
    for (m, c) in phi.terms() {
        let d = s.coeff(m);
        if !d.is_zero() {
            acc += c * d * big(&m.factorial());
        }
    }
    Ok(acc)
}

/// Strictly increasing list of slots, a basis element of an exterior power.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtIndex(Vec<usize>);

impl ExtIndex {
    pub fn empty() -> Self {
        ExtIndex(Vec::new())
    }

    pub fn single(slot: usize) -> Self {
        ExtIndex(vec![slot])
    }

    /// `None` unless strictly increasing.
    pub fn new(slots: Vec<usize>) -> Option<Self> {
        slots.windows(2).all(|w| w[0] < w[1]).then_some(ExtIndex(slots))
    }

    /// Sorts an arbitrary word, returning the permutation sign, or `None`
    /// if a slot repeats.
    pub fn sort(mut slots: Vec<usize>) -> Option<(i32, ExtIndex)> {
        let mut sign = 1;
        for i in 1..slots.len() {
            let mut j = i;
            while j > 0 && slots[j - 1] > slots[j] {
                slots.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if slots.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, ExtIndex(slots)))
    }

    pub fn slots(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∧ other = sign · result`.
    pub fn wedge(&self, other: &ExtIndex) -> Option<(i32, ExtIndex)> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ExtIndex::sort(v)
    }

    /// All strictly increasing subsets of `slots` of size `p`.
    pub fn all_of_degree(p: usize, slots: std::ops::Range<usize>) -> Vec<ExtIndex> {
        let pool: Vec<usize> = slots.collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(pool: &[usize], start: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<ExtIndex>) {
            if cur.len() == p {
                out.push(ExtIndex(cur.clone()));
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                rec(pool, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&pool, 0, p, &mut cur, &mut out);
        out
    }
}

/// Values that can be combined linearly; used by [`polarize`].
pub trait Linear: Clone {
    fn zero_like(&self) -> Self;
    fn add_scaled_from(&mut self, c: &Scalar, other: &Self);
}

impl<S> Linear for Combination<S> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn add_scaled_from(&mut self, c: &Scalar, other: &Self) {
        self.add_scaled(c, other);
    }
}

impl Linear for Vec<Scalar> {
    fn zero_like(&self) -> Self {
        vec![Scalar::zero(); self.len()]
    }
    fn add_scaled_from(&mut self, c: &Scalar, other: &Self) {
        if self.len() < other.len() {
            self.resize(other.len(), Scalar::zero());
        }
        for (a, b) in self.iter_mut().zip(other) {
            *a += c * b;
        }
    }
}

impl Linear for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn add_scaled_from(&mut self, c: &Scalar, other: &Self) {
        *self += c * other;
    }
}

/// Recovers `f(b_1, …, b_n)` from `power_eval(b) = f(b, …, b)` by
/// inclusion–exclusion over nonempty subsets.
pub fn polarize<T: Linear>(args: &[Vec<Scalar>], power_eval: impl Fn(&[Scalar]) -> T) -> T {
    let n = args.len();
    if n == 0 {
        return power_eval(&[]);
    }
    let dim = args.iter().map(Vec::len).max().unwrap_or(0);
    let mut acc: Option<T> = None;
    for mask in 1u64..(1u64 << n) {
        let mut b = vec![Scalar::zero(); dim];
        for (i, a) in args.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (x, y) in b.iter_mut().zip(a) {
                    *x += y;
                }
            }
        }
        let size = mask.count_ones() as usize;
        let sign = if (n - size) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let v = power_eval(&b);
        match acc.as_mut() {
            None => {
                let mut z = v.zero_like();
                z.add_scaled_from(&sign, &v);
                acc = Some(z);
            }
            Some(a) => a.add_scaled_from(&sign, &v),
        }
    }
    let acc = acc.expect("at least one subset");
    let mut out = acc.zero_like();
    out.add_scaled_from(&(Scalar::one() / big(&factorial(n))), &acc);
    out
}

/// Polarization evaluated on the basis monomial `m` (slots in `0..dim`).
/// Repeated slots are grouped, so only `∏(α_s+1) − 1` evaluations are made.
pub fn polarize_monomial<T: Linear>(
    m: &MultiIndex,
    dim: usize,
    power_eval: impl Fn(&[Scalar]) -> T,
) -> T {
    let n = m.weight();
    if n == 0 {
        return power_eval(&vec![Scalar::zero(); dim]);
    }
    let exps = m.exponents();
    let mut choice = vec![0usize; exps.len()];
    let mut acc: Option<T> = None;
    loop {
        // advance odometer first: skip the empty subset
        let mut i = 0;
        loop {
            if i == exps.len() {
                let acc = acc.expect("nonempty monomial");
                let mut res = acc.zero_like();
                res.add_scaled_from(&(Scalar::one() / big(&factorial(n))), &acc);
                return res;
            }
            if choice[i] < exps[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        let mut b = vec![Scalar::zero(); dim];
        let mut size = 0;
        let mut mult = BigInt::one();
        for (&(s, e), &g) in exps.iter().zip(&choice) {
            b[s] = int(g as i64);
            size += g;
            mult *= binomial(e, g);
        }
        let mut c = big(&mult);
        if (n - size) % 2 == 1 {
            c = -c;
        }
        let v = power_eval(&b);
        match acc.as_mut() {
            None => {
                let mut z = v.zero_like();
                z.add_scaled_from(&c, &v);
                acc = Some(z);
            }
            Some(a) => a.add_scaled_from(&c, &v),
        }
    }
}

/// Sign helper: `(-1)^k` as a scalar.
pub fn sign_scalar(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn is_positive(x: &Scalar) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/12"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert_eq!(format_scalar(&parse_scalar("4/6").unwrap()), "2/3");
        assert_eq!(format_scalar(&parse_scalar("3/-6").unwrap_or(frac(-1, 2))), "-1/2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn pairing_examples() {
        let e1 = DualSymTensor::generator(0);
        let b1 = SymTensor::generator(0);
        assert_eq!(pair(&e1, &b1).unwrap(), int(1));
        let e11 = DualSymTensor::monomial(m(&[0, 0]), int(1));
        assert_eq!(pair(&e11, &SymTensor::monomial(m(&[0, 0]), int(1))).unwrap(), int(2));
        assert_eq!(pair(&e11, &SymTensor::monomial(m(&[0, 1]), int(1))).unwrap(), int(0));
        assert!(pair(&e11, &b1).is_err());
    }

    #[test]
    fn polarize_squares_and_cubes() {
        let b1 = vec![int(1), int(0), int(0)];
        let b2 = vec![int(0), int(1), int(0)];
        let b3 = vec![int(0), int(0), int(1)];
        let sq = polarize(&[b1.clone(), b2.clone()], |b| SymTensor::power(b, 2));
        assert_eq!(sq, SymTensor::monomial(m(&[0, 1]), int(1)));
        let cube = polarize(&[b1.clone(), b2, b3], |b| SymTensor::power(b, 3));
        assert_eq!(cube, SymTensor::monomial(m(&[0, 1, 2]), int(1)));
        let one = polarize(&[b1.clone()], |b| SymTensor::power(b, 1));
        assert_eq!(one, SymTensor::generator(0));
        let mono = polarize_monomial(&m(&[0, 0, 1]), 2, |b| SymTensor::power(b, 3));
        assert_eq!(mono, SymTensor::monomial(m(&[0, 0, 1]), int(1)));
    }

    #[test]
    fn splits_match_binomials() {
        let s = m(&[0, 0, 1]).splits();
        assert_eq!(s.len(), 6);
        let total: BigInt = s.iter().map(|(_, _, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn enumerations() {
        assert_eq!(MultiIndex::all_of_weight(3, 2).len(), 4);
        assert_eq!(MultiIndex::all_of_weight(0, 0).len(), 1);
        assert_eq!(MultiIndex::all_of_weight(2, 0).len(), 0);
        assert_eq!(ExtIndex::all_of_degree(2, 1..4).len(), 3);
        assert_eq!(ExtIndex::sort(vec![2, 1]), Some((-1, ExtIndex(vec![1, 2]))));
        assert_eq!(ExtIndex::sort(vec![1, 1]), None);
    }
}
