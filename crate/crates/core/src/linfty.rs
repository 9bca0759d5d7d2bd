//! Multibrackets λ_k on Λ•h* ⊗ g/h and the generalized Jacobi identities.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cochain::{ce_differential, CECochain};
use crate::error::Error;
use crate::exact::{int, sign_scalar, ExtIndex, MultiIndex, Scalar};
use crate::exec::Execution;
use crate::kapranov::HvfCoefficients;
use crate::lie_pair::LiePair;

/// Sparse sum of `ν^I ⊗ b_j`; the degree of a term is `|I|`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedElt {
    terms: BTreeMap<(ExtIndex, usize), Scalar>,
}

impl GradedElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(ext: ExtIndex, j: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(ext, j, Scalar::from_integer(1.into()));
        out
    }

    pub fn add_term(&mut self, ext: ExtIndex, j: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((ext.clone(), j)).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(ext, j));
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &GradedElt) {
        for ((e, j), x) in &other.terms {
            self.add_term(e.clone(), *j, c * x);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> GradedElt {
        let mut out = GradedElt::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(ExtIndex, usize), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if homogeneous (zero counts as degree 0).
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|(e, _)| e.degree());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// `ξ ∧ self` for a basis form ξ.
    pub fn wedge_left(&self, xi: &ExtIndex) -> GradedElt {
        let mut out = GradedElt::zero();
        for ((e, j), c) in &self.terms {
            if let Some((s, w)) = xi.wedge(e) {
                out.add_term(w, *j, c * int(s as i64));
            }
        }
        out
    }

    pub fn to_cochain(&self) -> CECochain {
        let mut c = CECochain::zero();
        for ((e, j), x) in &self.terms {
            c.add_term(e.clone(), MultiIndex::one(), *j, x.clone());
        }
        c
    }

    pub fn from_cochain(c: &CECochain) -> GradedElt {
        let mut out = GradedElt::zero();
        for ((e, m, j), x) in c.terms() {
            assert!(m.is_one(), "constant coefficients expected");
            out.add_term(e.clone(), *j, x.clone());
        }
        out
    }
}

/// Sign of `x_1 ⋯ x_n ↦ x_{σ(1)} ⋯ x_{σ(n)}` in a graded-commutative
/// algebra with the given degrees.
pub fn koszul_sign(perm: &[usize], degrees: &[usize]) -> i32 {
    assert_eq!(perm.len(), degrees.len());
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && degrees[perm[i]] % 2 == 1 && degrees[perm[j]] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// The brackets of the L∞[1] structure determined by a Lie pair and its R_k.
#[derive(Clone, Debug)]
pub struct LInfty<'a> {
    pair: &'a LiePair,
    hvf: &'a HvfCoefficients,
}

impl<'a> LInfty<'a> {
    pub fn new(pair: &'a LiePair, hvf: &'a HvfCoefficients) -> Self {
        LInfty { pair, hvf }
    }

    /// `λ_1 = d`; for `k ≥ 2`,
    /// `λ_k(ξ_1⊗e_1, …, ξ_k⊗e_k) = (−1)^{k+Σ|ξ_i|} ξ_1∧⋯∧ξ_k ∧ R_k(e_1, …, e_k)`,
    /// which is the derived bracket `[[…[D, X_1], …], X_k]` at the zero section.
    /// Without the `(−1)^k` the arity-4 identities fail once R_3 ≠ 0.
    pub fn lambda(&self, args: &[GradedElt]) -> Result<GradedElt, Error> {
        let k = args.len();
        if k == 0 {
            return Err(Error::Contract("λ_0 is not defined".into()));
        }
        if k == 1 {
            return Ok(GradedElt::from_cochain(&ce_differential(self.pair, &args[0].to_cochain())));
        }
        if k > self.hvf.max_weight() {
            return Err(Error::Contract(format!("λ_{k} needs R_{k}, truncated at {}", self.hvf.max_weight())));
        }
        let rk = self.hvf.get(k);
        let q = self.pair.quotient_dim();
        let mut out = GradedElt::zero();
        let lists: Vec<Vec<(&(ExtIndex, usize), &Scalar)>> = args.iter().map(|a| a.terms().collect()).collect();
        let mut idx = vec![0usize; k];
        if lists.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        loop {
            let mut coef = int(1);
            let mut xi = ExtIndex::empty();
            let mut slots = Vec::with_capacity(k);
            let mut total_deg = 0;
            let mut alive = true;
            for (list, &i) in lists.iter().zip(&idx) {
                let ((e, j), c) = list[i];
                coef *= c;
                total_deg += e.degree();
                slots.push(*j);
                match xi.wedge(e) {
                    Some((s, w)) => {
                        xi = w;
                        coef *= int(s as i64);
                    }
                    None => alive = false,
                }
            }
            if alive {
                coef *= sign_scalar(total_deg + k);
                let mono = MultiIndex::new(slots);
                for a in self.pair.sub_slots() {
                    let Some((s, w)) = xi.wedge(&ExtIndex::single(a)) else { continue };
                    let val = rk.evaluate(&ExtIndex::single(a), &mono, q);
                    for (j, v) in val.into_iter().enumerate() {
                        out.add_term(w.clone(), j, &coef * int(s as i64) * v);
                    }
                }
            }
            // odometer
            let mut p = 0;
            loop {
                if p == k {
                    return Ok(out);
                }
                idx[p] += 1;
                if idx[p] < lists[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    /// `Σ_{i=1}^{n} Σ_{σ ∈ Sh(i, n−i)} ε(σ) λ_{n−i+1}(λ_i(x_σ(1..i)), x_σ(i+1..n))`
    /// for homogeneous arguments.
    pub fn jacobiator(&self, args: &[GradedElt]) -> Result<GradedElt, Error> {
        let n = args.len();
        let degrees: Vec<usize> = args
            .iter()
            .map(|a| a.degree().ok_or_else(|| Error::Contract("inhomogeneous argument".into())))
            .collect::<Result<_, _>>()?;
        let mut out = GradedElt::zero();
        for i in 1..=n {
            for inner in subsets(n, i) {
                let outer: Vec<usize> = (0..n).filter(|t| !inner.contains(t)).collect();
                let mut perm = inner.clone();
                perm.extend_from_slice(&outer);
                let eps = koszul_sign(&perm, &degrees);
                let inner_args: Vec<GradedElt> = inner.iter().map(|&t| args[t].clone()).collect();
                let first = self.lambda(&inner_args)?;
                if first.is_zero() {
                    continue;
                }
                let mut outer_args = vec![first];
                outer_args.extend(outer.iter().map(|&t| args[t].clone()));
                let v = self.lambda(&outer_args)?;
                out.add_scaled(&int(eps as i64), &v);
            }
        }
        Ok(out)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    ExtIndex::all_of_degree(k, 0..n).into_iter().map(|e| e.slots().to_vec()).collect()
}

/// Basis elements `ν^I ⊗ b_j` of the graded space.
pub fn graded_basis(pair: &LiePair) -> Vec<(ExtIndex, usize)> {
    let mut out = Vec::new();
    for p in 0..=pair.sub_dim() {
        for e in ExtIndex::all_of_degree(p, pair.sub_slots()) {
            for j in 0..pair.quotient_dim() {
                out.push((e.clone(), j));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    /// Number of argument multisets checked per arity.
    pub checked: BTreeMap<usize, usize>,
    /// First failing argument tuple per arity, as basis indices.
    pub failures: BTreeMap<usize, Vec<(ExtIndex, usize)>>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generalized Jacobi identities for arities `1..=n_max` on all multisets
/// of basis elements.
pub fn jacobi_check(pair: &LiePair, hvf: &HvfCoefficients, n_max: usize, exec: Execution) -> Result<JacobiReport, Error> {
    if n_max > hvf.max_weight().max(1) {
        return Err(Error::Contract(format!("arity {n_max} exceeds truncation {}", hvf.max_weight())));
    }
    let l = LInfty::new(pair, hvf);
    let basis = graded_basis(pair);
    let mut report = JacobiReport { checked: BTreeMap::new(), failures: BTreeMap::new() };
    for n in 1..=n_max {
        let tuples: Vec<Vec<usize>> = multisets(basis.len(), n);
        let results = exec.map(&tuples, |t| {
            let args: Vec<GradedElt> = t.iter().map(|&i| GradedElt::basis(basis[i].0.clone(), basis[i].1)).collect();
            l.jacobiator(&args).map(|v| v.is_zero())
        });
        report.checked.insert(n, tuples.len());
        for (t, r) in tuples.iter().zip(results) {
            if !r? {
                report.failures.insert(n, t.iter().map(|&i| basis[i].clone()).collect());
                break;
            }
        }
    }
    Ok(report)
}

fn multisets(size: usize, k: usize) -> Vec<Vec<usize>> {
    MultiIndex::all_of_weight(k, size).into_iter().map(|m| m.slots().to_vec()).collect()
}
