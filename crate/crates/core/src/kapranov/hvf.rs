//! Coefficients R_k of the homological vector field, the Maurer–Cartan
//! residual, the Atiyah class decision and the linearizability checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cochain::{ce_differential, congo_bracket, CECochain, CochainKey};
use crate::enveloping::QuotElt;
use crate::error::Error;
use crate::exact::{frac, int, ExtIndex, MultiIndex, Scalar, SymTensor};
use crate::exec::Execution;
use crate::kapranov::theta::ThetaTables;
use crate::lie_pair::{alpha_map, atiyah_cocycle, curvature_vec, torsion_beta, unit, Connection, LiePair};
use crate::linalg::{Inconsistency, Matrix};
use crate::pbw::PbwContext;

/// `R_k` for `2 ≤ k ≤ max_weight`, each a (1,k)-cochain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HvfCoefficients {
    max_weight: usize,
    rk: BTreeMap<usize, CECochain>,
}

impl HvfCoefficients {
    pub fn new(max_weight: usize, rk: BTreeMap<usize, CECochain>) -> Self {
        HvfCoefficients { max_weight, rk }
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn get(&self, k: usize) -> CECochain {
        self.rk.get(&k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &CECochain)> {
        self.rk.iter()
    }

    pub fn set(&mut self, k: usize, value: CECochain) {
        self.rk.insert(k, value);
    }

    /// `Σ_k R_k`.
    pub fn total(&self) -> CECochain {
        let mut out = CECochain::zero();
        for c in self.rk.values() {
            out.add_assign(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rk.values().all(CECochain::is_zero)
    }
}

/// `R_k(a; b^β) = −pr₁ R(a; b^β)` read off recursion tables.
pub fn hvf_from_tables(pair: &LiePair, tables: &ThetaTables, max_weight: usize) -> HvfCoefficients {
    let q = pair.quotient_dim();
    let mut rk = BTreeMap::new();
    for k in 2..=max_weight {
        let mut c = CECochain::zero();
        for a in pair.sub_slots() {
            for m in MultiIndex::all_of_weight(k, q) {
                let lin = tables.r_slot(a, &m).linear_part(q);
                let value: Vec<Scalar> = lin.into_iter().map(|x| -x).collect();
                c.add_value(ExtIndex::single(a), &m, &value);
            }
        }
        rk.insert(k, c);
    }
    HvfCoefficients { max_weight, rk }
}

pub fn hvf_coefficients(ctx: &PbwContext, max_weight: usize) -> HvfCoefficients {
    let tables = ThetaTables::build(ctx.pair(), ctx.conn(), max_weight, ctx.execution());
    hvf_from_tables(ctx.pair(), &tables, max_weight)
}

/// Residual of `dℛ + ½[ℛ, ℛ]` split by polynomial weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub max_weight: usize,
    /// Only weights `2..=max_weight`, which receive every contribution.
    pub residual: BTreeMap<usize, CECochain>,
}

impl McReport {
    pub fn passed(&self) -> bool {
        self.residual.values().all(CECochain::is_zero)
    }
}

pub fn mc_residual(pair: &LiePair, hvf: &HvfCoefficients) -> McReport {
    let n = hvf.max_weight();
    let total = hvf.total();
    let mut res = ce_differential(pair, &total);
    res.add_scaled(&frac(1, 2), &congo_bracket(&total, &total));
    let residual = (2..=n).map(|w| (w, res.weight_component(w))).collect();
    McReport { max_weight: n, residual }
}

pub fn mc_check(ctx: &PbwContext, max_weight: usize) -> McReport {
    mc_residual(ctx.pair(), &hvf_coefficients(ctx, max_weight))
}

/// Certificate that a (1,2)-cochain is not a coboundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryObstruction {
    /// Linear functional on (1,2)-cochains killing all coboundaries.
    pub functional: CECochain,
    /// Its value on the target, nonzero.
    pub pairing: Scalar,
    pub rank: usize,
    pub augmented_rank: usize,
    /// First entry on which both the functional and the target are nonzero.
    pub slot: Option<CochainKey>,
}

fn keys(p: usize, k: usize, pair: &LiePair) -> Vec<CochainKey> {
    let q = pair.quotient_dim();
    let mut out = Vec::new();
    for e in ExtIndex::all_of_degree(p, pair.sub_slots()) {
        for m in MultiIndex::all_of_weight(k, q) {
            for j in 0..q {
                out.push((e.clone(), m.clone(), j));
            }
        }
    }
    out
}

/// Solves `d φ = target` for a (0,2)-cochain φ.
pub fn solve_coboundary(pair: &LiePair, target: &CECochain) -> Result<CECochain, CoboundaryObstruction> {
    let unknowns = keys(0, 2, pair);
    let eqs = keys(1, 2, pair);
    let mut a = Matrix::zeros(eqs.len(), unknowns.len());
    for (col, (e, m, j)) in unknowns.iter().enumerate() {
        let mut basis = CECochain::zero();
        basis.add_term(e.clone(), m.clone(), *j, Scalar::one());
        let d = ce_differential(pair, &basis);
        for (row, key) in eqs.iter().enumerate() {
            a.set(row, col, d.coeff(&key.0, &key.1, key.2));
        }
    }
    let b: Vec<Scalar> = eqs.iter().map(|(e, m, j)| target.coeff(e, m, *j)).collect();
    match a.solve(&b) {
        Ok(x) => {
            let mut phi = CECochain::zero();
            for ((e, m, j), v) in unknowns.into_iter().zip(x) {
                phi.add_term(e, m, j, v);
            }
            Ok(phi)
        }
        Err(Inconsistency { left_null, pairing, rank, augmented_rank }) => {
            let mut functional = CECochain::zero();
            let mut slot = None;
            for ((e, m, j), (y, t)) in eqs.into_iter().zip(left_null.iter().zip(&b)) {
                if slot.is_none() && !y.is_zero() && !t.is_zero() {
                    slot = Some((e.clone(), m.clone(), j));
                }
                functional.add_term(e, m, j, y.clone());
            }
            Err(CoboundaryObstruction { functional, pairing, rank, augmented_rank, slot })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtiyahDecision {
    pub vanishes: bool,
    /// φ with `dφ = Z` when the class vanishes.
    pub potential: Option<CECochain>,
    pub obstruction: Option<CoboundaryObstruction>,
}

pub fn atiyah_class_vanishes(pair: &LiePair, conn: &Connection) -> AtiyahDecision {
    match solve_coboundary(pair, &atiyah_cocycle(pair, conn)) {
        Ok(phi) => AtiyahDecision { vanishes: true, potential: Some(phi), obstruction: None },
        Err(w) => AtiyahDecision { vanishes: false, potential: None, obstruction: Some(w) },
    }
}

/// A connection with the same Bott part whose Atiyah cocycle is zero, if one
/// exists. The cocycle is affine in the complement rows, so this is a
/// linear solve.
pub fn find_compatible_connection(pair: &LiePair, conn: &Connection) -> Option<Connection> {
    let q = pair.quotient_dim();
    let base_rows: Vec<Vec<Vec<Scalar>>> = conn.gamma()[..q].to_vec();
    let z0 = atiyah_cocycle(pair, conn);
    let eqs = keys(1, 2, pair);
    let vars: Vec<(usize, usize, usize)> =
        (0..q).flat_map(|l| (0..q).flat_map(move |j| (0..q).map(move |k| (l, j, k)))).collect();
    let mut a = Matrix::zeros(eqs.len(), vars.len());
    for (col, &(l, j, k)) in vars.iter().enumerate() {
        let mut rows = base_rows.clone();
        rows[l][j][k] += Scalar::one();
        let moved = Connection::with_complement_rows(pair, rows).expect("Bott rows untouched");
        let dz = atiyah_cocycle(pair, &moved).sub(&z0);
        for (row, key) in eqs.iter().enumerate() {
            a.set(row, col, dz.coeff(&key.0, &key.1, key.2));
        }
    }
    let b: Vec<Scalar> = eqs.iter().map(|(e, m, j)| -z0.coeff(e, m, *j)).collect();
    let x = a.solve(&b).ok()?;
    let mut rows = base_rows;
    for (&(l, j, k), v) in vars.iter().zip(x) {
        rows[l][j][k] += v;
    }
    let found = Connection::with_complement_rows(pair, rows).ok()?;
    debug_assert!(atiyah_cocycle(pair, &found).is_zero());
    Some(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningFailure {
    pub slot: usize,
    pub monomial: MultiIndex,
    /// `e_a · pbw(s)` in the quotient.
    pub left_action: QuotElt,
    /// `pbw(∇_a s)`.
    pub transported: QuotElt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningReport {
    pub max_weight: usize,
    pub cocycle_zero: bool,
    pub intertwines: bool,
    pub first_failure: Option<IntertwiningFailure>,
}

impl IntertwiningReport {
    /// The cocycle vanishes exactly when pbw intertwines the h-actions.
    pub fn consistent(&self) -> bool {
        self.cocycle_zero == self.intertwines
    }
}

pub fn horse_check(ctx: &PbwContext, max_weight: usize) -> IntertwiningReport {
    let pair = ctx.pair();
    let q = pair.quotient_dim();
    ctx.precompute(max_weight);
    let mut jobs = Vec::new();
    for m in MultiIndex::all_up_to_weight(max_weight, q) {
        for a in pair.sub_slots() {
            jobs.push((a, m.clone()));
        }
    }
    let results = ctx.execution().map(&jobs, |(a, m)| {
        let s = SymTensor::monomial(m.clone(), Scalar::one());
        let left = ctx.envelope().left_action(*a, &ctx.pbw_apply(&s)).expect("h slot");
        let right = ctx.pbw_apply(&ctx.conn().on_sym_slot(*a, &s));
        (left != right).then(|| IntertwiningFailure { slot: *a, monomial: m.clone(), left_action: left, transported: right })
    });
    let first_failure = results.into_iter().flatten().next();
    IntertwiningReport {
        max_weight,
        cocycle_zero: atiyah_cocycle(pair, ctx.conn()).is_zero(),
        intertwines: first_failure.is_none(),
        first_failure,
    }
}

/// Value of a (1,k)-cochain on `(a; s)` for a g-vector `a`.
pub fn evaluate_form(c: &CECochain, pair: &LiePair, a: &[Scalar], s: &SymTensor) -> Vec<Scalar> {
    let q = pair.quotient_dim();
    let mut out = vec![Scalar::zero(); q];
    for slot in pair.sub_slots() {
        if a[slot].is_zero() {
            continue;
        }
        for (m, x) in s.terms() {
            let v = c.evaluate(&ExtIndex::single(slot), m, q);
            for (o, y) in out.iter_mut().zip(v) {
                *o += &a[slot] * x * y;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatSplittingReport {
    pub max_weight: usize,
    /// `H = 0` on all monomials up to the weight.
    pub h_vanishes: bool,
    /// `(n, a, monomial)` where `R_{n+1} ≠ d R_n`.
    pub mismatches: Vec<(usize, usize, MultiIndex)>,
    pub checked: usize,
    pub hvf: HvfCoefficients,
}

impl FlatSplittingReport {
    pub fn passed(&self) -> bool {
        self.h_vanishes && self.mismatches.is_empty()
    }
}

/// Checks α = 0, β = 0 and flatness of ∇ on the complement.
pub fn flat_splitting_hypotheses(pair: &LiePair, conn: &Connection) -> Result<(), Error> {
    let q = pair.quotient_dim();
    if alpha_map(pair).iter().flatten().flatten().any(|x| !x.is_zero()) {
        return Err(Error::HypothesisViolated { which: "alpha: the complement is not a subalgebra".into() });
    }
    if torsion_beta(pair, conn).iter().flatten().flatten().any(|x| !x.is_zero()) {
        return Err(Error::HypothesisViolated { which: "beta: the connection has torsion on the complement".into() });
    }
    for i in 0..q {
        for j in 0..q {
            for k in 0..q {
                let r = curvature_vec(pair, conn, &unit(pair.dim(), i), &unit(pair.dim(), j), &unit(q, k));
                if r.iter().any(|x| !x.is_zero()) {
                    return Err(Error::HypothesisViolated { which: "flatness: curvature on the complement".into() });
                }
            }
        }
    }
    Ok(())
}

/// Symmetrized covariant derivative of a (1,n)-cochain along the complement,
/// evaluated on the monomial `b^m` of weight `n+1`:
/// `1/(n+1) Σ_t [∇_{b_t}(R(a; rest)) − R(p[jb_t, a]; rest) − R(a; ∇_{jb_t} rest)]`.
pub fn covariant_step(pair: &LiePair, conn: &Connection, r: &CECochain, a: usize, m: &MultiIndex) -> Vec<Scalar> {
    let q = pair.quotient_dim();
    let av = unit(pair.dim(), a);
    let mut out = vec![Scalar::zero(); q];
    for (s, e) in m.exponents() {
        let rest = SymTensor::monomial(m.without(s).unwrap(), Scalar::one());
        let jb = unit(pair.dim(), s);
        let val = evaluate_form(r, pair, &av, &rest);
        let mut term = conn.nabla_vec(&jb, &val);
        let moved = pair.sub_part(&pair.bracket_vec(&jb, &av));
        for (t, x) in term.iter_mut().zip(evaluate_form(r, pair, &moved, &rest)) {
            *t -= x;
        }
        for (t, x) in term.iter_mut().zip(evaluate_form(r, pair, &av, &conn.on_sym(&jb, &rest))) {
            *t -= x;
        }
        for (o, t) in out.iter_mut().zip(term) {
            *o += int(e as i64) * t;
        }
    }
    let scale = frac(1, m.weight() as i64);
    out.into_iter().map(|x| x * &scale).collect()
}

pub fn zebra_check(ctx: &PbwContext, max_weight: usize) -> Result<FlatSplittingReport, Error> {
    let (pair, conn) = (ctx.pair(), ctx.conn());
    flat_splitting_hypotheses(pair, conn)?;
    let q = pair.quotient_dim();
    let tables = ThetaTables::build(pair, conn, max_weight, ctx.execution());
    let h_vanishes = MultiIndex::all_up_to_weight(max_weight, q)
        .iter()
        .filter(|m| m.weight() > 0)
        .all(|m| (0..q).all(|c| tables.h_slot(c, m).is_zero()));
    let hvf = hvf_from_tables(pair, &tables, max_weight);
    let mut jobs = Vec::new();
    for n in 2..max_weight {
        for m in MultiIndex::all_of_weight(n + 1, q) {
            for a in pair.sub_slots() {
                jobs.push((n, a, m.clone()));
            }
        }
    }
    let ok = ctx.execution().map(&jobs, |(n, a, m)| {
        let lhs = hvf.get(n + 1).evaluate(&ExtIndex::single(*a), m, q);
        lhs == covariant_step(pair, conn, &hvf.get(*n), *a, m)
    });
    let mismatches = jobs.iter().zip(ok).filter(|(_, ok)| !ok).map(|(j, _)| j.clone()).collect();
    Ok(FlatSplittingReport { max_weight, h_vanishes, mismatches, checked: jobs.len(), hvf })
}

/// Runs the recursion tables with the given scheduling.
pub fn theta_tables(ctx: &PbwContext, max_weight: usize, exec: Execution) -> ThetaTables {
    ThetaTables::build(ctx.pair(), ctx.conn(), max_weight, exec)
}
