//! The PBW map S(g/h) → U(g)/U(g)h determined by a connection, its
//! inverse, and structural checks.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::enveloping::{quot_comultiply, Envelope, QuotElt, UEElt};
use crate::exact::{big, int, MultiIndex, Scalar, SymTensor, TensorPair};
use crate::exec::Execution;
use crate::lie_pair::{Connection, LiePair};

/// Pair, connection and a memo of PBW images of monomials.
#[derive(Debug)]
pub struct PbwContext {
    env: Envelope,
    conn: Connection,
    exec: Execution,
    memo: RwLock<HashMap<MultiIndex, QuotElt>>,
}

impl PbwContext {
    pub fn new(pair: LiePair, conn: Connection) -> Self {
        PbwContext { env: Envelope::new(pair), conn, exec: Execution::default(), memo: RwLock::new(HashMap::new()) }
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn pair(&self) -> &LiePair {
        self.env.pair()
    }

    pub fn conn(&self) -> &Connection {
        &self.conn
    }

    pub fn envelope(&self) -> &Envelope {
        &self.env
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    /// Fills the memo for all monomials up to `max_weight`, one weight at a
    /// time, evaluating monomials of equal weight independently.
    pub fn precompute(&self, max_weight: usize) {
        let q = self.pair().quotient_dim();
        for w in 0..=max_weight {
            let monos = MultiIndex::all_of_weight(w, q);
            self.exec.map(&monos, |m| self.pbw_monomial(m));
        }
    }

    /// `pbw(b_0 ⊙ ⋯ ⊙ b_n) = 1/(n+1) Σ_i [ j(b_i)·pbw(rest_i) − pbw(∇_{j(b_i)} rest_i) ]`.
    pub fn pbw_monomial(&self, m: &MultiIndex) -> QuotElt {
        if m.weight() <= 1 {
            return QuotElt::monomial(m.clone(), Scalar::one());
        }
        if let Some(hit) = self.memo.read().unwrap().get(m) {
            return hit.clone();
        }
        let mut out = QuotElt::zero();
        for (s, e) in m.exponents() {
            let rest = m.without(s).unwrap();
            let mult = int(e as i64);
            let head = self.env.quot_left_mul(s, &self.pbw_monomial(&rest));
            out.add_scaled(&mult, &head);
            let corr = self.conn.on_sym_slot(s, &SymTensor::monomial(rest, Scalar::one()));
            out.add_scaled(&-mult, &self.pbw_apply(&corr));
        }
        let out = out.scaled(&(Scalar::one() / int(m.weight() as i64)));
        self.memo.write().unwrap().insert(m.clone(), out.clone());
        out
    }

    pub fn pbw_apply(&self, s: &SymTensor) -> QuotElt {
        let mut out = QuotElt::zero();
        for (m, c) in s.terms() {
            out.add_scaled(c, &self.pbw_monomial(m));
        }
        out
    }

    /// Back-substitution from the top filtration degree, using that the
    /// top-weight part of `pbw(x^α)` is `x^α`.
    pub fn pbw_inverse(&self, u: &QuotElt) -> SymTensor {
        let mut rest = u.clone();
        let mut out = SymTensor::zero();
        while let Some(w) = rest.max_weight() {
            let top: SymTensor = rest.weight_component(w).cast();
            let image = self.pbw_apply(&top);
            rest.sub_assign(&image);
            debug_assert!(rest.max_weight().is_none_or(|v| v < w));
            out.add_assign(&top);
        }
        out
    }

    /// `pbw(x^α) − reduce((1/n!) Σ_σ j-lifts)`, which has degree `< n`.
    pub fn symbol_defect(&self, m: &MultiIndex) -> QuotElt {
        let sym = self.env.reduce_mod_ideal(&self.env.symmetrize(m));
        &self.pbw_monomial(m) - &sym
    }
}

/// Outcome of a structural check over all monomials up to some weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    /// First monomial (canonical order) on which the check fails.
    pub counterexample: Option<MultiIndex>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `Δ(f(x^α)) = (f⊗f)(Δ x^α)` and `deg f(x^α) ≤ |α|` for every
/// monomial of weight `1..=max_weight`, for an arbitrary candidate map `f`.
pub fn check_coalgebra_map<F>(q: usize, max_weight: usize, exec: Execution, f: F) -> CheckReport
where
    F: Fn(&MultiIndex) -> QuotElt + Sync + Send,
{
    let monos: Vec<MultiIndex> = (1..=max_weight).flat_map(|w| MultiIndex::all_of_weight(w, q)).collect();
    let ok = exec.map(&monos, |m| {
        let image = f(m);
        if image.max_weight().is_some_and(|d| d > m.weight()) {
            return false;
        }
        let lhs = quot_comultiply(&image);
        let mut rhs = TensorPair::zero();
        for (l, r, mult) in m.splits() {
            rhs.add_tensor(&big(&mult), &f(&l), &f(&r));
        }
        lhs == rhs
    });
    CheckReport { checked: monos.len(), counterexample: monos.iter().zip(ok).find(|(_, ok)| !ok).map(|(m, _)| m.clone()) }
}

pub fn check_coalgebra_morphism(ctx: &PbwContext, max_weight: usize) -> CheckReport {
    ctx.precompute(max_weight);
    check_coalgebra_map(ctx.pair().quotient_dim(), max_weight, ctx.exec, |m| ctx.pbw_monomial(m))
}

pub fn check_symbol(ctx: &PbwContext, max_weight: usize) -> CheckReport {
    ctx.precompute(max_weight);
    let q = ctx.pair().quotient_dim();
    let monos: Vec<MultiIndex> = (1..=max_weight).flat_map(|w| MultiIndex::all_of_weight(w, q)).collect();
    let ok = ctx.exec.map(&monos, |m| {
        let d = ctx.symbol_defect(m);
        match d.max_weight() {
            None => true,
            Some(k) => k < m.weight(),
        }
    });
    CheckReport { checked: monos.len(), counterexample: monos.iter().zip(ok).find(|(_, ok)| !ok).map(|(m, _)| m.clone()) }
}

/// Matrix of the map on weights `≤ max_weight` is unitriangular: each image
/// has top component exactly its argument.
pub fn check_unitriangular(ctx: &PbwContext, max_weight: usize) -> CheckReport {
    let q = ctx.pair().quotient_dim();
    let monos = MultiIndex::all_up_to_weight(max_weight, q);
    let ok = ctx.exec.map(&monos, |m| {
        let image = ctx.pbw_monomial(m);
        image.weight_component(m.weight()) == QuotElt::monomial(m.clone(), Scalar::one())
            && image.max_weight() == Some(m.weight())
    });
    CheckReport { checked: monos.len(), counterexample: monos.iter().zip(ok).find(|(_, ok)| !ok).map(|(m, _)| m.clone()) }
}

/// `reduce(e_l · lift(u))` for a g-vector `l`.
pub fn quot_left_mul_vec(env: &Envelope, l: &[Scalar], u: &QuotElt) -> QuotElt {
    let lifted: UEElt = env.lift(u);
    let mut out = QuotElt::zero();
    for (slot, c) in l.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out.add_scaled(c, &env.reduce_mod_ideal(&env.left_mul_generator(slot, &lifted)));
    }
    out
}
