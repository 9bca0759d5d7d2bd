//! The deviation Θ of the pulled-back action from `q(l)⊙ + ∇_l`, computed
//! directly through the PBW map and independently by power recursions.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exact::{frac, int, polarize_monomial, MultiIndex, Scalar, SymTensor};
use crate::exec::Execution;
use crate::lie_pair::{curvature_vec, torsion, unit, Connection, LiePair};
use crate::pbw::PbwContext;

/// `pbw⁻¹(e_l · pbw(s))`.
pub fn nabla_lightning(ctx: &PbwContext, l: usize, s: &SymTensor) -> SymTensor {
    let image = ctx.pbw_apply(s);
    ctx.pbw_inverse(&ctx.envelope().quot_left_mul(l, &image))
}

/// `Θ(l; s) = ∇⚡_l s − q(e_l) ⊙ s − ∇_l s`.
pub fn theta_direct(ctx: &PbwContext, l: usize, s: &SymTensor) -> SymTensor {
    let mut out = nabla_lightning(ctx, l, s);
    if !ctx.pair().is_sub_slot(l) {
        out.sub_assign(&SymTensor::generator(l).sym_mul(s));
    }
    out.sub_assign(&ctx.conn().on_sym_slot(l, s));
    out
}

/// Tables of `R(a; x^α)` (a an h slot) and `H(c; x^α)` (c a complement
/// slot) on all monomials up to a weight, built weight by weight from
/// their values on powers `b^{n+1}` via polarization.
#[derive(Clone, Debug)]
pub struct ThetaTables {
    pair: LiePair,
    conn: Connection,
    max_weight: usize,
    r: HashMap<(usize, MultiIndex), SymTensor>,
    h: HashMap<(usize, MultiIndex), SymTensor>,
}

impl ThetaTables {
    pub fn build(pair: &LiePair, conn: &Connection, max_weight: usize, exec: Execution) -> Self {
        let mut t = ThetaTables {
            pair: pair.clone(),
            conn: conn.clone(),
            max_weight: 0,
            r: HashMap::new(),
            h: HashMap::new(),
        };
        let q = pair.quotient_dim();
        for w in 1..=max_weight {
            let monos = MultiIndex::all_of_weight(w, q);
            let mut jobs: Vec<(bool, usize, MultiIndex)> = Vec::new();
            for m in &monos {
                for a in pair.sub_slots() {
                    jobs.push((true, a, m.clone()));
                }
                for c in 0..q {
                    jobs.push((false, c, m.clone()));
                }
            }
            let n = w - 1;
            let vals = exec.map(&jobs, |(is_r, slot, m)| {
                if *is_r {
                    polarize_monomial(m, q, |b| t.r_power(*slot, b, n))
                } else {
                    polarize_monomial(m, q, |b| t.h_power(&unit(q, *slot), b, n))
                }
            });
            for ((is_r, slot, m), v) in jobs.into_iter().zip(vals) {
                if is_r {
                    t.r.insert((slot, m), v);
                } else {
                    t.h.insert((slot, m), v);
                }
            }
            t.max_weight = w;
        }
        t
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// `R(a; s)` for a g-vector `a` (only its h part matters).
    pub fn r(&self, a: &[Scalar], s: &SymTensor) -> SymTensor {
        let mut out = SymTensor::zero();
        for slot in self.pair.sub_slots() {
            if a[slot].is_zero() {
                continue;
            }
            for (m, c) in s.terms() {
                if m.weight() == 0 {
                    continue;
                }
                let v = self.r.get(&(slot, m.clone())).expect("weight within table range");
                out.add_scaled(&(&a[slot] * c), v);
            }
        }
        out
    }

    /// `H(c; s)` for a complement vector `c`.
    pub fn h(&self, c: &[Scalar], s: &SymTensor) -> SymTensor {
        let mut out = SymTensor::zero();
        for (slot, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (m, y) in s.terms() {
                if m.weight() == 0 {
                    continue;
                }
                let v = self.h.get(&(slot, m.clone())).expect("weight within table range");
                out.add_scaled(&(x * y), v);
            }
        }
        out
    }

    pub fn r_slot(&self, a: usize, m: &MultiIndex) -> SymTensor {
        self.r(&unit(self.pair.dim(), a), &SymTensor::monomial(m.clone(), Scalar::one()))
    }

    pub fn h_slot(&self, c: usize, m: &MultiIndex) -> SymTensor {
        self.h(&unit(self.pair.quotient_dim(), c), &SymTensor::monomial(m.clone(), Scalar::one()))
    }

    /// `Θ(l; s) = R(p(e_l); s) + H(q(e_l); s)`.
    pub fn theta(&self, l: usize, s: &SymTensor) -> SymTensor {
        let e = unit(self.pair.dim(), l);
        let mut out = self.r(&e, s);
        out.add_assign(&self.h(&self.pair.project(&e), s));
        out
    }

    /// `R(a; b^{n+1})` from the tables at weights `≤ n`:
    /// `−n Z(a;b²)⊙b^{n−1} + b⊙R + H(b;R) + ∇_{jb}R − R(p[jb,a]; b^n) − R(a; ∇_{jb}b^n)`
    /// with `R = R(a; b^n)`.
    fn r_power(&self, a: usize, b: &[Scalar], n: usize) -> SymTensor {
        let pair = &self.pair;
        let av = unit(pair.dim(), a);
        let jb = pair.lift(b);
        let bn = SymTensor::power(b, n);
        let bvec = SymTensor::from_vector(b);
        let rb = self.r(&av, &bn);
        let mut out = bvec.sym_mul(&rb);
        out.add_assign(&self.h(b, &rb));
        out.add_assign(&self.conn.on_sym(&jb, &rb));
        let delta = pair.sub_part(&pair.bracket_vec(&jb, &av));
        out.sub_assign(&self.r(&delta, &bn));
        out.sub_assign(&self.r(&av, &self.conn.on_sym(&jb, &bn)));
        if n >= 1 {
            let z = curvature_vec(pair, &self.conn, &av, &jb, b);
            let zt = SymTensor::from_vector(&z).sym_mul(&SymTensor::power(b, n - 1));
            out.add_scaled(&-int(n as i64), &zt);
        }
        out
    }

    /// `H(c; b^{n+1})`, from
    /// `(n+2)/(n+1) H(c;b^{n+1}) = b⊙H + H(b;H) + ∇_{jb}H − H(∇_{jb}c; b^n)
    ///   − H(c; ∇_{jb}b^n) − R(α(b,c); b^n) + H(β(b,c); b^n) + β(b,c)⊙b^n
    ///   + n b^{n−1}⊙curv(jb,jc)b` with `H = H(c; b^n)`.
    fn h_power(&self, c: &[Scalar], b: &[Scalar], n: usize) -> SymTensor {
        let pair = &self.pair;
        let (jb, jc) = (pair.lift(b), pair.lift(c));
        let bn = SymTensor::power(b, n);
        let hc = self.h(c, &bn);
        let mut out = SymTensor::from_vector(b).sym_mul(&hc);
        out.add_assign(&self.h(b, &hc));
        out.add_assign(&self.conn.on_sym(&jb, &hc));
        out.sub_assign(&self.h(&self.conn.nabla_vec(&jb, c), &bn));
        out.sub_assign(&self.h(c, &self.conn.on_sym(&jb, &bn)));
        let alpha = pair.sub_part(&pair.bracket_vec(&jb, &jc));
        out.sub_assign(&self.r(&alpha, &bn));
        let beta = torsion(pair, &self.conn, &jb, &jc);
        out.add_assign(&self.h(&beta, &bn));
        out.add_assign(&SymTensor::from_vector(&beta).sym_mul(&bn));
        if n >= 1 {
            let k = curvature_vec(pair, &self.conn, &jb, &jc, b);
            let kt = SymTensor::from_vector(&k).sym_mul(&SymTensor::power(b, n - 1));
            out.add_scaled(&int(n as i64), &kt);
        }
        out.scaled(&frac(n as i64 + 1, n as i64 + 2))
    }
}

/// Θ by the recursions, for a single argument.
pub fn theta_recursive(pair: &LiePair, conn: &Connection, l: usize, s: &SymTensor) -> SymTensor {
    let w = s.max_weight().unwrap_or(0);
    ThetaTables::build(pair, conn, w, Execution::Sequential).theta(l, s)
}
