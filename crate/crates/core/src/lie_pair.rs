//! Lie pairs in an adapted basis, connections extending the Bott action,
//! and the tensors built from them.
//!
//! Slots are 0-based: `0..q` span a complement of h (identified with g/h),
//! `q..n` span h. Vectors of g are length-`n` coordinate lists, vectors of
//! g/h are length-`q`.

use num_traits::{One, Zero};

use crate::cochain::CECochain;
use crate::error::{Error, Violation};
use crate::exact::{big, frac, ExtIndex, MultiIndex, Scalar, SymTensor};
use crate::linalg::Matrix;

/// Dense 3-index table.
pub type Tensor3 = Vec<Vec<Vec<Scalar>>>;

fn zeros3(a: usize, b: usize, c: usize) -> Tensor3 {
    vec![vec![vec![Scalar::zero(); c]; b]; a]
}

/// Builds `c[i][j][k]` from `(i, j, k, coeff)` entries meaning
/// `[e_i, e_j]` has coefficient `coeff` on `e_k`. When only one of `(i,j)`
/// and `(j,i)` is listed for a given `k`, the other is filled in by
/// antisymmetry; conflicting explicit entries are kept for validation.
pub fn bracket_table(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Tensor3, Error> {
    let mut c = zeros3(n, n, n);
    let mut given = vec![vec![vec![false; n]; n]; n];
    for (i, j, k, x) in entries {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::Shape(format!("bracket index ({i},{j},{k}) out of range for dimension {n}")));
        }
        c[*i][*j][*k] += x;
        given[*i][*j][*k] = true;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if given[i][j][k] && !given[j][i][k] && i != j {
                    c[j][i][k] = -c[i][j][k].clone();
                }
            }
        }
    }
    Ok(c)
}

/// A Lie algebra g with a subalgebra h spanned by the last `m` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePair {
    n: usize,
    m: usize,
    c: Tensor3,
    sparse: Vec<Vec<Vec<(usize, Scalar)>>>,
}

/// Checks antisymmetry, the Jacobi identity and closure of h.
pub fn validate_pair(c: Tensor3, m: usize) -> Result<LiePair, Error> {
    let n = c.len();
    if m > n {
        return Err(Error::Shape(format!("subalgebra dimension {m} exceeds dimension {n}")));
    }
    if c.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
        return Err(Error::Shape(format!("structure constants must be {n}x{n}x{n}")));
    }
    let q = n - m;
    let mut bad = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if c[i][j][k] != -c[j][i][k].clone() {
                    bad.push(Violation::NotAntisymmetric { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::InvalidPair(bad));
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                // [[i,j],k] + [[j,k],i] + [[k,i],j]
                let ok = (0..n).all(|t| {
                    let mut s = Scalar::zero();
                    for r in 0..n {
                        s += &c[i][j][r] * &c[r][k][t];
                        s += &c[j][k][r] * &c[r][i][t];
                        s += &c[k][i][r] * &c[r][j][t];
                    }
                    s.is_zero()
                });
                if !ok {
                    bad.push(Violation::JacobiViolation { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    for i in q..n {
        for j in i + 1..n {
            for k in 0..q {
                if !c[i][j][k].is_zero() {
                    bad.push(Violation::NotSubalgebra { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    if !bad.is_empty() {
        return Err(Error::InvalidPair(bad));
    }
    let sparse = c
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect())
                .collect()
        })
        .collect();
    Ok(LiePair { n, m, c, sparse })
}

impl LiePair {
    /// Convenience constructor from bracket entries (see [`bracket_table`]).
    pub fn new(n: usize, m: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self, Error> {
        validate_pair(bracket_table(n, entries)?, m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn sub_dim(&self) -> usize {
        self.m
    }

    pub fn quotient_dim(&self) -> usize {
        self.n - self.m
    }

    pub fn is_sub_slot(&self, slot: usize) -> bool {
        slot >= self.quotient_dim()
    }

    pub fn sub_slots(&self) -> std::ops::Range<usize> {
        self.quotient_dim()..self.n
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.c
    }

    /// Nonzero components of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sparse[i][j]
    }

    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += a * b * c;
                }
            }
        }
        out
    }

    pub fn basis(&self, slot: usize) -> Vec<Scalar> {
        unit(self.n, slot)
    }

    /// `j`: quotient vector to g.
    pub fn lift(&self, b: &[Scalar]) -> Vec<Scalar> {
        let mut v = b.to_vec();
        v.resize(self.n, Scalar::zero());
        v
    }

    /// `q`: g to quotient.
    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        x[..self.quotient_dim()].to_vec()
    }

    /// `p`: g to h, as a g-vector supported on sub slots.
    pub fn sub_part(&self, x: &[Scalar]) -> Vec<Scalar> {
        let q = self.quotient_dim();
        x.iter().enumerate().map(|(i, v)| if i < q { Scalar::zero() } else { v.clone() }).collect()
    }

    /// Presentation in the basis `f_i = Σ_r p[i][r] e_r`, with the last `m`
    /// new vectors required to span h.
    pub fn change_basis(&self, p: &Matrix, m: usize) -> Result<LiePair, Error> {
        let n = self.n;
        if p.rows() != n || p.cols() != n {
            return Err(Error::Shape("change of basis must be square".into()));
        }
        let pt = p.transpose();
        if pt.rank() != n {
            return Err(Error::Contract("change of basis is singular".into()));
        }
        let rows: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|r| p.get(i, r).clone()).collect()).collect();
        let mut c = zeros3(n, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_vec(&rows[i], &rows[j]);
                // coordinates w with Σ_k w_k f_k = v, i.e. pᵀ w = v
                let w = pt.solve(&v).expect("invertible");
                c[i][j] = w;
            }
        }
        validate_pair(c, m)
    }
}

pub fn unit(n: usize, slot: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[slot] = Scalar::one();
    v
}

fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (u, v) in y.iter_mut().zip(x) {
        *u += a * v;
    }
}

/// The Bott action of h on g/h: rows `q..n` of a connection table.
pub fn bott_values(pair: &LiePair) -> Tensor3 {
    let q = pair.quotient_dim();
    pair.sub_slots()
        .map(|a| (0..q).map(|j| pair.c[a][j][..q].to_vec()).collect())
        .collect()
}

/// `∇_{e_l} b_j = Σ_k gamma[l][j][k] b_k` for `l` in `0..n`, `j, k` in `0..q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor3,
}

/// Accepts `gamma` iff its h rows equal the Bott values.
pub fn validate_connection(pair: &LiePair, gamma: Tensor3) -> Result<Connection, Error> {
    let (n, q) = (pair.dim(), pair.quotient_dim());
    if gamma.len() != n || gamma.iter().any(|r| r.len() != q || r.iter().any(|v| v.len() != q)) {
        return Err(Error::Shape(format!("connection must be {n}x{q}x{q}")));
    }
    let bott = bott_values(pair);
    let mut bad = Vec::new();
    for (a, rows) in bott.iter().enumerate() {
        let l = q + a;
        for j in 0..q {
            for k in 0..q {
                if gamma[l][j][k] != rows[j][k] {
                    bad.push(Violation::BottMismatch {
                        i: l + 1,
                        j: j + 1,
                        k: k + 1,
                        expected: rows[j][k].clone(),
                        got: gamma[l][j][k].clone(),
                    });
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(Connection { gamma })
    } else {
        Err(Error::InvalidConnection(bad))
    }
}

impl Connection {
    /// Bott values on h, zero on the complement.
    pub fn zero_extension(pair: &LiePair) -> Connection {
        let q = pair.quotient_dim();
        let mut gamma = zeros3(pair.dim(), q, q);
        for (a, rows) in bott_values(pair).into_iter().enumerate() {
            gamma[q + a] = rows;
        }
        Connection { gamma }
    }

    /// Zero extension plus the given rows on the complement slots.
    pub fn with_complement_rows(pair: &LiePair, rows: Tensor3) -> Result<Connection, Error> {
        let q = pair.quotient_dim();
        if rows.len() != q {
            return Err(Error::Shape(format!("expected {q} complement rows")));
        }
        let mut gamma = Connection::zero_extension(pair).gamma;
        for (l, r) in rows.into_iter().enumerate() {
            gamma[l] = r;
        }
        validate_connection(pair, gamma)
    }

    pub fn gamma(&self) -> &Tensor3 {
        &self.gamma
    }

    pub fn quotient_dim(&self) -> usize {
        self.gamma.first().map_or(0, Vec::len)
    }

    /// `∇_{e_l} b` for a quotient vector `b`.
    pub fn nabla(&self, l: usize, b: &[Scalar]) -> Vec<Scalar> {
        let q = self.quotient_dim();
        let mut out = vec![Scalar::zero(); q];
        for (j, x) in b.iter().enumerate() {
            axpy(&mut out, x, &self.gamma[l][j]);
        }
        out
    }

    /// `∇_x b` for a g-vector `x`.
    pub fn nabla_vec(&self, x: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.quotient_dim()];
        for (l, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let v = self.nabla(l, b);
            axpy(&mut out, c, &v);
        }
        out
    }

    /// `∇_x` extended to S(g/h) as a derivation.
    pub fn on_sym(&self, x: &[Scalar], s: &SymTensor) -> SymTensor {
        let q = self.quotient_dim();
        s.derivation(|j| SymTensor::from_vector(&self.nabla_vec(x, &unit(q, j))))
    }

    pub fn on_sym_slot(&self, l: usize, s: &SymTensor) -> SymTensor {
        let q = self.quotient_dim();
        debug_assert!(s.terms().all(|(m, _)| m.max_slot().is_none_or(|t| t < q)));
        s.derivation(|j| SymTensor::from_vector(&self.gamma[l][j]))
    }
}

/// `T(x, y) = ∇_x q(y) − ∇_y q(x) − q[x, y]` for g-vectors.
pub fn torsion(pair: &LiePair, conn: &Connection, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut t = conn.nabla_vec(x, &pair.project(y));
    let u = conn.nabla_vec(y, &pair.project(x));
    let br = pair.project(&pair.bracket_vec(x, y));
    for ((a, b), c) in t.iter_mut().zip(u).zip(br) {
        *a -= b + c;
    }
    t
}

/// `beta[i][j] = ∇_{e_i} b_j − ∇_{e_j} b_i − q[e_i, e_j]`.
pub fn torsion_beta(pair: &LiePair, conn: &Connection) -> Vec<Vec<Vec<Scalar>>> {
    let (n, q) = (pair.dim(), pair.quotient_dim());
    (0..q)
        .map(|i| (0..q).map(|j| torsion(pair, conn, &unit(n, i), &unit(n, j))).collect())
        .collect()
}

/// `alpha[i][j] = p[e_i, e_j]` as a g-vector supported on h.
pub fn alpha_map(pair: &LiePair) -> Vec<Vec<Vec<Scalar>>> {
    let (n, q) = (pair.dim(), pair.quotient_dim());
    (0..q)
        .map(|i| (0..q).map(|j| pair.sub_part(&pair.bracket_vec(&unit(n, i), &unit(n, j)))).collect())
        .collect()
}

/// `∇_x ∇_y b − ∇_y ∇_x b − ∇_{[x,y]} b`.
pub fn curvature_vec(pair: &LiePair, conn: &Connection, x: &[Scalar], y: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = conn.nabla_vec(x, &conn.nabla_vec(y, b));
    let u = conn.nabla_vec(y, &conn.nabla_vec(x, b));
    let w = conn.nabla_vec(&pair.bracket_vec(x, y), b);
    for ((a, b), c) in out.iter_mut().zip(u).zip(w) {
        *a -= b + c;
    }
    out
}

/// `curv[l1][l2][j]` = curvature of basis elements applied to `b_j`.
pub fn curvature(pair: &LiePair, conn: &Connection) -> Vec<Vec<Vec<Vec<Scalar>>>> {
    let (n, q) = (pair.dim(), pair.quotient_dim());
    (0..n)
        .map(|l1| {
            (0..n)
                .map(|l2| {
                    (0..q).map(|j| curvature_vec(pair, conn, &unit(n, l1), &unit(n, l2), &unit(q, j))).collect()
                })
                .collect()
        })
        .collect()
}

/// All derived tensors at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeomTensors {
    pub alpha: Vec<Vec<Vec<Scalar>>>,
    pub beta: Vec<Vec<Vec<Scalar>>>,
    pub curv: Vec<Vec<Vec<Vec<Scalar>>>>,
}

pub fn geom_tensors(pair: &LiePair, conn: &Connection) -> GeomTensors {
    GeomTensors { alpha: alpha_map(pair), beta: torsion_beta(pair, conn), curv: curvature(pair, conn) }
}

/// `Z(a; b1 ⊙ b2) = ½(curv(a, j b1) b2 + curv(a, j b2) b1)` for a g-vector `a`.
pub fn atiyah_value(pair: &LiePair, conn: &Connection, a: &[Scalar], b1: &[Scalar], b2: &[Scalar]) -> Vec<Scalar> {
    let mut out = curvature_vec(pair, conn, a, &pair.lift(b1), b2);
    let v = curvature_vec(pair, conn, a, &pair.lift(b2), b1);
    let half = frac(1, 2);
    for (x, y) in out.iter_mut().zip(v) {
        *x = (&*x + y) * &half;
    }
    out
}

/// The Atiyah cocycle as a (1,2)-cochain.
pub fn atiyah_cocycle(pair: &LiePair, conn: &Connection) -> CECochain {
    let q = pair.quotient_dim();
    let mut z = CECochain::zero();
    for a in pair.sub_slots() {
        let av = pair.basis(a);
        for m in MultiIndex::all_of_weight(2, q) {
            let s = m.slots();
            let val = atiyah_value(pair, conn, &av, &unit(q, s[0]), &unit(q, s[1]));
            let scale = Scalar::one() / big(&m.factorial());
            for (out, v) in val.into_iter().enumerate() {
                z.add_term(ExtIndex::single(a), m.clone(), out, v * &scale);
            }
        }
    }
    z
}

/// `∇'_l b = ∇_l b − ½ T(e_l, j b)`; torsion-free and still extends Bott.
pub fn torsion_free_modification(pair: &LiePair, conn: &Connection) -> Connection {
    let (n, q) = (pair.dim(), pair.quotient_dim());
    let half = frac(1, 2);
    let mut gamma = conn.gamma.clone();
    for l in 0..n {
        for j in 0..q {
            let t = torsion(pair, conn, &unit(n, l), &unit(n, j));
            for (k, v) in t.into_iter().enumerate() {
                gamma[l][j][k] -= &half * v;
            }
        }
    }
    Connection { gamma }
}
