//! Bundled example pairs and seeded random connections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{frac, int, Scalar};
use crate::lie_pair::{Connection, LiePair};

#[derive(Clone, Debug)]
pub struct BundledPair {
    pub name: &'static str,
    pub labels: Vec<&'static str>,
    pub pair: LiePair,
}

fn build(name: &'static str, labels: Vec<&'static str>, m: usize, entries: &[(usize, usize, usize, i64)]) -> BundledPair {
    let e: Vec<(usize, usize, usize, Scalar)> = entries.iter().map(|&(i, j, k, c)| (i, j, k, int(c))).collect();
    let pair = LiePair::new(labels.len(), m, &e).expect("bundled pair is valid");
    BundledPair { name, labels, pair }
}

pub fn abelian2() -> BundledPair {
    build("abelian2", vec!["x", "y"], 1, &[])
}

/// `[x,y] = z`, h = center.
pub fn heisenberg() -> BundledPair {
    build("heisenberg", vec!["x", "y", "z"], 1, &[(0, 1, 2, 1)])
}

/// sl₂ with h = span(H); order e, f, H.
pub fn sl2_cartan() -> BundledPair {
    build("sl2_cartan", vec!["e", "f", "H"], 1, &[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)])
}

/// sl₂ with h = span(e, H); order f, e, H.
pub fn sl2_borel() -> BundledPair {
    build("sl2_borel", vec!["f", "e", "H"], 2, &[(1, 0, 2, 1), (2, 1, 1, 2), (2, 0, 0, -2)])
}

/// `[u,v] = v`, h = 0.
pub fn nonabelian2() -> BundledPair {
    build("nonabelian2", vec!["u", "v"], 0, &[(0, 1, 1, 1)])
}

/// Solvable g = b ⊕ h with b = span(x, y) abelian and h = span(u, v)
/// nonabelian, so the zero-extension connection on b is flat and
/// torsion-free while the cocycle is nonzero.
pub fn split_solvable() -> BundledPair {
    build(
        "split_solvable",
        vec!["x", "y", "u", "v"],
        2,
        &[(0, 3, 1, -1), (0, 3, 2, 1), (0, 3, 3, 1), (1, 2, 2, 1), (1, 3, 1, -1), (1, 3, 3, 1), (2, 3, 2, -1)],
    )
}

pub fn bundled_pairs() -> Vec<BundledPair> {
    vec![abelian2(), heisenberg(), sl2_cartan(), sl2_borel(), nonabelian2(), split_solvable()]
}

/// `(g, 0)` pairs, on which pbw with ∇ = 0 is plain symmetrization.
pub fn full_pairs() -> Vec<BundledPair> {
    vec![
        build("sl2_full", vec!["e", "f", "H"], 0, &[(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]),
        build("heisenberg_full", vec!["x", "y", "z"], 0, &[(0, 1, 2, 1)]),
    ]
}

/// Zero extension plus complement rows with entries in `{-2, -3/2, …, 2}`.
pub fn random_connection(pair: &LiePair, seed: u64) -> Connection {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = pair.quotient_dim();
    let rows = (0..q)
        .map(|_| (0..q).map(|_| (0..q).map(|_| frac(rng.gen_range(-4..=4), 2)).collect()).collect())
        .collect();
    Connection::with_complement_rows(pair, rows).expect("complement rows are unconstrained")
}

/// The zero extension followed by two seeded random connections.
pub fn connections(pair: &LiePair) -> Vec<Connection> {
    vec![Connection::zero_extension(pair), random_connection(pair, 11), random_connection(pair, 29)]
}
