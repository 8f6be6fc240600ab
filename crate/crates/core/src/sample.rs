//! Seeded random generators for scalars, subspace chains, spaces, maps
//! and count tables. Every generator is a deterministic function of the
//! supplied RNG, so suites that seed their RNG are reproducible.

use crate::chain::MVSpace;
use crate::dimension::theta_dominance;
use crate::linalg::{LinearMap, Matrix, Vector};
use crate::mset::{FiniteMSet, Universe};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random scalar: a small fraction over the rationals, a uniform
/// residue over a prime field.
pub fn random_scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    match field.modulus() {
        None => Scalar::rational(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3)),
        Some(p) => Scalar::from_integer(field, rng.gen_range(0..p) as i64),
    }
}

/// A random vector with small integer coordinates.
pub fn random_vector<R: Rng>(rng: &mut R, field: Field, dim: usize) -> Vector {
    let coords: Vec<i64> = (0..dim)
        .map(|_| match field.modulus() {
            None => rng.gen_range(-4i64..=4),
            Some(p) => rng.gen_range(0..p) as i64,
        })
        .collect();
    Vector::from_integers(field, &coords)
}

/// A random matrix with small integer entries.
pub fn random_matrix<R: Rng>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| match field.modulus() {
                    None => rng.gen_range(-3i64..=3),
                    Some(p) => rng.gen_range(0..p) as i64,
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_integer_rows(field, &refs)
}

/// A random invertible matrix, found by rejection sampling.
pub fn random_invertible<R: Rng>(rng: &mut R, field: Field, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// A random linear map `F^domain -> F^codomain`.
pub fn random_linear_map<R: Rng>(
    rng: &mut R,
    field: Field,
    codomain: usize,
    domain: usize,
) -> LinearMap {
    LinearMap::new(random_matrix(rng, field, codomain, domain))
}

/// A random multi vector space: a strictly increasing run of dimensions
/// (possibly starting at the zero space) paired with strictly decreasing
/// counts, with the nested levels cut from a random invertible matrix.
/// The empty space comes up when zero levels are drawn.
pub fn random_mvspace<R: Rng>(
    rng: &mut R,
    field: Field,
    ambient: usize,
    omega: u32,
) -> MVSpace {
    let max_levels = (ambient as u32 + 1).min(omega);
    let k = rng.gen_range(0..=max_levels) as usize;
    if k == 0 {
        return MVSpace::empty(field, ambient, omega).unwrap();
    }
    let mut dims: Vec<usize> = (0..=ambient).collect();
    dims.shuffle(rng);
    dims.truncate(k);
    dims.sort_unstable();
    let mut counts: Vec<u32> = (1..=omega).collect();
    counts.shuffle(rng);
    counts.truncate(k);
    counts.sort_unstable_by(|a, b| b.cmp(a));
    let frame = random_invertible(rng, field, ambient);
    let mut chain = Vec::with_capacity(k);
    for (dim, count) in dims.into_iter().zip(counts) {
        let rows: Vec<Vector> = (0..dim).map(|r| frame.row_vector(r)).collect();
        let subspace = Subspace::from_generators(field, ambient, &rows).unwrap();
        chain.push((count, subspace));
    }
    MVSpace::new(field, ambient, omega, chain).unwrap()
}

/// A random pair of spaces adjusted to dominate each other's nonzero
/// counts at the zero vector, as the common-basis and modular-dimension
/// laws require.
pub fn random_dominant_pair<R: Rng>(
    rng: &mut R,
    field: Field,
    ambient: usize,
    omega: u32,
) -> (MVSpace, MVSpace) {
    let v = random_mvspace(rng, field, ambient, omega);
    let w = random_mvspace(rng, field, ambient, omega);
    let t = v.top_nonzero_count().max(w.top_nonzero_count());
    let v = raise_theta(&v, t);
    let w = raise_theta(&w, t);
    debug_assert!(theta_dominance(&v, &w).unwrap());
    (v, w)
}

/// Raises the zero vector's count to at least `t`, leaving all nonzero
/// counts unchanged.
fn raise_theta(space: &MVSpace, t: u32) -> MVSpace {
    if space.theta_count() >= t {
        return space.clone();
    }
    let mut chain: Vec<(u32, Subspace)> = space
        .levels()
        .iter()
        .map(|l| (l.count, l.subspace.clone()))
        .collect();
    match chain.first_mut() {
        Some((count, subspace)) if subspace.dim() == 0 => *count = t,
        _ => chain.insert(0, (t, Subspace::zero(space.field(), space.ambient()))),
    }
    MVSpace::new(space.field(), space.ambient(), space.omega(), chain).unwrap()
}

/// A uniformly random count table — not usually a multi vector space.
pub fn random_finite_mset<R: Rng>(rng: &mut R, universe: Universe, omega: u32) -> FiniteMSet {
    let counts: Vec<u32> = (0..universe.size())
        .map(|_| rng.gen_range(0..=omega))
        .collect();
    FiniteMSet::new(universe, omega, counts).unwrap()
}
