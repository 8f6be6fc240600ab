//! Multi linear independence, multi bases and their index invariants.
//!
//! A linearly independent family is *multi linearly independent* when no
//! nonzero combination of its members climbs strictly above the smallest
//! count among the members it actually uses: for every nonzero coefficient
//! vector `a`, `count(sum a_i x_i)` equals the minimum of `count(x_i)`
//! over the support of `a`. (Closure gives `>=` for free, so only the
//! strict climb can fail, and failures are always witnessed.)
//!
//! The decision procedure is exact over both fields and needs no
//! enumeration: a violating combination that reaches the chain level `U`
//! with count `n` is precisely a nonzero vector of the coefficient space
//! of `xs` relative to `U` whose support touches some `x_i` with
//! `count(x_i) < n`. That is visible on the basis rows of the coefficient
//! space, one level at a time.

use crate::chain::MVSpace;
use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::{coefficient_space, Subspace};
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// A failed independence check: coefficients whose combination outgrows
/// the smallest count on its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceWitness {
    /// Coefficients, one per input vector (zeros mark unused vectors).
    pub coefficients: Vec<Scalar>,
    /// The combination `sum coefficients[i] * xs[i]`.
    pub combination: Vector,
    /// Its count — strictly above `min_count`.
    pub combination_count: u32,
    /// The smallest count among the vectors the combination uses.
    pub min_count: u32,
}

/// Outcome of the independence decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiIndependence {
    Independent,
    LinearlyDependent,
    Violation(IndependenceWitness),
}

impl MultiIndependence {
    pub fn is_independent(&self) -> bool {
        matches!(self, MultiIndependence::Independent)
    }
}

/// Decides multi linear independence of `xs` inside `space`.
///
/// Returns [`MultiIndependence::LinearlyDependent`] if the vectors are
/// already linearly dependent; otherwise either certifies independence or
/// produces a witness. Over the rationals the witness prefers a
/// combination using every vector when one exists; otherwise (and over
/// prime fields) it is the first coefficient-space basis row that uses a
/// vector of too-small count.
pub fn is_multi_linearly_independent(
    space: &MVSpace,
    xs: &[Vector],
) -> Result<MultiIndependence, Error> {
    for x in xs {
        if x.field() != space.field() {
            return Err(Error::FieldMismatch(space.field(), x.field()));
        }
        if x.dim() != space.ambient() {
            return Err(Error::DimensionMismatch {
                expected: space.ambient(),
                got: x.dim(),
            });
        }
    }
    if xs.is_empty() {
        return Ok(MultiIndependence::Independent);
    }
    let stacked = Matrix::from_row_vectors(space.field(), space.ambient(), xs);
    if stacked.rank() < xs.len() {
        return Ok(MultiIndependence::LinearlyDependent);
    }
    let counts: Vec<u32> = xs.iter().map(|x| space.count(x).unwrap()).collect();
    let floor = *counts.iter().min().unwrap();
    for level in space.levels().iter().filter(|l| l.count > floor) {
        let w = coefficient_space(xs, &level.subspace)?;
        if w.dim() == 0 {
            continue;
        }
        // A combination reaching this level may only use vectors whose own
        // count is at least the level count.
        let too_small =
            |row: &Vector| (0..xs.len()).any(|i| counts[i] < level.count && !row.coord(i).is_zero());
        let candidate = if space.field().is_rational() {
            w.all_nonzero_vector()?
        } else {
            None
        };
        let candidate = candidate.or_else(|| w.basis().iter().find(|r| too_small(r)).cloned());
        if let Some(coefficients) = candidate {
            let mut combination = Vector::zero(space.field(), space.ambient());
            let mut min_count = u32::MAX;
            for (i, x) in xs.iter().enumerate() {
                let c = coefficients.coord(i);
                if !c.is_zero() {
                    combination = combination.add(&x.scale(c));
                    min_count = min_count.min(counts[i]);
                }
            }
            let combination_count = space.count(&combination)?;
            debug_assert_eq!(combination_count, level.count);
            debug_assert!(combination_count > min_count);
            return Ok(MultiIndependence::Violation(IndependenceWitness {
                coefficients: coefficients.coords().to_vec(),
                combination,
                combination_count,
                min_count,
            }));
        }
    }
    Ok(MultiIndependence::Independent)
}

/// A basis of the ambient space ordered by descending count, certified to
/// restrict to a basis of every chain level of the space it was built for.
/// Vectors outside the support carry count zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MBasis {
    vectors: Vec<Vector>,
    counts: Vec<u32>,
    space: MVSpace,
}

impl MBasis {
    /// Certifies an explicit candidate basis against `space`.
    pub fn certify(space: &MVSpace, vectors: &[Vector]) -> Result<MBasis, Error> {
        if !is_mbasis(space, vectors) {
            return Err(Error::NotABasis);
        }
        let mut ordered: Vec<(Vector, u32)> = vectors
            .iter()
            .map(|v| (v.clone(), space.count(v).unwrap()))
            .collect();
        ordered.sort_by_key(|entry| std::cmp::Reverse(entry.1));
        let (vectors, counts) = ordered.into_iter().unzip();
        Ok(MBasis {
            vectors,
            counts,
            space: space.clone(),
        })
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn space(&self) -> &MVSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The same data as a multiset of vectors: each basis vector paired
    /// with its count.
    pub fn to_multi_basis(&self) -> MultiBasis {
        MultiBasis {
            entries: self
                .vectors
                .iter()
                .cloned()
                .zip(self.counts.iter().copied())
                .collect(),
            space: self.space.clone(),
        }
    }
}

/// A multi basis: the multiset view of an [`MBasis`], vectors paired with
/// their counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiBasis {
    entries: Vec<(Vector, u32)>,
    space: MVSpace,
}

impl MultiBasis {
    pub fn entries(&self) -> &[(Vector, u32)] {
        &self.entries
    }

    pub fn space(&self) -> &MVSpace {
        &self.space
    }

    /// Re-certifies the stored data into an [`MBasis`]. Fails if the
    /// vectors are not an M-basis of the space or a stored count lies.
    pub fn to_mbasis(&self) -> Result<MBasis, Error> {
        let vectors: Vec<Vector> = self.entries.iter().map(|(v, _)| v.clone()).collect();
        let certified = MBasis::certify(&self.space, &vectors)?;
        for (v, claimed) in &self.entries {
            if self.space.count(v)? != *claimed {
                return Err(Error::CertificateMismatch);
            }
        }
        Ok(certified)
    }
}

/// Greedy M-basis construction restricted to `carrier`: walk the chain
/// from the deepest level, adopt each basis row of `level meet carrier`
/// that enlarges the span, then pad with rows of `carrier` (count zero)
/// until the carrier is filled. Returns `(vector, count)` pairs in
/// descending count order.
pub(crate) fn mbasis_within(space: &MVSpace, carrier: &Subspace) -> Vec<(Vector, u32)> {
    assert!(carrier.field() == space.field() && carrier.ambient() == space.ambient());
    let mut chosen: Vec<(Vector, u32)> = Vec::new();
    let mut span = Subspace::zero(space.field(), space.ambient());
    let adopt = |row: &Vector, count: u32, span: &mut Subspace, chosen: &mut Vec<(Vector, u32)>| {
        if !span.contains_unchecked(row) {
            chosen.push((row.clone(), count));
            let vectors: Vec<Vector> = chosen.iter().map(|(v, _)| v.clone()).collect();
            *span = Subspace::from_generators(space.field(), space.ambient(), &vectors)
                .expect("chosen vectors share the ambient space");
        }
    };
    for level in space.levels() {
        let within = if carrier.is_full_space() {
            level.subspace.clone()
        } else {
            level
                .subspace
                .intersection(carrier)
                .expect("levels share the ambient space")
        };
        for row in within.basis() {
            adopt(row, level.count, &mut span, &mut chosen);
        }
    }
    for row in carrier.basis() {
        adopt(row, 0, &mut span, &mut chosen);
    }
    debug_assert_eq!(span, *carrier);
    chosen
}

/// Builds an M-basis of the whole ambient space deterministically:
/// level by level, first-unused-row-first, standard vectors to pad
/// beyond the support.
pub fn find_mbasis(space: &MVSpace) -> MBasis {
    let full = Subspace::full(space.field(), space.ambient());
    let (vectors, counts) = mbasis_within(space, &full).into_iter().unzip();
    MBasis {
        vectors,
        counts,
        space: space.clone(),
    }
}

/// Like [`find_mbasis`] but with randomized picks inside each level, for
/// probing that derived invariants do not depend on tie-breaking. Falls
/// back to the deterministic row choice when sampling stalls.
pub fn find_mbasis_seeded<R: Rng>(space: &MVSpace, rng: &mut R) -> MBasis {
    let field = space.field();
    let ambient = space.ambient();
    let mut vectors: Vec<Vector> = Vec::new();
    let mut counts: Vec<u32> = Vec::new();
    let mut span = Subspace::zero(field, ambient);
    let full = Subspace::full(field, ambient);
    let mut targets: Vec<(u32, Subspace)> = space
        .levels()
        .iter()
        .map(|l| (l.count, l.subspace.clone()))
        .collect();
    if targets.last().map(|(_, s)| s.dim()) != Some(ambient) {
        targets.push((0, full));
    }
    for (count, target) in targets {
        while span.dim() < target.dim() {
            let mut pick = None;
            for _ in 0..32 {
                let candidate = random_member(rng, &target);
                if !span.contains_unchecked(&candidate) {
                    pick = Some(candidate);
                    break;
                }
            }
            let pick = pick.unwrap_or_else(|| {
                target
                    .basis()
                    .iter()
                    .find(|r| !span.contains_unchecked(r))
                    .expect("target strictly exceeds the span")
                    .clone()
            });
            debug_assert_eq!(space.count(&pick).unwrap(), count);
            vectors.push(pick);
            counts.push(count);
            let so_far = vectors.clone();
            span = Subspace::from_generators(field, ambient, &so_far).unwrap();
        }
    }
    MBasis {
        vectors,
        counts,
        space: space.clone(),
    }
}

/// A random combination of the subspace's basis rows with small
/// coefficients (never returning the zero vector unless the subspace is
/// zero).
fn random_member<R: Rng>(rng: &mut R, subspace: &Subspace) -> Vector {
    let field = subspace.field();
    let mut v = Vector::zero(field, subspace.ambient());
    loop {
        for row in subspace.basis() {
            let c = match field.modulus() {
                None => rng.gen_range(-3i64..=3),
                Some(p) => rng.gen_range(0..p) as i64,
            };
            if c != 0 {
                v = v.add(&row.scale(&Scalar::from_integer(field, c)));
            }
        }
        if !v.is_zero() || subspace.dim() == 0 {
            return v;
        }
    }
}

/// One step of basis extension: a vector outside `y` whose count is
/// maximal among everything outside `y`. Deterministic: the first basis
/// row of the deepest level not inside `y`, else the first standard
/// vector outside `y` (count zero).
pub fn extend_step(space: &MVSpace, y: &Subspace) -> Result<Vector, Error> {
    if y.field() != space.field() {
        return Err(Error::FieldMismatch(space.field(), y.field()));
    }
    if y.ambient() != space.ambient() {
        return Err(Error::DimensionMismatch {
            expected: space.ambient(),
            got: y.ambient(),
        });
    }
    if y.is_full_space() {
        return Err(Error::FullSpace);
    }
    for level in space.levels() {
        if !level.subspace.is_subspace_of(y)? {
            let t = level
                .subspace
                .basis()
                .iter()
                .find(|r| !y.contains_unchecked(r))
                .expect("some basis row escapes y");
            return Ok(t.clone());
        }
    }
    let t = (0..space.ambient())
        .map(|i| Vector::standard(space.field(), space.ambient(), i))
        .find(|e| !y.contains_unchecked(e))
        .expect("a proper subspace misses some standard vector");
    Ok(t)
}

/// Recognizes an M-basis structurally: `b` is a basis of the ambient
/// space and, for every chain level, exactly `dim(level)` of its members
/// lie inside the level (hence restrict to a basis of it).
pub fn is_mbasis(space: &MVSpace, b: &[Vector]) -> bool {
    if b.len() != space.ambient() {
        return false;
    }
    if b
        .iter()
        .any(|v| v.field() != space.field() || v.dim() != space.ambient())
    {
        return false;
    }
    let stacked = Matrix::from_row_vectors(space.field(), space.ambient(), b);
    if stacked.rank() < b.len() {
        return false;
    }
    space.levels().iter().all(|level| {
        let inside = b
            .iter()
            .filter(|v| level.subspace.contains_unchecked(v))
            .count();
        inside == level.subspace.dim()
    })
}

/// The histogram shape of a space: `(count, multiplicity)` pairs in
/// descending count order, where the multiplicity is the dimension the
/// level adds over the previous one. A final `(0, ...)` entry records
/// directions outside the support. Multiplicities are positive and sum
/// to the ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    entries: Vec<(u32, usize)>,
}

impl MultiIndex {
    pub fn entries(&self) -> &[(u32, usize)] {
        &self.entries
    }

    /// The set of counts present.
    pub fn count_range(&self) -> BTreeSet<u32> {
        self.entries.iter().map(|&(c, _)| c).collect()
    }

    /// Sum of `count * multiplicity` over all entries.
    pub fn weighted_sum(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(c, r)| c as u64 * r as u64)
            .sum()
    }
}

/// The index of the space itself: how many new dimensions each count
/// contributes.
pub fn multi_index(space: &MVSpace) -> MultiIndex {
    let mut entries = Vec::new();
    let mut prev_dim = 0usize;
    for level in space.levels() {
        let added = level.subspace.dim() - prev_dim;
        if added > 0 {
            entries.push((level.count, added));
        }
        prev_dim = level.subspace.dim();
    }
    if prev_dim < space.ambient() {
        entries.push((0, space.ambient() - prev_dim));
    }
    MultiIndex { entries }
}

/// Checks that `b` is a basis of the space's ambient vector space.
pub(crate) fn ensure_ambient_basis(space: &MVSpace, b: &[Vector]) -> Result<(), Error> {
    for v in b {
        if v.field() != space.field() {
            return Err(Error::FieldMismatch(space.field(), v.field()));
        }
        if v.dim() != space.ambient() {
            return Err(Error::DimensionMismatch {
                expected: space.ambient(),
                got: v.dim(),
            });
        }
    }
    if b.len() != space.ambient() {
        return Err(Error::NotABasis);
    }
    let stacked = Matrix::from_row_vectors(space.field(), space.ambient(), b);
    if stacked.rank() < b.len() {
        return Err(Error::NotABasis);
    }
    Ok(())
}

/// The index of an explicit basis: the histogram of its counts,
/// descending. Errors if `b` is not a basis of the ambient space.
pub fn basis_index(space: &MVSpace, b: &[Vector]) -> Result<MultiIndex, Error> {
    ensure_ambient_basis(space, b)?;
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    for v in b {
        *histogram.entry(space.count(v)?).or_insert(0) += 1;
    }
    Ok(MultiIndex {
        entries: histogram.into_iter().rev().collect(),
    })
}

/// Decides the M-basis property by comparing indices. Precondition: `b`
/// is a basis whose set of counts equals the space's count range;
/// otherwise [`Error::CountRangeMismatch`]. Given that, `b` is an M-basis
/// exactly when its histogram matches the space's index.
pub fn mbasis_by_index_test(space: &MVSpace, b: &[Vector]) -> Result<bool, Error> {
    let bi = basis_index(space, b)?;
    let mi = multi_index(space);
    if bi.count_range() != mi.count_range() {
        return Err(Error::CountRangeMismatch);
    }
    let verdict = bi == mi;
    debug_assert_eq!(verdict, is_mbasis(space, b));
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rational
    }

    fn vecq(coords: &[i64]) -> Vector {
        Vector::from_integers(q(), coords)
    }

    fn plane_with_heavy_axis() -> MVSpace {
        MVSpace::from_spans(
            q(),
            2,
            4,
            vec![
                (4, vec![]),
                (2, vec![vecq(&[0, 1])]),
                (1, vec![vecq(&[1, 0]), vecq(&[0, 1])]),
            ],
        )
        .unwrap()
    }

    /// Count 5 on the plane spanned by the last two coordinates, 2 on the
    /// rest of the space.
    fn heavy_plane_in_four_space() -> MVSpace {
        MVSpace::from_spans(
            q(),
            4,
            5,
            vec![
                (5, vec![vecq(&[0, 0, 1, 0]), vecq(&[0, 0, 0, 1])]),
                (2, vec![
                    vecq(&[1, 0, 0, 0]),
                    vecq(&[0, 1, 0, 0]),
                    vecq(&[0, 0, 1, 0]),
                    vecq(&[0, 0, 0, 1]),
                ]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn witness_for_the_axis_collision() {
        let v = plane_with_heavy_axis();
        let xs = vec![vecq(&[1, 0]), vecq(&[-1, 1])];
        let MultiIndependence::Violation(w) = is_multi_linearly_independent(&v, &xs).unwrap()
        else {
            panic!("expected a violation");
        };
        assert_eq!(w.coefficients, vec![
            Scalar::one(q()),
            Scalar::one(q()),
        ]);
        assert_eq!(w.combination, vecq(&[0, 1]));
        assert_eq!(w.combination_count, 2);
        assert_eq!(w.min_count, 1);
    }

    #[test]
    fn dependent_vectors_are_flagged_as_such() {
        let v = plane_with_heavy_axis();
        let xs = vec![vecq(&[1, 0]), vecq(&[2, 0])];
        assert_eq!(
            is_multi_linearly_independent(&v, &xs).unwrap(),
            MultiIndependence::LinearlyDependent
        );
    }

    #[test]
    fn singletons_and_empty_families_are_independent() {
        let v = plane_with_heavy_axis();
        assert!(is_multi_linearly_independent(&v, &[]).unwrap().is_independent());
        assert!(is_multi_linearly_independent(&v, &[vecq(&[0, 3])])
            .unwrap()
            .is_independent());
        assert!(is_multi_linearly_independent(&v, &[vecq(&[2, 5])])
            .unwrap()
            .is_independent());
    }

    #[test]
    fn distinct_count_pair_is_independent() {
        // (1,0) has count 1, (0,1) has count 2; combinations using both
        // stay at count 1, and the axis alone is its own business.
        let v = plane_with_heavy_axis();
        let xs = vec![vecq(&[1, 0]), vecq(&[0, 1])];
        assert!(is_multi_linearly_independent(&v, &xs).unwrap().is_independent());
    }

    #[test]
    fn equal_counts_can_still_be_independent() {
        // Only the zero vector is heavy; every nonzero combination stays
        // at count 1.
        let v = MVSpace::from_spans(
            q(),
            2,
            6,
            vec![(6, vec![]), (1, vec![vecq(&[1, 0]), vecq(&[0, 1])])],
        )
        .unwrap();
        let xs = vec![vecq(&[1, 0]), vecq(&[0, 1])];
        assert!(is_multi_linearly_independent(&v, &xs).unwrap().is_independent());
    }

    #[test]
    fn sub_family_violations_disqualify_a_full_basis() {
        let v = heavy_plane_in_four_space();
        let b = vec![
            vecq(&[0, 0, 0, 1]),
            vecq(&[-1, 1, 1, 1]),
            vecq(&[1, -1, 1, 1]),
            vecq(&[1, 1, -1, 1]),
        ];
        // The middle pair sums into the heavy plane even though every
        // four-vector combination stays outside it.
        let MultiIndependence::Violation(w) = is_multi_linearly_independent(&v, &b).unwrap()
        else {
            panic!("expected a violation");
        };
        assert_eq!(w.combination_count, 5);
        assert_eq!(w.min_count, 2);
        assert!(w.coefficients[0].is_zero() && w.coefficients[3].is_zero());
        assert!(v.level(5).unwrap().contains(&w.combination).unwrap());

        let pair = vec![vecq(&[-1, 1, 1, 1]), vecq(&[1, -1, 1, 1])];
        let MultiIndependence::Violation(w) = is_multi_linearly_independent(&v, &pair).unwrap()
        else {
            panic!("expected a violation");
        };
        assert_eq!(w.coefficients, vec![Scalar::one(q()), Scalar::one(q())]);
        assert_eq!(w.combination, vecq(&[0, 0, 2, 2]));
        assert_eq!(w.combination_count, 5);
    }

    #[test]
    fn greedy_mbasis_walks_the_chain() {
        let v = MVSpace::from_spans(
            q(),
            2,
            6,
            vec![
                (5, vec![]),
                (3, vec![vecq(&[0, 1])]),
                (1, vec![vecq(&[1, 0]), vecq(&[0, 1])]),
            ],
        )
        .unwrap();
        let b = find_mbasis(&v);
        assert_eq!(b.vectors(), &[vecq(&[0, 1]), vecq(&[1, 0])]);
        assert_eq!(b.counts(), &[3, 1]);
        assert!(is_mbasis(&v, b.vectors()));

        let heavy = heavy_plane_in_four_space();
        let hb = find_mbasis(&heavy);
        assert_eq!(hb.counts(), &[5, 5, 2, 2]);
        assert!(is_mbasis(&heavy, hb.vectors()));
    }

    #[test]
    fn mbasis_pads_outside_the_support_with_count_zero() {
        let narrow = MVSpace::from_spans(q(), 2, 4, vec![(2, vec![vecq(&[0, 1])])]).unwrap();
        let b = find_mbasis(&narrow);
        assert_eq!(b.counts(), &[2, 0]);
        assert!(is_mbasis(&narrow, b.vectors()));
        assert_eq!(b.vectors()[1], vecq(&[1, 0]));
    }

    #[test]
    fn seeded_mbasis_is_still_an_mbasis() {
        use rand::SeedableRng;
        let v = heavy_plane_in_four_space();
        for seed in 0..5 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let b = find_mbasis_seeded(&v, &mut rng);
            assert!(is_mbasis(&v, b.vectors()), "seed {seed}");
            assert_eq!(basis_index(&v, b.vectors()).unwrap(), multi_index(&v));
        }
    }

    #[test]
    fn extension_prefers_the_deepest_reachable_level() {
        let v = MVSpace::from_spans(
            q(),
            2,
            6,
            vec![
                (5, vec![]),
                (3, vec![vecq(&[0, 1])]),
                (1, vec![vecq(&[1, 0]), vecq(&[0, 1])]),
            ],
        )
        .unwrap();
        let horizontal = Subspace::from_generators(q(), 2, &[vecq(&[1, 0])]).unwrap();
        assert_eq!(extend_step(&v, &horizontal).unwrap(), vecq(&[0, 1]));
        let vertical = Subspace::from_generators(q(), 2, &[vecq(&[0, 1])]).unwrap();
        assert_eq!(extend_step(&v, &vertical).unwrap(), vecq(&[1, 0]));
        assert!(matches!(
            extend_step(&v, &Subspace::full(q(), 2)),
            Err(Error::FullSpace)
        ));
    }

    #[test]
    fn extension_falls_back_to_count_zero_vectors() {
        let narrow = MVSpace::from_spans(q(), 2, 4, vec![(2, vec![vecq(&[0, 1])])]).unwrap();
        let vertical = Subspace::from_generators(q(), 2, &[vecq(&[0, 1])]).unwrap();
        let t = extend_step(&narrow, &vertical).unwrap();
        assert_eq!(t, vecq(&[1, 0]));
        assert_eq!(narrow.count(&t).unwrap(), 0);
    }

    #[test]
    fn recognizer_counts_levelwise() {
        let heavy = heavy_plane_in_four_space();
        let bad = vec![
            vecq(&[0, 0, 0, 1]),
            vecq(&[-1, 1, 1, 1]),
            vecq(&[1, -1, 1, 1]),
            vecq(&[1, 1, -1, 1]),
        ];
        assert!(!is_mbasis(&heavy, &bad));
        let good = vec![
            vecq(&[0, 0, 1, 0]),
            vecq(&[0, 0, 0, 1]),
            vecq(&[1, 0, 0, 0]),
            vecq(&[0, 1, 0, 0]),
        ];
        assert!(is_mbasis(&heavy, &good));
        // Not a basis at all.
        assert!(!is_mbasis(&heavy, &bad[..3]));
        assert!(!is_mbasis(
            &heavy,
            &[bad[0].clone(), bad[0].clone(), bad[1].clone(), bad[2].clone()]
        ));
    }

    #[test]
    fn indices_of_worked_spaces() {
        let heavy = heavy_plane_in_four_space();
        assert_eq!(multi_index(&heavy).entries(), &[(5, 2), (2, 2)]);

        let v = MVSpace::from_spans(
            q(),
            2,
            6,
            vec![
                (5, vec![]),
                (3, vec![vecq(&[0, 1])]),
                (1, vec![vecq(&[1, 0]), vecq(&[0, 1])]),
            ],
        )
        .unwrap();
        assert_eq!(multi_index(&v).entries(), &[(3, 1), (1, 1)]);

        let narrow = MVSpace::from_spans(q(), 2, 4, vec![(2, vec![vecq(&[0, 1])])]).unwrap();
        assert_eq!(multi_index(&narrow).entries(), &[(2, 1), (0, 1)]);

        let flat = MVSpace::from_spans(
            q(),
            3,
            7,
            vec![(7, vec![vecq(&[1, 0, 0]), vecq(&[0, 1, 0]), vecq(&[0, 0, 1])])],
        )
        .unwrap();
        assert_eq!(multi_index(&flat).entries(), &[(7, 3)]);
        assert_eq!(multi_index(&flat).weighted_sum(), 21);

        let empty = MVSpace::empty(q(), 2, 3).unwrap();
        assert_eq!(multi_index(&empty).entries(), &[(0, 2)]);
    }

    #[test]
    fn basis_index_is_a_count_histogram() {
        let heavy = heavy_plane_in_four_space();
        let b = vec![
            vecq(&[0, 0, 0, 1]),
            vecq(&[-1, 1, 1, 1]),
            vecq(&[1, -1, 1, 1]),
            vecq(&[1, 1, -1, 1]),
        ];
        assert_eq!(basis_index(&heavy, &b).unwrap().entries(), &[(5, 1), (2, 3)]);
        assert!(matches!(
            basis_index(&heavy, &b[..3]),
            Err(Error::NotABasis)
        ));
    }

    #[test]
    fn index_test_agrees_with_the_recognizer() {
        let heavy = heavy_plane_in_four_space();
        let bad = vec![
            vecq(&[0, 0, 0, 1]),
            vecq(&[-1, 1, 1, 1]),
            vecq(&[1, -1, 1, 1]),
            vecq(&[1, 1, -1, 1]),
        ];
        assert!(!mbasis_by_index_test(&heavy, &bad).unwrap());
        let good = vec![
            vecq(&[0, 0, 1, 0]),
            vecq(&[0, 1, 0, 0]),
            vecq(&[1, 0, 0, 0]),
            vecq(&[0, 0, 0, 1]),
        ];
        assert!(mbasis_by_index_test(&heavy, &good).unwrap());
        // A basis avoiding the heavy plane entirely misses count 5, so the
        // precondition fails.
        let off_plane = vec![
            vecq(&[1, 0, 0, 0]),
            vecq(&[0, 1, 0, 0]),
            vecq(&[1, 0, 1, 0]),
            vecq(&[0, 1, 0, 1]),
        ];
        assert!(matches!(
            mbasis_by_index_test(&heavy, &off_plane),
            Err(Error::CountRangeMismatch)
        ));
    }

    #[test]
    fn multi_basis_round_trip() {
        let heavy = heavy_plane_in_four_space();
        let b = find_mbasis(&heavy);
        let beta = b.to_multi_basis();
        assert_eq!(beta.to_mbasis().unwrap(), b);
        assert_eq!(beta.entries().len(), 4);
    }

    #[test]
    fn certification_rejects_non_mbases() {
        let heavy = heavy_plane_in_four_space();
        let bad = vec![
            vecq(&[0, 0, 0, 1]),
            vecq(&[-1, 1, 1, 1]),
            vecq(&[1, -1, 1, 1]),
            vecq(&[1, 1, -1, 1]),
        ];
        assert!(matches!(
            MBasis::certify(&heavy, &bad),
            Err(Error::NotABasis)
        ));
        let good = find_mbasis(&heavy);
        assert_eq!(MBasis::certify(&heavy, good.vectors()).unwrap(), good);
    }
}
