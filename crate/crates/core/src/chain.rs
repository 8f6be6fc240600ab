//! The level-chain representation of a multi vector space.
//!
//! A multiset over `F^m` whose counts respect the vector space operations
//! is completely described by a finite chain of strictly nested subspaces
//! `U_0 < U_1 < ... < U_k` with strictly decreasing counts
//! `n_0 > n_1 > ... > n_k >= 1`: an element's count is the count of the
//! deepest level containing it, and zero outside `U_k`. [`MVSpace`] stores
//! exactly that canonical chain, so value equality is semantic equality of
//! count functions. Elements outside the last level ("outside the
//! support") have count zero; a trailing count-zero level is never stored.

use crate::error::{Defect, Error, Violation};
use crate::linalg::Vector;
use crate::mset::{FiniteMSet, Universe};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

/// One level of the chain: a subspace and the count its new elements get.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub count: u32,
    pub subspace: Subspace,
}

/// A multi vector space in canonical level-chain form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MVSpace {
    field: Field,
    ambient: usize,
    omega: u32,
    chain: Vec<Level>,
}

impl MVSpace {
    /// Builds a space from `(count, level)` pairs. The pairs may arrive in
    /// any order; they are sorted by descending count and then validated.
    pub fn new(
        field: Field,
        ambient: usize,
        omega: u32,
        chain: Vec<(u32, Subspace)>,
    ) -> Result<MVSpace, Violation> {
        let mut chain: Vec<Level> = chain
            .into_iter()
            .map(|(count, subspace)| Level { count, subspace })
            .collect();
        chain.sort_by_key(|level| std::cmp::Reverse(level.count));
        let space = MVSpace {
            field,
            ambient,
            omega,
            chain,
        };
        space.validate()?;
        Ok(space)
    }

    /// Convenience constructor: levels given by generating sets.
    pub fn from_spans(
        field: Field,
        ambient: usize,
        omega: u32,
        levels: Vec<(u32, Vec<Vector>)>,
    ) -> Result<MVSpace, Error> {
        let mut chain = Vec::with_capacity(levels.len());
        for (count, generators) in levels {
            chain.push((count, Subspace::from_generators(field, ambient, &generators)?));
        }
        MVSpace::new(field, ambient, omega, chain).map_err(Error::from)
    }

    /// The empty space: every count is zero.
    pub fn empty(field: Field, ambient: usize, omega: u32) -> Result<MVSpace, Violation> {
        MVSpace::new(field, ambient, omega, Vec::new())
    }

    /// Checks the canonical-chain invariants, reporting the first violated
    /// clause: counts strictly decreasing within `1..=omega`, levels
    /// strictly nested and all over the same ambient space.
    pub fn validate(&self) -> Result<(), Violation> {
        if self.omega == 0 {
            return Err(Violation::OmegaZero);
        }
        for (position, level) in self.chain.iter().enumerate() {
            if level.subspace.field() != self.field {
                return Err(Violation::LevelField {
                    position,
                    expected: self.field,
                    got: level.subspace.field(),
                });
            }
            if level.subspace.ambient() != self.ambient {
                return Err(Violation::LevelDimension {
                    position,
                    expected: self.ambient,
                    got: level.subspace.ambient(),
                });
            }
            if level.count == 0 {
                return Err(Violation::ZeroCount { position });
            }
            if level.count > self.omega {
                return Err(Violation::CountAboveOmega {
                    position,
                    count: level.count,
                    omega: self.omega,
                });
            }
        }
        for position in 1..self.chain.len() {
            if self.chain[position - 1].count <= self.chain[position].count {
                return Err(Violation::CountsNotStrictlyDecreasing { position });
            }
            let inner = &self.chain[position - 1].subspace;
            let outer = &self.chain[position].subspace;
            let nested = inner
                .is_subspace_of(outer)
                .expect("levels share the ambient space");
            if !nested || inner.dim() == outer.dim() {
                return Err(Violation::NotStrictlyNested { position });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    /// The canonical chain, deepest (highest-count) level first.
    pub fn levels(&self) -> &[Level] {
        &self.chain
    }

    /// The count of the zero vector: the top count, or 0 for the empty space.
    pub fn theta_count(&self) -> u32 {
        self.chain.first().map_or(0, |l| l.count)
    }

    /// The largest count attained by a nonzero vector, or 0 if none is.
    pub fn top_nonzero_count(&self) -> u32 {
        self.chain
            .iter()
            .find(|l| l.subspace.dim() > 0)
            .map_or(0, |l| l.count)
    }

    /// The distinct counts present in the chain, descending.
    pub fn counts(&self) -> Vec<u32> {
        self.chain.iter().map(|l| l.count).collect()
    }

    /// The largest level, outside which every count is zero.
    pub fn support(&self) -> Subspace {
        self.chain
            .last()
            .map_or_else(|| Subspace::zero(self.field, self.ambient), |l| l.subspace.clone())
    }

    pub fn count(&self, x: &Vector) -> Result<u32, Error> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(self.field, x.field()));
        }
        if x.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: x.dim(),
            });
        }
        Ok(self.count_unchecked(x))
    }

    pub(crate) fn count_unchecked(&self, x: &Vector) -> u32 {
        for level in &self.chain {
            if level.subspace.contains_unchecked(x) {
                return level.count;
            }
        }
        0
    }

    /// The level set `{x : count(x) >= n}` as a subspace, for
    /// `1 <= n <= omega`. Above the top count the level set is empty and
    /// the zero subspace is returned.
    pub fn level(&self, n: u32) -> Result<Subspace, Error> {
        if n == 0 || n > self.omega {
            return Err(Error::LevelOutOfRange(n));
        }
        Ok(self
            .chain
            .iter()
            .take_while(|l| l.count >= n)
            .last()
            .map_or_else(|| Subspace::zero(self.field, self.ambient), |l| l.subspace.clone()))
    }

    /// The scalar multiple. A nonzero scalar permutes each level onto
    /// itself, so the space is unchanged; zero collapses everything onto
    /// the zero vector, which keeps the top count.
    pub fn scale(&self, lambda: &Scalar) -> Result<MVSpace, Error> {
        if lambda.field() != self.field {
            return Err(Error::FieldMismatch(self.field, lambda.field()));
        }
        if !lambda.is_zero() {
            return Ok(self.clone());
        }
        let chain = match self.chain.first() {
            None => Vec::new(),
            Some(top) => vec![(top.count, Subspace::zero(self.field, self.ambient))],
        };
        MVSpace::new(self.field, self.ambient, self.omega, chain).map_err(Error::from)
    }

    pub(crate) fn check_same_shape(&self, other: &MVSpace) -> Result<(), Error> {
        if other.field != self.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        if other.omega != self.omega {
            return Err(Error::OmegaMismatch(self.omega, other.omega));
        }
        Ok(())
    }

    /// Candidate counts for a binary operation: every count present in
    /// either chain, capped at the smaller zero-vector count, descending.
    fn merged_counts(&self, other: &MVSpace) -> Vec<u32> {
        let cap = self.theta_count().min(other.theta_count());
        let mut counts: Vec<u32> = self
            .counts()
            .into_iter()
            .chain(other.counts())
            .filter(|&n| n <= cap)
            .collect();
        counts.sort_unstable_by(|a, b| b.cmp(a));
        counts.dedup();
        counts
    }

    /// Builds a space from candidate levels listed in descending count
    /// order, dropping candidates that repeat the previous subspace so
    /// each distinct subspace keeps its highest count.
    pub(crate) fn from_candidates(
        field: Field,
        ambient: usize,
        omega: u32,
        candidates: Vec<(u32, Subspace)>,
    ) -> Result<MVSpace, Error> {
        let mut chain: Vec<(u32, Subspace)> = Vec::new();
        for (count, subspace) in candidates {
            if chain.last().map(|(_, s)| s) != Some(&subspace) {
                chain.push((count, subspace));
            }
        }
        MVSpace::new(field, ambient, omega, chain).map_err(Error::from)
    }

    fn canonicalize(&self, candidates: Vec<(u32, Subspace)>) -> Result<MVSpace, Error> {
        MVSpace::from_candidates(self.field, self.ambient, self.omega, candidates)
    }

    /// The multiset sum. An element's count is the best
    /// `min(count_a(x), count_b(y))` over decompositions into `x + y`,
    /// which levelwise is the subspace sum of the two level sets.
    pub fn sum(&self, other: &MVSpace) -> Result<MVSpace, Error> {
        self.check_same_shape(other)?;
        let mut candidates = Vec::new();
        for n in self.merged_counts(other) {
            let level = self.level(n)?.sum(&other.level(n)?)?;
            candidates.push((n, level));
        }
        self.canonicalize(candidates)
    }

    /// The multiset intersection: pointwise minimum of counts, which
    /// levelwise is the subspace intersection of the two level sets.
    pub fn intersect(&self, other: &MVSpace) -> Result<MVSpace, Error> {
        self.check_same_shape(other)?;
        let mut candidates = Vec::new();
        for n in self.merged_counts(other) {
            let level = self.level(n)?.intersection(&other.level(n)?)?;
            candidates.push((n, level));
        }
        self.canonicalize(candidates)
    }

    /// Recovers the canonical chain from a raw count table, verifying that
    /// the counts really are compatible with the vector space operations:
    /// `count(x+y) >= min(count(x), count(y))` for all pairs,
    /// `count(lambda x) >= count(x)` for all scalars, and every level set
    /// a subspace. The first failure is reported with a witness.
    pub fn from_count_function(m: &FiniteMSet) -> Result<MVSpace, Error> {
        let u = m.universe();
        let size = u.size();
        for xr in 0..size {
            let cx = m.count_rank(xr);
            if cx == 0 {
                continue;
            }
            let x = u.element(xr);
            for yr in xr..size {
                let cy = m.count_rank(yr);
                if cy == 0 {
                    continue;
                }
                let y = u.element(yr);
                let both = cx.min(cy);
                if m.count(&x.add(&y))? < both {
                    return Err(Defect::Addition { x, y }.into());
                }
            }
        }
        for lambda in u.scalars() {
            for xr in 0..size {
                let x = u.element(xr);
                if m.count(&x.scale(&lambda))? < m.count_rank(xr) {
                    return Err(Defect::Scaling { lambda, x }.into());
                }
            }
        }
        let mut values: Vec<u32> = m.counts().iter().copied().filter(|&c| c > 0).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        let mut chain = Vec::with_capacity(values.len());
        for n in values {
            let elements = m.level_set(n)?;
            let subspace = Subspace::from_generators(u.field(), u.dim(), &elements)?;
            let expected = u.p().pow(subspace.dim() as u32);
            if expected != elements.len() as u64 {
                return Err(Defect::LevelNotSubspace { count: n }.into());
            }
            chain.push((n, subspace));
        }
        MVSpace::new(u.field(), u.dim(), m.omega(), chain).map_err(Error::from)
    }

    /// Evaluates the chain into a full count table. Only possible over a
    /// prime field with a universe small enough to enumerate.
    pub fn to_count_function(&self) -> Result<FiniteMSet, Error> {
        let Field::Prime(p) = self.field else {
            return Err(Error::PrimeFieldOnly);
        };
        let u = Universe::new(p, self.ambient)?;
        FiniteMSet::from_fn(u, self.omega, |x| self.count_unchecked(x))
    }
}
