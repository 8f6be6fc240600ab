//! Finite multisets over small prime-field universes.
//!
//! A [`FiniteMSet`] stores the full count table of a multiset drawn from
//! `GF(p)^n`, with counts capped by `omega`. Everything here computes
//! straight from the definitions — count tables, pointwise lattice
//! operations, the sup-min convolution for multiset sums — with no level
//! chains involved, which is exactly what makes this module usable as
//! ground truth for the chain-based representation.

use crate::error::Error;
use crate::linalg::Vector;
use crate::scalar::{is_prime, Field, Scalar};

/// Hard cap on universe size: `p^n` may not exceed `3^5`.
pub const UNIVERSE_BUDGET: u64 = 243;

/// The finite universe `GF(p)^n`, with a fixed enumeration order
/// (base-`p` digits, first coordinate most significant).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    p: u64,
    dim: usize,
    size: u64,
}

impl Universe {
    pub fn new(p: u64, dim: usize) -> Result<Universe, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let size = p
            .checked_pow(dim as u32)
            .filter(|&s| s <= UNIVERSE_BUDGET)
            .ok_or(Error::BudgetExceeded(UNIVERSE_BUDGET))?;
        Ok(Universe { p, dim, size })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The number of elements, `p^dim`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn field(&self) -> Field {
        Field::Prime(self.p)
    }

    /// The element with the given enumeration rank.
    pub fn element(&self, rank: u64) -> Vector {
        assert!(rank < self.size, "rank {rank} out of range");
        let mut digits = vec![0i64; self.dim];
        let mut rest = rank;
        for i in (0..self.dim).rev() {
            digits[i] = (rest % self.p) as i64;
            rest /= self.p;
        }
        Vector::from_integers(self.field(), &digits)
    }

    /// The enumeration rank of an element.
    pub fn rank(&self, v: &Vector) -> Result<u64, Error> {
        if v.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), v.field()));
        }
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        let mut rank = 0u64;
        for c in v.coords() {
            rank = rank * self.p + c.residue().expect("prime-field coordinate");
        }
        Ok(rank)
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.size).map(|r| self.element(r))
    }

    /// All field scalars `0, 1, ..., p-1`.
    pub fn scalars(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.p).map(|v| Scalar::from_integer(self.field(), v as i64))
    }
}

/// A multiset over a finite universe, as a dense count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMSet {
    universe: Universe,
    omega: u32,
    counts: Vec<u32>,
}

impl FiniteMSet {
    pub fn new(universe: Universe, omega: u32, counts: Vec<u32>) -> Result<FiniteMSet, Error> {
        if omega == 0 {
            return Err(Error::CountAboveOmega { count: 0, omega: 0 });
        }
        if counts.len() as u64 != universe.size() {
            return Err(Error::DimensionMismatch {
                expected: universe.size() as usize,
                got: counts.len(),
            });
        }
        if let Some(&count) = counts.iter().find(|&&c| c > omega) {
            return Err(Error::CountAboveOmega { count, omega });
        }
        Ok(FiniteMSet {
            universe,
            omega,
            counts,
        })
    }

    /// The empty multiset (all counts zero).
    pub fn empty(universe: Universe, omega: u32) -> Result<FiniteMSet, Error> {
        FiniteMSet::new(universe, omega, vec![0; universe.size() as usize])
    }

    /// Builds a multiset by evaluating `f` on every element.
    pub fn from_fn(
        universe: Universe,
        omega: u32,
        f: impl Fn(&Vector) -> u32,
    ) -> Result<FiniteMSet, Error> {
        let counts = universe.elements().map(|x| f(&x)).collect();
        FiniteMSet::new(universe, omega, counts)
    }

    /// The multiset with count `n` on the listed elements and 0 elsewhere.
    pub fn constant_on(
        universe: Universe,
        omega: u32,
        elements: &[Vector],
        n: u32,
    ) -> Result<FiniteMSet, Error> {
        let mut m = FiniteMSet::empty(universe, omega)?;
        if n > omega {
            return Err(Error::CountAboveOmega { count: n, omega });
        }
        for x in elements {
            let rank = universe.rank(x)? as usize;
            m.counts[rank] = n;
        }
        Ok(m)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, x: &Vector) -> Result<u32, Error> {
        Ok(self.counts[self.universe.rank(x)? as usize])
    }

    pub fn count_rank(&self, rank: u64) -> u32 {
        self.counts[rank as usize]
    }

    pub fn max_count(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// The elements with count at least `n`, in enumeration order.
    /// `n` must be at least 1.
    pub fn level_set(&self, n: u32) -> Result<Vec<Vector>, Error> {
        if n == 0 || n > self.omega {
            return Err(Error::LevelOutOfRange(n));
        }
        Ok(self
            .universe
            .elements()
            .filter(|x| self.counts[self.universe.rank(x).unwrap() as usize] >= n)
            .collect())
    }

    fn check_same_shape(&self, other: &FiniteMSet) -> Result<(), Error> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        if self.omega != other.omega {
            return Err(Error::OmegaMismatch(self.omega, other.omega));
        }
        Ok(())
    }

    /// Pointwise maximum of counts.
    pub fn union(&self, other: &FiniteMSet) -> Result<FiniteMSet, Error> {
        self.check_same_shape(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.max(b))
            .collect();
        FiniteMSet::new(self.universe, self.omega, counts)
    }

    /// Pointwise minimum of counts.
    pub fn intersection(&self, other: &FiniteMSet) -> Result<FiniteMSet, Error> {
        self.check_same_shape(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        FiniteMSet::new(self.universe, self.omega, counts)
    }

    /// The multiset sum: `count(z)` is the best `min(count_a(x), count_b(y))`
    /// over all decompositions `z = x + y`.
    pub fn sum(&self, other: &FiniteMSet) -> Result<FiniteMSet, Error> {
        self.check_same_shape(other)?;
        let size = self.universe.size();
        let mut counts = vec![0u32; size as usize];
        for xr in 0..size {
            let ca = self.counts[xr as usize];
            if ca == 0 {
                continue;
            }
            let x = self.universe.element(xr);
            for yr in 0..size {
                let cb = other.counts[yr as usize];
                if cb == 0 {
                    continue;
                }
                let z = x.add(&self.universe.element(yr));
                let zr = self.universe.rank(&z).unwrap() as usize;
                counts[zr] = counts[zr].max(ca.min(cb));
            }
        }
        FiniteMSet::new(self.universe, self.omega, counts)
    }

    /// The scalar multiple: for nonzero `lambda`, counts are permuted along
    /// `x -> lambda x`; for `lambda = 0` everything collapses onto the zero
    /// vector, which receives the largest count present.
    pub fn scale(&self, lambda: &Scalar) -> Result<FiniteMSet, Error> {
        if lambda.field() != self.universe.field() {
            return Err(Error::FieldMismatch(self.universe.field(), lambda.field()));
        }
        let size = self.universe.size();
        let mut counts = vec![0u32; size as usize];
        if lambda.is_zero() {
            let zero_rank = 0usize; // the zero vector enumerates first
            counts[zero_rank] = self.max_count();
        } else {
            for xr in 0..size {
                let scaled = self.universe.element(xr).scale(lambda);
                let target = self.universe.rank(&scaled).unwrap() as usize;
                counts[target] = self.counts[xr as usize];
            }
        }
        FiniteMSet::new(self.universe, self.omega, counts)
    }

    /// The image multiset over `codomain`: each point of the codomain
    /// receives the largest count among its preimages.
    pub fn image(
        &self,
        f: impl Fn(&Vector) -> Vector,
        codomain: Universe,
    ) -> Result<FiniteMSet, Error> {
        let mut counts = vec![0u32; codomain.size() as usize];
        for xr in 0..self.universe.size() {
            let y = f(&self.universe.element(xr));
            let yr = codomain.rank(&y)? as usize;
            counts[yr] = counts[yr].max(self.counts[xr as usize]);
        }
        FiniteMSet::new(codomain, self.omega, counts)
    }

    /// The inverse image over `domain`: `count(x) = count_self(f(x))`.
    pub fn preimage(
        &self,
        f: impl Fn(&Vector) -> Vector,
        domain: Universe,
    ) -> Result<FiniteMSet, Error> {
        let mut counts = vec![0u32; domain.size() as usize];
        for xr in 0..domain.size() {
            let y = f(&domain.element(xr));
            counts[xr as usize] = self.counts[self.universe.rank(&y)? as usize];
        }
        FiniteMSet::new(domain, self.omega, counts)
    }
}
