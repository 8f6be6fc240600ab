//! Subspaces of `F^m` in canonical form, and the maps between them.
//!
//! A `Subspace` stores the reduced row echelon basis of its row space, so
//! structural equality *is* subspace equality. Sums restack and re-reduce;
//! intersections use the Zassenhaus double-width trick; preimages and
//! coefficient spaces go through the annihilator of the target subspace.

use crate::error::Error;
use crate::linalg::{LinearMap, Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// How many field elements a prime-field enumeration may visit.
pub(crate) const ENUMERATION_BUDGET: u64 = 1 << 20;

/// A linear subspace of `F^m`, held as its RREF basis (no zero rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace of `F^m`.
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// All of `F^m`.
    pub fn full(field: Field, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| Vector::standard(field, ambient, i))
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of the given vectors.
    pub fn from_generators(
        field: Field,
        ambient: usize,
        generators: &[Vector],
    ) -> Result<Subspace, Error> {
        for g in generators {
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
            if g.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: g.dim(),
                });
            }
        }
        let mut m = Matrix::from_row_vectors(field, ambient, generators);
        let (rank, pivots) = m.rref_in_place();
        let rows = (0..rank).map(|r| m.row_vector(r)).collect();
        Ok(Subspace {
            field,
            ambient,
            rows,
            pivots,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical (RREF) basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_zero_space(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full_space(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_vector(&self, v: &Vector) -> Result<(), Error> {
        if v.field() != self.field {
            return Err(Error::FieldMismatch(self.field, v.field()));
        }
        if v.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.dim(),
            });
        }
        Ok(())
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if other.field != self.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// The residual of `v` after subtracting its projection onto the pivot
    /// coordinates; zero exactly when `v` lies in the subspace.
    fn reduce(&self, v: &Vector) -> Vector {
        let mut rest = v.clone();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let coeff = rest.coord(pivot).clone();
            if !coeff.is_zero() {
                rest = rest.sub(&row.scale(&coeff));
            }
        }
        rest
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, Error> {
        self.check_vector(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_same_ambient(other)?;
        Ok(self.rows.iter().all(|r| other.contains_unchecked(r)))
    }

    /// The smallest subspace containing both operands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_same_ambient(other)?;
        let mut generators = self.rows.clone();
        generators.extend(other.rows.iter().cloned());
        Subspace::from_generators(self.field, self.ambient, &generators)
    }

    /// The intersection, via the Zassenhaus double-width reduction: rows
    /// `(a | a)` for this subspace and `(b | 0)` for the other; reduced rows
    /// with zero left half carry an intersection basis in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_same_ambient(other)?;
        let m = self.ambient;
        let mut stacked = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            let mut row: Vec<Scalar> = a.coords().to_vec();
            row.extend(a.coords().iter().cloned());
            stacked.push(row);
        }
        for b in &other.rows {
            let mut row: Vec<Scalar> = b.coords().to_vec();
            row.extend(std::iter::repeat_n(Scalar::zero(self.field), m));
            stacked.push(row);
        }
        let mut wide = Matrix::from_rows(self.field, stacked);
        let (rank, _) = wide.rref_in_place();
        let mut generators = Vec::new();
        for r in 0..rank {
            let row = wide.row_vector(r);
            let left_zero = (0..m).all(|c| row.coord(c).is_zero());
            if left_zero {
                let right = Vector::new(self.field, row.coords()[m..].to_vec());
                generators.push(right);
            }
        }
        Subspace::from_generators(self.field, m, &generators)
    }

    /// A basis for the annihilator `{ n : n . s = 0 for all s here }`,
    /// returned as a matrix whose kernel is exactly this subspace.
    fn annihilator_matrix(&self) -> Matrix {
        let basis_matrix = Matrix::from_row_vectors(self.field, self.ambient, &self.rows);
        let annihilator = LinearMap::new(basis_matrix).kernel();
        Matrix::from_row_vectors(self.field, self.ambient, &annihilator.rows)
    }

    /// Every coordinate is nonzero somewhere in the subspace; equivalently
    /// the subspace lies in no coordinate hyperplane. Over a field with
    /// more elements than the ambient dimension this is exactly the
    /// condition for a vector with all coordinates nonzero to exist.
    pub fn touches_every_coordinate(&self) -> bool {
        (0..self.ambient).all(|c| self.rows.iter().any(|r| !r.coord(c).is_zero()))
    }

    /// A vector in the subspace with every coordinate nonzero, if one
    /// exists. Only available over the rationals; a prime field can be
    /// small enough for the coordinate hyperplanes to cover the subspace,
    /// so existence must be decided by enumeration there.
    ///
    /// The witness is deterministic: the first `t = 1, 2, ...` for which
    /// `sum_j t^j row_j` avoids every coordinate hyperplane. Each
    /// coordinate is a nonzero polynomial in `t` of degree below the
    /// subspace dimension, so the sweep terminates within
    /// `ambient * (dim - 1) + 1` steps.
    pub fn all_nonzero_vector(&self) -> Result<Option<Vector>, Error> {
        if !self.field.is_rational() {
            return Err(Error::RationalOnly);
        }
        if self.ambient == 0 {
            return Ok(Some(Vector::zero(self.field, 0)));
        }
        if !self.touches_every_coordinate() {
            return Ok(None);
        }
        let limit = self.ambient * self.dim() + 1;
        for t in 1..=limit as i64 {
            let t = Scalar::from_integer(self.field, t);
            let mut power = Scalar::one(self.field);
            let mut candidate = Vector::zero(self.field, self.ambient);
            for row in &self.rows {
                candidate = candidate.add(&row.scale(&power));
                power = power.mul(&t);
            }
            if (0..self.ambient).all(|c| !candidate.coord(c).is_zero()) {
                return Ok(Some(candidate));
            }
        }
        unreachable!("sweep bound exceeded despite every coordinate being touched")
    }

    /// All elements of the subspace, enumerated over a prime field in a
    /// fixed order (coefficient tuples over the basis, last basis vector
    /// fastest).
    pub fn elements(&self) -> Result<Vec<Vector>, Error> {
        let Field::Prime(p) = self.field else {
            return Err(Error::PrimeFieldOnly);
        };
        let total = p.checked_pow(self.dim() as u32);
        match total {
            Some(t) if t <= ENUMERATION_BUDGET => {}
            _ => return Err(Error::BudgetExceeded(total.unwrap_or(u64::MAX))),
        }
        let total = total.unwrap();
        let mut out = Vec::with_capacity(total as usize);
        for mut code in 0..total {
            let mut v = Vector::zero(self.field, self.ambient);
            for row in self.rows.iter().rev() {
                let digit = (code % p) as i64;
                code /= p;
                if digit != 0 {
                    v = v.add(&row.scale(&Scalar::from_integer(self.field, digit)));
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

impl LinearMap {
    /// The kernel `{ x : f(x) = 0 }`, read off the RREF of the matrix.
    pub fn kernel(&self) -> Subspace {
        let field = self.field();
        let n = self.domain_dim();
        let mut m = self.matrix().clone();
        let (rank, pivots) = m.rref_in_place();
        let mut generators = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::standard(field, n, free);
            for (row, &pivot) in pivots.iter().enumerate().take(rank) {
                let entry = m.at(row, free);
                if !entry.is_zero() {
                    v = v.sub(&Vector::standard(field, n, pivot).scale(entry));
                }
            }
            generators.push(v);
        }
        Subspace::from_generators(field, n, &generators)
            .expect("kernel generators live in the domain")
    }

    /// The image `f(F^n)`, the span of the matrix columns.
    pub fn image(&self) -> Subspace {
        let columns: Vec<Vector> = (0..self.domain_dim())
            .map(|c| {
                Vector::new(
                    self.field(),
                    (0..self.codomain_dim())
                        .map(|r| self.matrix().at(r, c).clone())
                        .collect(),
                )
            })
            .collect();
        Subspace::from_generators(self.field(), self.codomain_dim(), &columns)
            .expect("columns live in the codomain")
    }

    /// The preimage `{ x : f(x) in target }`.
    pub fn preimage(&self, target: &Subspace) -> Result<Subspace, Error> {
        if target.field() != self.field() {
            return Err(Error::FieldMismatch(self.field(), target.field()));
        }
        if target.ambient() != self.codomain_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.codomain_dim(),
                got: target.ambient(),
            });
        }
        // x lands in the target iff N f(x) = 0, where the rows of N span
        // the target's annihilator.
        let n = target.annihilator_matrix();
        Ok(LinearMap::new(n.mul(self.matrix())).kernel())
    }
}

/// The space of coefficient vectors `a` with `sum_i a_i x_i` inside
/// `target`. The `x_i` must be linearly independent.
pub fn coefficient_space(xs: &[Vector], target: &Subspace) -> Result<Subspace, Error> {
    let field = target.field();
    for x in xs {
        if x.field() != field {
            return Err(Error::FieldMismatch(field, x.field()));
        }
        if x.dim() != target.ambient() {
            return Err(Error::DimensionMismatch {
                expected: target.ambient(),
                got: x.dim(),
            });
        }
    }
    let rows = Matrix::from_row_vectors(field, target.ambient(), xs);
    if rows.rank() < xs.len() {
        return Err(Error::LinearlyDependent);
    }
    // Columns of X are the x_i; a qualifies iff N X a = 0.
    let x_matrix = rows.transpose();
    let combination = LinearMap::new(x_matrix);
    combination.preimage(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn vecq(coords: &[i64]) -> Vector {
        Vector::from_integers(q(), coords)
    }

    fn span(ambient: usize, gens: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = gens.iter().map(|g| vecq(g)).collect();
        Subspace::from_generators(q(), ambient, &vs).unwrap()
    }

    #[test]
    fn generators_are_canonicalized() {
        let s = span(2, &[&[2, 4], &[1, 2]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[vecq(&[1, 2])]);
        let t = span(2, &[&[1, 0], &[-1, 1]]);
        assert_eq!(t.dim(), 2);
        assert_eq!(t, Subspace::full(q(), 2));
        assert_eq!(span(3, &[]), Subspace::zero(q(), 3));
        assert_eq!(span(2, &[&[0, 0]]), Subspace::zero(q(), 2));
    }

    #[test]
    fn membership() {
        let line = span(2, &[&[1, 2]]);
        assert!(line.contains(&vecq(&[2, 4])).unwrap());
        assert!(line.contains(&vecq(&[0, 0])).unwrap());
        assert!(!line.contains(&vecq(&[1, 1])).unwrap());
        assert!(Subspace::full(q(), 2).contains(&vecq(&[7, -3])).unwrap());
        assert!(!Subspace::zero(q(), 2).contains(&vecq(&[0, 1])).unwrap());
        assert!(matches!(
            line.contains(&vecq(&[1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inclusion_order() {
        let line = span(2, &[&[1, 2]]);
        let full = Subspace::full(q(), 2);
        let zero = Subspace::zero(q(), 2);
        assert!(zero.is_subspace_of(&line).unwrap());
        assert!(line.is_subspace_of(&full).unwrap());
        assert!(line.is_subspace_of(&line).unwrap());
        assert!(!full.is_subspace_of(&line).unwrap());
    }

    #[test]
    fn sums() {
        let x = span(2, &[&[1, 0]]);
        let y = span(2, &[&[0, 1]]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(q(), 2));
        let parallel = span(2, &[&[1, 2]]).sum(&span(2, &[&[2, 4]])).unwrap();
        assert_eq!(parallel, span(2, &[&[1, 2]]));
    }

    #[test]
    fn intersections() {
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersection(&b).unwrap(), span(3, &[&[0, 1, 0]]));
        let lines = span(2, &[&[1, 2]]).intersection(&span(2, &[&[1, 1]])).unwrap();
        assert_eq!(lines, Subspace::zero(q(), 2));
        let meet = a.intersection(&b).unwrap();
        assert!(meet.is_subspace_of(&a).unwrap());
        assert!(meet.is_subspace_of(&b).unwrap());
    }

    #[test]
    fn intersection_dimension_law() {
        // dim(A) + dim(B) = dim(A+B) + dim(A of B) on a worked pair.
        let a = span(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let b = span(3, &[&[1, 1, 1]]);
        let s = a.sum(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn kernels() {
        let f = LinearMap::new(Matrix::from_integer_rows(q(), &[&[1, 1]]));
        assert_eq!(f.kernel(), span(2, &[&[1, -1]]));
        assert_eq!(LinearMap::identity(q(), 3).kernel(), Subspace::zero(q(), 3));
        assert_eq!(LinearMap::zero_map(q(), 2, 3).kernel(), Subspace::full(q(), 3));
    }

    #[test]
    fn images() {
        let projection = LinearMap::new(Matrix::from_integer_rows(q(), &[&[1, 0]]));
        assert_eq!(projection.image(), Subspace::full(q(), 1));
        assert_eq!(
            LinearMap::zero_map(q(), 2, 3).image(),
            Subspace::zero(q(), 2)
        );
        let embed = LinearMap::new(Matrix::from_integer_rows(q(), &[&[1, 0], &[0, 1], &[0, 0]]));
        assert_eq!(embed.image(), span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn preimages() {
        // f(x,y) = (x, 0)
        let f = LinearMap::new(Matrix::from_integer_rows(q(), &[&[1, 0], &[0, 0]]));
        assert_eq!(
            f.preimage(&span(2, &[&[1, 0]])).unwrap(),
            Subspace::full(q(), 2)
        );
        assert_eq!(
            f.preimage(&span(2, &[&[0, 1]])).unwrap(),
            span(2, &[&[0, 1]])
        );
        assert_eq!(f.preimage(&Subspace::zero(q(), 2)).unwrap(), f.kernel());
        assert_eq!(
            f.preimage(&Subspace::full(q(), 2)).unwrap(),
            Subspace::full(q(), 2)
        );
    }

    #[test]
    fn preimage_image_containment() {
        let f = LinearMap::new(Matrix::from_integer_rows(q(), &[&[1, 2, 0], &[0, 1, 1]]));
        let target = span(2, &[&[1, 1]]);
        let pre = f.preimage(&target).unwrap();
        for b in pre.basis() {
            let image_point = f.apply(b);
            assert!(target.contains(&image_point).unwrap());
            assert!(f.image().contains(&image_point).unwrap());
        }
    }

    #[test]
    fn coefficient_spaces() {
        let xs = vec![vecq(&[1, 0]), vecq(&[-1, 1])];
        let w = coefficient_space(&xs, &span(2, &[&[0, 1]])).unwrap();
        assert_eq!(w, span(2, &[&[1, 1]]));

        let zero_target = coefficient_space(&xs, &Subspace::zero(q(), 2)).unwrap();
        assert_eq!(zero_target, Subspace::zero(q(), 2));

        let dependent = vec![vecq(&[1, 0]), vecq(&[2, 0])];
        assert!(matches!(
            coefficient_space(&dependent, &span(2, &[&[0, 1]])),
            Err(Error::LinearlyDependent)
        ));
    }

    #[test]
    fn all_nonzero_vectors_over_q() {
        let diag = span(2, &[&[1, 1]]);
        let w = diag.all_nonzero_vector().unwrap().unwrap();
        assert!(!w.coord(0).is_zero() && !w.coord(1).is_zero());
        assert!(diag.contains(&w).unwrap());

        assert_eq!(span(2, &[&[1, 0]]).all_nonzero_vector().unwrap(), None);
        assert!(Subspace::full(q(), 2).all_nonzero_vector().unwrap().is_some());
        assert_eq!(
            span(3, &[&[1, 0, 0], &[0, 0, 1]]).all_nonzero_vector().unwrap(),
            None
        );
        let twisted = span(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let w = twisted.all_nonzero_vector().unwrap().unwrap();
        assert!((0..3).all(|c| !w.coord(c).is_zero()));
        assert!(twisted.contains(&w).unwrap());
    }

    #[test]
    fn all_nonzero_vector_rejects_prime_fields() {
        let s = Subspace::full(Field::Prime(2), 2);
        assert!(matches!(s.all_nonzero_vector(), Err(Error::RationalOnly)));
    }

    #[test]
    fn element_enumeration_over_gf2() {
        let f = Field::Prime(2);
        let s = Subspace::full(f, 2);
        let elems = s.elements().unwrap();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], Vector::zero(f, 2));
        let line = Subspace::from_generators(f, 2, &[Vector::from_integers(f, &[1, 1])]).unwrap();
        assert_eq!(line.elements().unwrap().len(), 2);
        assert!(matches!(
            Subspace::full(q(), 2).elements(),
            Err(Error::PrimeFieldOnly)
        ));
    }
}
