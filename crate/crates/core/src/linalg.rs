//! Vectors, matrices and reduced row echelon form over an exact field.
//!
//! Reduced row echelon form (RREF) is the canonical form everything else
//! leans on: two row spaces are equal exactly when their RREFs are equal,
//! so subspace equality, membership and the lattice operations all reduce
//! to it. No floating point is involved anywhere.

use crate::scalar::{Field, Scalar};
use std::fmt;

/// A coordinate vector over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Field, coords: Vec<Scalar>) -> Vector {
        for c in &coords {
            assert!(
                c.field() == field,
                "vector coordinate field mismatch: {} in a {} vector",
                c.field(),
                field
            );
        }
        Vector { field, coords }
    }

    /// Builds a vector from integer coordinates, reduced into `field`.
    pub fn from_integers(field: Field, coords: &[i64]) -> Vector {
        Vector {
            field,
            coords: coords.iter().map(|&n| Scalar::from_integer(field, n)).collect(),
        }
    }

    pub fn zero(field: Field, dim: usize) -> Vector {
        Vector {
            field,
            coords: vec![Scalar::zero(field); dim],
        }
    }

    /// The standard basis vector with a 1 in position `index`.
    pub fn standard(field: Field, dim: usize, index: usize) -> Vector {
        assert!(index < dim, "standard basis index {index} out of range for dimension {dim}");
        let mut v = Vector::zero(field, dim);
        v.coords[index] = Scalar::one(field);
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Vector) {
        assert!(self.field == other.field, "vector field mismatch");
        assert!(
            self.dim() == other.dim(),
            "vector dimension mismatch: {} vs {}",
            self.dim(),
            other.dim()
        );
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.check_compatible(other);
        Vector {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.check_compatible(other);
        Vector {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, lambda: &Scalar) -> Vector {
        assert!(lambda.field() == self.field, "scale field mismatch");
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| lambda.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(Scalar::neg).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for row in &rows {
            assert!(row.len() == ncols, "ragged matrix rows");
            for c in row {
                assert!(c.field() == field, "matrix entry field mismatch");
                data.push(c.clone());
            }
        }
        Matrix {
            field,
            rows: rows.len(),
            cols: ncols,
            data,
        }
    }

    /// Stacks vectors as the rows of a matrix.
    pub fn from_row_vectors(field: Field, cols: usize, vectors: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert!(v.field() == field && v.dim() == cols, "row vector mismatch");
            data.extend(v.coords().iter().cloned());
        }
        Matrix {
            field,
            rows: vectors.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix from integer entries, reduced into `field`.
    pub fn from_integer_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_integer(field, n)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(v.field() == self.field, "matrix entry field mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::new(
            self.field,
            self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        )
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.field == other.field, "matrix field mismatch");
        assert!(
            self.cols == other.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Scalar::zero(self.field);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert!(v.field() == self.field, "apply field mismatch");
        assert!(
            v.dim() == self.cols,
            "apply dimension mismatch: {}-vector into {} columns",
            v.dim(),
            self.cols
        );
        let mut coords = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero(self.field);
            for c in 0..self.cols {
                acc = acc.add(&self.at(r, c).mul(v.coord(c)));
            }
            coords.push(acc);
        }
        Vector::new(self.field, coords)
    }

    /// Reduces in place to reduced row echelon form.
    /// Returns the rank and the pivot columns in increasing order.
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self.at(pivot_row, col).inverse();
            self.scale_row(pivot_row, &inv);
            for r in 0..self.rows {
                if r != pivot_row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).neg();
                    self.add_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (pivot_row, pivots)
    }

    /// The reduced row echelon form and the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let (rank, _) = m.rref_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).mul(by);
            self.set(r, c, v);
        }
    }

    /// row[target] += factor * row[source]
    fn add_scaled_row(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(target, c).add(&self.at(source, c).mul(factor));
            self.set(target, c, v);
        }
    }
}

/// A linear map represented by its matrix: `v` maps to `matrix * v`,
/// so the domain has `ncols` coordinates and the codomain `nrows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> LinearMap {
        LinearMap { matrix }
    }

    pub fn identity(field: Field, n: usize) -> LinearMap {
        LinearMap::new(Matrix::identity(field, n))
    }

    pub fn zero_map(field: Field, codomain: usize, domain: usize) -> LinearMap {
        LinearMap::new(Matrix::zero(field, codomain, domain))
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }
}
