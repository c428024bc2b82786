//! Dense matrices over arbitrary-precision rationals.
//!
//! Everything here is exact: reduction uses true rational arithmetic with
//! first-nonzero pivoting (no magnitude heuristics are meaningful over ℚ),
//! so ranks, kernels and inverses are certificates rather than estimates.
//!
//! Row/column convention: a matrix acts on coordinate columns, `(M v)_r =
//! Σ_c M[r,c] v[c]`. Where a square matrix must travel as a flat vector
//! (operators living inside kernel computations), the flattening is
//! **column-major**: entry `(r, c)` of an `n×n` matrix sits at flat index
//! `c*n + r`. That convention is fixed across the whole crate.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::{format_rat, Rat};

/// Errors from shape-checked matrix and subspace operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// An operation required a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Operand shapes are incompatible (`expected` vs `found` describe the
    /// mismatching dimension).
    DimMismatch { expected: usize, found: usize },
    /// Two subspaces live in coordinate spaces of different dimension.
    AmbientMismatch { left: usize, right: usize },
    /// A basis change requires an invertible matrix.
    NotInvertible,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinalgError::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            LinalgError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ: {left} vs {right}")
            }
            LinalgError::NotInvertible => write!(f, "matrix is not invertible"),
        }
    }
}

/// A dense `rows × cols` matrix of rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            data.extend(row);
        }
        RatMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    /// Builds a matrix from integer rows (test and table convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rational::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` into entry `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, v: &Rat) {
        let cell = &mut self.data[r * self.cols + c];
        *cell += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Column `c` as a vector of length `rows`.
    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row `r` as a vector of length `cols`.
    pub fn row(&self, r: usize) -> Vec<Rat> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    /// Matrix sum. Panics on shape mismatch (programmer error).
    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix difference. Panics on shape mismatch (programmer error).
    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Entry-wise scaling.
    pub fn scale(&self, k: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Matrix product. Panics on shape mismatch (programmer error).
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let prod = a * b;
                        out.add_at(r, c, &prod);
                    }
                }
            }
        }
        out
    }

    /// Applies the matrix to a coordinate column, `v ↦ M v`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "vector length differs from cols");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &RatMatrix) -> RatMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Stacks `self` on top of `other` (column counts must agree).
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        data.extend(self.data.iter().cloned());
        data.extend(other.data.iter().cloned());
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self` (row counts must agree).
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = RatMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Pivoting picks the first row with a nonzero entry in the current
    /// column (exact arithmetic needs no numerical pivoting), so the result
    /// is fully deterministic: pivot columns are strictly increasing, pivot
    /// entries are 1 and are the only nonzero entries in their columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for c in 0..m.cols {
            if pr == m.rows {
                break;
            }
            // First nonzero entry in column c at or below row pr.
            let Some(src) = (pr..m.rows).find(|&r| !m.at(r, c).is_zero()) else {
                continue;
            };
            if src != pr {
                for cc in 0..m.cols {
                    m.data.swap(src * m.cols + cc, pr * m.cols + cc);
                }
            }
            let inv = {
                let p = m.at(pr, c);
                Rat::one() / p
            };
            for cc in c..m.cols {
                let v = m.at(pr, cc) * &inv;
                m.set(pr, cc, v);
            }
            for r in 0..m.rows {
                if r == pr || m.at(r, c).is_zero() {
                    continue;
                }
                let factor = m.at(r, c).clone();
                for cc in c..m.cols {
                    let v = m.at(r, cc) - &factor * m.at(pr, cc);
                    m.set(r, cc, v);
                }
            }
            pivots.push(c);
            pr += 1;
        }
        (m, pivots)
    }

    /// Rank = number of pivots of the reduced echelon form.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : M v = 0}`.
    ///
    /// Returns a `cols × nullity` matrix whose columns are the basis
    /// vectors, one per free column of the echelon form in increasing
    /// order, each scaled so its first nonzero coordinate is 1. The
    /// construction is deterministic, so kernel bases are diff-able.
    pub fn kernel_basis(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (row_i, &p) in pivots.iter().enumerate() {
                if p < f {
                    v[p] = -r.at(row_i, f).clone();
                }
            }
            // Normalize the leading coordinate to 1.
            if let Some(k) = v.iter().position(|x| !x.is_zero()) {
                let inv = Rat::one() / &v[k];
                for x in v.iter_mut() {
                    *x *= &inv;
                }
            }
            for (i, x) in v.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        out
    }

    /// Exact inverse, or `None` when singular. Errors when not square.
    pub fn inverse(&self) -> Result<Option<RatMatrix>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let (red, pivots) = self.hstack(&RatMatrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Ok(None);
        }
        let mut inv = RatMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.at(r, n + c).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Whether the matrix is nilpotent (`M^n = 0` for `n = rows`).
    ///
    /// Squares repeatedly — `⌈log2 n⌉` multiplications — since `M^n = 0`
    /// iff `M^(2^k) = 0` once `2^k ≥ n`. Errors when not square.
    pub fn is_nilpotent(&self) -> Result<bool, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(true);
        }
        let mut p = self.clone();
        let mut reach = 1usize;
        while reach < n {
            if p.is_zero() {
                return Ok(true);
            }
            p = p.mul(&p);
            reach *= 2;
        }
        Ok(p.is_zero())
    }

    /// Column-major flattening of a square matrix: `(r, c) ↦ c*n + r`.
    pub fn flatten_col_major(&self) -> Vec<Rat> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.at(r, c).clone());
            }
        }
        v
    }

    /// Inverse of [`flatten_col_major`](Self::flatten_col_major) for an
    /// `n×n` matrix.
    pub fn from_flat_col_major(n: usize, flat: &[Rat]) -> RatMatrix {
        assert_eq!(flat.len(), n * n, "flat vector length is not n*n");
        let mut m = RatMatrix::zeros(n, n);
        for c in 0..n {
            for r in 0..n {
                m.set(r, c, flat[c * n + r].clone());
            }
        }
        m
    }

    /// Rows rendered as `p/q` strings (presentation layers consume this).
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| format_rat(self.at(r, c))).collect())
            .collect()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", format_rat(self.at(r, c)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn product_of_small_matrices() {
        let a = RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = RatMatrix::from_int_rows(&[&[5, 6], &[7, 8]]);
        let expect = RatMatrix::from_int_rows(&[&[19, 22], &[43, 50]]);
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn rref_collapses_dependent_rows() {
        // Hand reduction: rows (2,4) and (1,2) are proportional, so one
        // pivot at column 0 and the reduced form [[1,2],[0,0]].
        let m = RatMatrix::from_int_rows(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, RatMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let (r, pivots) = RatMatrix::identity(3).rref();
        assert_eq!(r, RatMatrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_fraction_entries() {
        // [[1/2, 1], [1, 3]] reduces to the identity: rank 2.
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ]);
        let (r, pivots) = m.rref();
        assert_eq!(r, RatMatrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_two_pivot_matrix() {
        // Kernel of [[1,1,0],[0,0,1]] is spanned by (1,-1,0) after the
        // leading-one normalization.
        let m = RatMatrix::from_int_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 3);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec![rat_int(1), rat_int(-1), rat_int(0)]);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn kernel_of_zero_constraints_is_everything() {
        let m = RatMatrix::zeros(0, 4);
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k, RatMatrix::identity(4));
    }

    #[test]
    fn kernel_of_full_rank_is_trivial() {
        let k = RatMatrix::identity(3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));
    }

    #[test]
    fn inverse_two_by_two() {
        // [[1,2],[3,4]]⁻¹ = [[-2,1],[3/2,-1/2]] by the adjugate formula.
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap().unwrap();
        let expect = RatMatrix::from_rows(vec![
            vec![rat_int(-2), rat_int(1)],
            vec![rat(3, 2), rat(-1, 2)],
        ]);
        assert_eq!(inv, expect);
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse().unwrap(), None);
    }

    #[test]
    fn inverse_requires_square() {
        let m = RatMatrix::zeros(2, 3);
        assert_eq!(
            m.inverse(),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn nilpotency_detects_strict_triangular() {
        let n = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.is_nilpotent(), Ok(true));
        // Eigenvalue 1 blocks nilpotency even though the square has rank 1.
        let m = RatMatrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert_eq!(m.is_nilpotent(), Ok(false));
        assert_eq!(RatMatrix::identity(4).is_nilpotent(), Ok(false));
        assert_eq!(RatMatrix::zeros(3, 3).is_nilpotent(), Ok(true));
        assert_eq!(
            RatMatrix::zeros(2, 3).is_nilpotent(),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn nilpotency_needs_full_index() {
        // 4×4 single Jordan block: M³ ≠ 0 but M⁴ = 0.
        let m =
            RatMatrix::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        assert_eq!(m.is_nilpotent(), Ok(true));
    }

    #[test]
    fn flatten_is_column_major() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let flat = m.flatten_col_major();
        assert_eq!(flat, vec![rat_int(1), rat_int(3), rat_int(2), rat_int(4)]);
        assert_eq!(RatMatrix::from_flat_col_major(2, &flat), m);
    }

    #[test]
    fn commutator_of_commuting_is_zero() {
        let a = RatMatrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        let b = RatMatrix::from_int_rows(&[&[3, 0], &[0, 4]]);
        assert!(a.commutator(&b).is_zero());
        let c = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        // [diag(1,2), E12] = -E12.
        assert_eq!(
            a.commutator(&c),
            RatMatrix::from_int_rows(&[&[0, -1], &[0, 0]])
        );
    }

    #[test]
    fn stacking_shapes() {
        let a = RatMatrix::zeros(2, 3);
        let b = RatMatrix::identity(3);
        let v = a.vstack(&b);
        assert_eq!((v.rows(), v.cols()), (5, 3));
        let h = b.hstack(&RatMatrix::zeros(3, 2));
        assert_eq!((h.rows(), h.cols()), (3, 5));
    }
}
