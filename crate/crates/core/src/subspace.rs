//! Subspaces of ℚⁿ with a canonical basis.
//!
//! A [`Subspace`] stores the basis it was constructed from and a canonical
//! column-reduced echelon basis computed once up front. The canonical form
//! is the reduced row echelon form of the transposed span, transposed
//! back; it is unique per subspace, so **subspace equality is literal
//! equality of canonical matrices**. Intersections, sums, membership and
//! annihilators all reduce to kernel computations on top of that.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::Rat;

/// A linear subspace of ℚ^ambient.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    /// The basis the space was constructed from (columns, linearly
    /// independent; for spans of dependent vectors this is the canonical
    /// basis).
    basis: RatMatrix,
    /// Canonical column-reduced echelon basis (columns). Unique per
    /// subspace.
    canonical: RatMatrix,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.canonical == other.canonical
    }
}

impl Eq for Subspace {}

impl Subspace {
    /// The span of the columns of `gens` (dependencies are allowed and are
    /// reduced away). The stored basis is the canonical one.
    pub fn span(ambient: usize, gens: &RatMatrix) -> Self {
        assert_eq!(
            gens.rows(),
            ambient,
            "generator length differs from ambient"
        );
        let canonical = canonicalize(gens);
        Subspace {
            ambient,
            basis: canonical.clone(),
            canonical,
        }
    }

    /// Wraps an already-independent basis (as produced by
    /// [`RatMatrix::kernel_basis`]), keeping it verbatim alongside the
    /// canonical form. Panics if the columns are dependent.
    pub fn from_independent_basis(ambient: usize, basis: RatMatrix) -> Self {
        assert_eq!(basis.rows(), ambient, "basis length differs from ambient");
        let canonical = canonicalize(&basis);
        assert_eq!(
            canonical.cols(),
            basis.cols(),
            "basis columns are linearly dependent"
        );
        Subspace {
            ambient,
            basis,
            canonical,
        }
    }

    /// The zero subspace of ℚ^ambient.
    pub fn zero(ambient: usize) -> Self {
        Subspace::span(ambient, &RatMatrix::zeros(ambient, 0))
    }

    /// The full space ℚ^ambient.
    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &RatMatrix::identity(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.canonical.cols()
    }

    /// The construction-order basis (columns).
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// The canonical column-reduced echelon basis (columns).
    pub fn canonical(&self) -> &RatMatrix {
        &self.canonical
    }

    /// Basis vectors in construction order.
    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.basis.cols()).map(|c| self.basis.col(c)).collect()
    }

    /// Membership test: reduce `v` against the canonical basis.
    ///
    /// Every canonical basis vector has a pivot coordinate in which it is
    /// the only nonzero basis vector, so one pass of eliminations decides
    /// membership. Errors when `v` has the wrong length.
    pub fn contains(&self, v: &[Rat]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut residual = v.to_vec();
        for c in 0..self.canonical.cols() {
            let pivot = (0..self.ambient)
                .find(|&r| !self.canonical.at(r, c).is_zero())
                .expect("canonical basis column is zero");
            let factor = residual[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for r in 0..self.ambient {
                let b = self.canonical.at(r, c);
                if !b.is_zero() {
                    residual[r] -= &factor * b;
                }
            }
        }
        Ok(residual.iter().all(Zero::is_zero))
    }

    /// Intersection via the stacked-kernel construction: solve
    /// `A x = B y` as the kernel of `[A | -B]` and read the intersection
    /// off as `A x`. Errors when the ambient spaces differ.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let a = &self.canonical;
        let b = &other.canonical;
        if a.cols() == 0 || b.cols() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = a.hstack(&b.scale(&-Rat::from_integer(1.into())));
        let kernel = stacked.kernel_basis();
        // Keep the x-part of each kernel vector and map it through A.
        let mut x_part = RatMatrix::zeros(a.cols(), kernel.cols());
        for r in 0..a.cols() {
            for c in 0..kernel.cols() {
                x_part.set(r, c, kernel.at(r, c).clone());
            }
        }
        Ok(Subspace::span(self.ambient, &a.mul(&x_part)))
    }

    /// Sum of subspaces (span of the union of bases).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(Subspace::span(
            self.ambient,
            &self.canonical.hstack(&other.canonical),
        ))
    }

    /// Whether `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        for c in 0..other.canonical.cols() {
            if !self.contains(&other.canonical.col(c))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A constraint matrix `Q` (rows are functionals) with `ker Q = self`.
    ///
    /// Built from the kernel of the transposed basis: `x` annihilates the
    /// span iff `xᵀ B = 0`. Over ℚ the double annihilator recovers the
    /// space, and the row count is always `ambient - dim`.
    pub fn annihilator(&self) -> RatMatrix {
        self.canonical.transpose().kernel_basis().transpose()
    }
}

fn canonicalize(gens: &RatMatrix) -> RatMatrix {
    let (red, pivots) = gens.transpose().rref();
    if pivots.is_empty() {
        // Keep the ambient dimension even when the span is zero.
        return RatMatrix::zeros(gens.rows(), 0);
    }
    let mut rows = Vec::with_capacity(pivots.len());
    for r in 0..pivots.len() {
        rows.push(red.row(r));
    }
    RatMatrix::from_rows(rows).transpose()
}
