//! Derivations of a structure-constant algebra.
//!
//! A linear map `d` is a derivation when it satisfies the Leibniz rule
//! `d(xy) = d(x)y + x d(y)`. By bilinearity it is enough to impose the
//! rule on basis pairs, which turns the condition into a homogeneous
//! linear system over ℚ in the `n²` matrix entries of `d`. The solution
//! space is `Der(A)`, a Lie algebra under the commutator.
//!
//! Matrices act on coordinate columns; the entry unknowns are flattened
//! column-major (`d_{r,c}` at flat index `c·n + r`), the same layout used
//! everywhere else in this crate.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::Rat;
use crate::subspace::Subspace;

/// The `n³ × n²` Leibniz constraint matrix.
///
/// Row `(i, j, p)` (flat index `(i·n + j)·n + p`) is the coefficient of
/// `e_p` in `d(e_i e_j) − d(e_i) e_j − e_i d(e_j)` as a linear form in the
/// entries of `d`:
///
/// * `d(e_i e_j) = Σ_k γ_{ij}^k d(e_k)` contributes `+γ_{ij}^k` to the
///   unknown `d_{p,k}`;
/// * `d(e_i) e_j = Σ_k d_{k,i} e_k e_j` contributes `−γ_{kj}^p` to
///   `d_{k,i}`;
/// * `e_i d(e_j) = Σ_k d_{k,j} e_i e_k` contributes `−γ_{ik}^p` to
///   `d_{k,j}`.
pub fn derivation_constraint_matrix(sc: &StructureConstants) -> RatMatrix {
    let n = sc.dim();
    let mut a = RatMatrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let row = (i * n + j) * n + p;
                for k in 0..n {
                    let g = sc.gamma(i, j, k);
                    if !g.is_zero() {
                        a.add_at(row, k * n + p, g);
                    }
                    let g = sc.gamma(k, j, p);
                    if !g.is_zero() {
                        a.add_at(row, i * n + k, &-g.clone());
                    }
                    let g = sc.gamma(i, k, p);
                    if !g.is_zero() {
                        a.add_at(row, j * n + k, &-g.clone());
                    }
                }
            }
        }
    }
    a
}

/// The solved derivation algebra of one structure-constant algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationSpace {
    n: usize,
    space: Subspace,
}

impl DerivationSpace {
    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// `dim Der(A)`.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The solution subspace of ℚ^{n²} (column-major flattened matrices).
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Basis in solver order (kernel basis: free entries in increasing
    /// column-major order, first nonzero coordinate scaled to 1).
    pub fn basis_matrices(&self) -> Vec<RatMatrix> {
        (0..self.space.basis().cols())
            .map(|c| RatMatrix::from_flat_col_major(self.n, &self.space.basis().col(c)))
            .collect()
    }

    /// Membership test for an `n × n` matrix.
    pub fn contains_matrix(&self, m: &RatMatrix) -> Result<bool, LinalgError> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(LinalgError::DimMismatch {
                expected: self.n,
                found: m.rows().max(m.cols()),
            });
        }
        self.space.contains(&m.flatten_col_major())
    }
}

/// Solves the Leibniz system and returns `Der(A)`.
pub fn derivations(sc: &StructureConstants) -> DerivationSpace {
    let n = sc.dim();
    let kernel = derivation_constraint_matrix(sc).kernel_basis();
    DerivationSpace {
        n,
        space: Subspace::from_independent_basis(n * n, kernel),
    }
}

/// The Leibniz defect `d(e_i e_j) − d(e_i) e_j − e_i d(e_j)` as a
/// coordinate vector (zero for every pair exactly when `d` is a
/// derivation).
pub fn leibniz_residual(
    sc: &StructureConstants,
    d: &RatMatrix,
    i: usize,
    j: usize,
) -> Result<Vec<Rat>, LinalgError> {
    check_operator_shape(sc, d)?;
    let n = sc.dim();
    let ei = sc.basis_element(i);
    let ej = sc.basis_element(j);
    let d_ei = d.col(i);
    let d_ej = d.col(j);
    let lhs = d.apply(&sc.basis_product(i, j));
    let term1 = sc.multiply(&d_ei, &ej).expect("length n");
    let term2 = sc.multiply(&ei, &d_ej).expect("length n");
    Ok((0..n)
        .map(|p| lhs[p].clone() - &term1[p] - &term2[p])
        .collect())
}

/// Direct Leibniz check on all basis pairs (independent of the linear
/// system; used to cross-validate the solver).
pub fn is_derivation(sc: &StructureConstants, d: &RatMatrix) -> Result<bool, LinalgError> {
    check_operator_shape(sc, d)?;
    let n = sc.dim();
    for i in 0..n {
        for j in 0..n {
            if !leibniz_residual(sc, d, i, j)?.iter().all(Zero::is_zero) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of checking one matrix against the three equivalent
/// characterizations of a derivation: the Leibniz rule, the left-operator
/// identity `[d, L_x] = L_{d(x)}`, and the right-operator identity
/// `[d, R_y] = R_{d(y)}` (each imposed on all basis elements, which
/// suffices by linearity of `x ↦ L_x` and `y ↦ R_y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorCharacterization {
    pub leibniz: bool,
    pub left_operator: bool,
    pub right_operator: bool,
}

impl OperatorCharacterization {
    /// The three characterizations must always agree; exposes that check.
    pub fn consistent(&self) -> bool {
        self.leibniz == self.left_operator && self.leibniz == self.right_operator
    }
}

/// Evaluates all three derivation characterizations for `d`.
pub fn characterize_operator(
    sc: &StructureConstants,
    d: &RatMatrix,
) -> Result<OperatorCharacterization, LinalgError> {
    check_operator_shape(sc, d)?;
    let n = sc.dim();
    let leibniz = is_derivation(sc, d)?;
    let mut left_operator = true;
    let mut right_operator = true;
    for i in 0..n {
        let ei = sc.basis_element(i);
        let d_ei = d.col(i);
        let l_ei = sc.left_mult_operator(&ei).expect("length n");
        let l_dei = sc.left_mult_operator(&d_ei).expect("length n");
        if d.commutator(&l_ei) != l_dei {
            left_operator = false;
        }
        let r_ei = sc.right_mult_operator(&ei).expect("length n");
        let r_dei = sc.right_mult_operator(&d_ei).expect("length n");
        if d.commutator(&r_ei) != r_dei {
            right_operator = false;
        }
    }
    Ok(OperatorCharacterization {
        leibniz,
        left_operator,
        right_operator,
    })
}

/// True when the span of `mats` is closed under the commutator bracket
/// (checked pairwise on the given spanning matrices, which suffices by
/// bilinearity of the bracket).
pub fn is_bracket_closed(n: usize, mats: &[RatMatrix]) -> Result<bool, LinalgError> {
    let mut gens = RatMatrix::zeros(n * n, mats.len());
    for (c, m) in mats.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(LinalgError::DimMismatch {
                expected: n,
                found: m.rows().max(m.cols()),
            });
        }
        for (r, entry) in m.flatten_col_major().into_iter().enumerate() {
            gens.set(r, c, entry);
        }
    }
    let span = Subspace::span(n * n, &gens);
    for a in mats {
        for b in mats {
            let bracket = a.commutator(b);
            if !span.contains(&bracket.flatten_col_major())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_operator_shape(sc: &StructureConstants, d: &RatMatrix) -> Result<(), LinalgError> {
    if d.rows() != sc.dim() || d.cols() != sc.dim() {
        return Err(LinalgError::DimMismatch {
            expected: sc.dim(),
            found: d.rows().max(d.cols()),
        });
    }
    Ok(())
}
