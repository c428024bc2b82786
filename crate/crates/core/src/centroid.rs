//! Centroid and central derivations of a structure-constant algebra.
//!
//! The centroid is `Γ(A) = {φ : φ(xy) = φ(x)y = xφ(y) for all x, y}` — the
//! linear maps commuting with every left and every right multiplication.
//! Both identities are bilinear in `(x, y)`, so imposing them on basis
//! pairs gives a homogeneous linear system in the `n²` entries of `φ`.
//! Both condition families are always imposed (`2n³` rows): dropping
//! either one genuinely enlarges the solution space for noncommutative
//! products, and the two-sided space is what makes the composition
//! theorems below (`φ∘d ∈ Der`, `[d, φ] ∈ Γ`) hold.
//!
//! Central derivations are `C(A) = Γ(A) ∩ Der(A)`. The module also solves
//! the definitional characterization — maps sending `A` into the
//! two-sided annihilator center with `φ(A²) = 0` — and reports whether
//! the two descriptions coincide for the given algebra.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::StructureConstants;
use crate::derivation::{derivation_constraint_matrix, derivations, DerivationSpace};
use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::Rat;
use crate::subspace::Subspace;

/// The `2n³ × n²` centroid constraint matrix: the left-condition block
/// (rows `(i·n + j)·n + p`) stacked above the right-condition block.
///
/// Row `(i, j, p)` of the left block is the coefficient of `e_p` in
/// `φ(e_i e_j) − φ(e_i) e_j`:
///
/// * `φ(e_i e_j) = Σ_k γ_{ij}^k φ(e_k)` contributes `+γ_{ij}^k` to the
///   unknown `φ_{p,k}`;
/// * `φ(e_i) e_j = Σ_k φ_{k,i} e_k e_j` contributes `−γ_{kj}^p` to
///   `φ_{k,i}`.
///
/// The right block is `φ(e_i e_j) − e_i φ(e_j)`, where
/// `e_i φ(e_j) = Σ_k φ_{k,j} e_i e_k` contributes `−γ_{ik}^p` to
/// `φ_{k,j}`. Unknowns are flattened column-major (`φ_{r,c}` at `c·n+r`).
pub fn centroid_constraint_matrix(sc: &StructureConstants) -> RatMatrix {
    let n = sc.dim();
    let block = n * n * n;
    let mut a = RatMatrix::zeros(2 * block, n * n);
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                let left_row = (i * n + j) * n + p;
                let right_row = block + left_row;
                for k in 0..n {
                    let g = sc.gamma(i, j, k);
                    if !g.is_zero() {
                        a.add_at(left_row, k * n + p, g);
                        a.add_at(right_row, k * n + p, g);
                    }
                    let g = sc.gamma(k, j, p);
                    if !g.is_zero() {
                        a.add_at(left_row, i * n + k, &-g.clone());
                    }
                    let g = sc.gamma(i, k, p);
                    if !g.is_zero() {
                        a.add_at(right_row, j * n + k, &-g.clone());
                    }
                }
            }
        }
    }
    a
}

/// The solved centroid of one structure-constant algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidSpace {
    n: usize,
    space: Subspace,
}

impl CentroidSpace {
    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// `dim Γ(A)`.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The solution subspace of ℚ^{n²}.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Basis in solver order (kernel basis of the constraint system).
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

/// Solves the two-sided constraint system and returns `Γ(A)`.
pub fn centroid(sc: &StructureConstants) -> CentroidSpace {
    let n = sc.dim();
    let kernel = centroid_constraint_matrix(sc).kernel_basis();
    CentroidSpace {
        n,
        space: Subspace::from_independent_basis(n * n, kernel),
    }
}

/// The two centroid defects of `φ` on the pair `(e_i, e_j)`:
/// `φ(e_i e_j) − φ(e_i) e_j` and `φ(e_i e_j) − e_i φ(e_j)`.
pub fn centroid_residuals(
    sc: &StructureConstants,
    phi: &RatMatrix,
    i: usize,
    j: usize,
) -> Result<(Vec<Rat>, Vec<Rat>), LinalgError> {
    check_operator_shape(sc, phi)?;
    let n = sc.dim();
    let lhs = phi.apply(&sc.basis_product(i, j));
    let left = sc
        .multiply(&phi.col(i), &sc.basis_element(j))
        .expect("length n");
    let right = sc
        .multiply(&sc.basis_element(i), &phi.col(j))
        .expect("length n");
    Ok((
        (0..n).map(|p| lhs[p].clone() - &left[p]).collect(),
        (0..n).map(|p| lhs[p].clone() - &right[p]).collect(),
    ))
}

/// Direct two-sided membership check on all basis pairs (independent of
/// the linear system; used to cross-validate the solver).
pub fn is_centroid_element(sc: &StructureConstants, phi: &RatMatrix) -> Result<bool, LinalgError> {
    check_operator_shape(sc, phi)?;
    let n = sc.dim();
    for i in 0..n {
        for j in 0..n {
            let (left, right) = centroid_residuals(sc, phi, i, j)?;
            if !left.iter().all(Zero::is_zero) || !right.iter().all(Zero::is_zero) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The solved central derivations `C(A) = Γ(A) ∩ Der(A)` together with
/// the definitional characterization (`φ(A) ⊆ Z(A)` and `φ(A²) = 0`,
/// where `Z(A)` is the two-sided annihilator center).
#[derive(Debug, Clone, PartialEq)]
pub struct CentralDerivationSpace {
    n: usize,
    space: Subspace,
    definitional: Subspace,
    coincides: bool,
}

impl CentralDerivationSpace {
    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// `dim C(A)` (the intersection characterization).
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `Γ(A) ∩ Der(A)` as a subspace of ℚ^{n²}.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// The definitional solution space: maps with `φ(A) ⊆ Z(A)` and
    /// `φ(A²) = 0`.
    pub fn definitional_space(&self) -> &Subspace {
        &self.definitional
    }

    /// Whether the two characterizations give the same subspace for this
    /// algebra.
    pub fn definitions_coincide(&self) -> bool {
        self.coincides
    }

    /// Basis of the intersection space.
    pub fn basis_matrices(&self) -> Vec<RatMatrix> {
        (0..self.space.basis().cols())
            .map(|c| RatMatrix::from_flat_col_major(self.n, &self.space.basis().col(c)))
            .collect()
    }
}

/// Computes `C(A)` from already-solved `Der(A)` and `Γ(A)`.
pub fn central_derivations_from(
    sc: &StructureConstants,
    der: &DerivationSpace,
    gamma: &CentroidSpace,
) -> CentralDerivationSpace {
    let n = sc.dim();
    let space = gamma
        .space()
        .intersect(der.space())
        .expect("both spaces live in ℚ^{n²}");
    let definitional = definitional_central_space(sc);
    let coincides = space == definitional;
    CentralDerivationSpace {
        n,
        space,
        definitional,
        coincides,
    }
}

/// Solves both characterizations of `C(A)` from scratch.
pub fn central_derivations(sc: &StructureConstants) -> CentralDerivationSpace {
    central_derivations_from(sc, &derivations(sc), &centroid(sc))
}

/// The definitional system: `φ(A) ⊆ Z(A)` (each column of `φ` lies in
/// the annihilator center) and `φ(A²) = 0` (each generator of `A²` maps
/// to zero).
fn definitional_central_space(sc: &StructureConstants) -> Subspace {
    let n = sc.dim();
    let center = sc.annihilator_center();
    let center_ann = center.annihilator(); // rows vanish exactly on Z(A)
    let square = sc.algebra_square();

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // φ_{r,c} lives at flat column c·n + r.
    // Condition 1: Q_Z · (column i of φ) = 0 for every i.
    for i in 0..n {
        for q in 0..center_ann.rows() {
            let mut row = alloc::vec![Rat::zero(); n * n];
            for r in 0..n {
                row[i * n + r] = center_ann.at(q, r).clone();
            }
            rows.push(row);
        }
    }
    // Condition 2: φ · b = 0 for every basis vector b of A².
    for bcol in 0..square.canonical().cols() {
        let b = square.canonical().col(bcol);
        for p in 0..n {
            let mut row = alloc::vec![Rat::zero(); n * n];
            for (c, bc) in b.iter().enumerate() {
                row[c * n + p] = bc.clone();
            }
            rows.push(row);
        }
    }
    let system = if rows.is_empty() {
        RatMatrix::zeros(0, n * n)
    } else {
        RatMatrix::from_rows(rows)
    };
    Subspace::from_independent_basis(n * n, system.kernel_basis())
}

/// Independent oracle for `C(A)`: one kernel call over the derivation
/// rows stacked on the centroid rows.
pub fn stacked_central_system_kernel(sc: &StructureConstants) -> Subspace {
    let n = sc.dim();
    let stacked = derivation_constraint_matrix(sc).vstack(&centroid_constraint_matrix(sc));
    Subspace::from_independent_basis(n * n, stacked.kernel_basis())
}

/// One failed check inside [`CentroidPropsReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropsWitness {
    /// `φ∘d` was not a derivation for this (der-basis, Γ-basis) pair.
    PhiAfterDNotDerivation {
        der_index: usize,
        centroid_index: usize,
    },
    /// `[d∘φ ∈ Γ]` and `[φ∘d ∈ C(A)]` disagreed for this pair.
    IffMismatch {
        der_index: usize,
        centroid_index: usize,
        d_phi_in_centroid: bool,
        phi_d_in_central: bool,
    },
}

/// Pairwise composition properties of `Der(A)` and `Γ(A)`:
/// `φ∘d` is always a derivation, and `d∘φ ∈ Γ(A)` exactly when
/// `φ∘d ∈ C(A)`. Checked on all basis pairs with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidPropsReport {
    pub pairs_checked: usize,
    pub identity_in_centroid: bool,
    pub phi_after_d_in_der: bool,
    pub iff_equivalence: bool,
    pub failures: Vec<PropsWitness>,
}

impl CentroidPropsReport {
    pub fn all_hold(&self) -> bool {
        self.identity_in_centroid && self.phi_after_d_in_der && self.iff_equivalence
    }
}

/// Checks the composition properties from already-solved spaces.
pub fn verify_centroid_derivation_props_from(
    sc: &StructureConstants,
    der: &DerivationSpace,
    gamma: &CentroidSpace,
) -> CentroidPropsReport {
    let n = sc.dim();
    let central = central_derivations_from(sc, der, gamma);
    let identity_in_centroid = gamma
        .contains_matrix(&RatMatrix::identity(n))
        .expect("square n×n");

    let mut pairs_checked = 0;
    let mut phi_after_d_in_der = true;
    let mut iff_equivalence = true;
    let mut failures = Vec::new();

    let der_mats = der.basis_matrices();
    let gamma_mats = gamma.basis_matrices();
    for (di, d) in der_mats.iter().enumerate() {
        for (gi, phi) in gamma_mats.iter().enumerate() {
            pairs_checked += 1;
            // φ∘d applies d first: matrix product φ·d.
            let phi_d = phi.mul(d);
            let d_phi = d.mul(phi);
            if !der.contains_matrix(&phi_d).expect("square n×n") {
                phi_after_d_in_der = false;
                failures.push(PropsWitness::PhiAfterDNotDerivation {
                    der_index: di,
                    centroid_index: gi,
                });
            }
            let d_phi_in_centroid = gamma.contains_matrix(&d_phi).expect("square n×n");
            let phi_d_in_central = central
                .space()
                .contains(&phi_d.flatten_col_major())
                .expect("ambient n²");
            if d_phi_in_centroid != phi_d_in_central {
                iff_equivalence = false;
                failures.push(PropsWitness::IffMismatch {
                    der_index: di,
                    centroid_index: gi,
                    d_phi_in_centroid,
                    phi_d_in_central,
                });
            }
        }
    }
    CentroidPropsReport {
        pairs_checked,
        identity_in_centroid,
        phi_after_d_in_der,
        iff_equivalence,
        failures,
    }
}

/// Checks the composition properties, solving `Der(A)` and `Γ(A)` first.
pub fn verify_centroid_derivation_props(sc: &StructureConstants) -> CentroidPropsReport {
    verify_centroid_derivation_props_from(sc, &derivations(sc), &centroid(sc))
}

fn check_operator_shape(sc: &StructureConstants, m: &RatMatrix) -> Result<(), LinalgError> {
    if m.rows() != sc.dim() || m.cols() != sc.dim() {
        return Err(LinalgError::DimMismatch {
            expected: sc.dim(),
            found: m.rows().max(m.cols()),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use crate::rational::{rat_int, Rat};
    use alloc::vec;
    use alloc::vec::Vec;

    fn as4_1() -> StructureConstants {
        parse_algebra("dim 4\ne1*e1 = e3\ne2*e2 = e4\n").unwrap()
    }

    fn as4_2() -> StructureConstants {
        parse_algebra("dim 4\ne1*e2 = e3\ne2*e1 = e4\n").unwrap()
    }

    fn as4_3() -> StructureConstants {
        parse_algebra("dim 4\ne1*e2 = e4\ne3*e1 = e4\n").unwrap()
    }

    fn unit_flat(n: usize, r: usize, c: usize) -> Vec<Rat> {
        let mut v = vec![rat_int(0); n * n];
        v[(c - 1) * n + (r - 1)] = rat_int(1);
        v
    }

    fn combo_flat(n: usize, parts: &[(i64, usize, usize)]) -> Vec<Rat> {
        let mut v = vec![rat_int(0); n * n];
        for &(coef, r, c) in parts {
            v[(c - 1) * n + (r - 1)] += rat_int(coef);
        }
        v
    }

    fn span_of(n: usize, cols: &[Vec<Rat>]) -> Subspace {
        let rows = cols[0].len();
        let data: Vec<Vec<Rat>> = (0..rows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        Subspace::span(n * n, &RatMatrix::from_rows(data))
    }

    #[test]
    fn constraint_matrix_shape() {
        let a = centroid_constraint_matrix(&as4_1());
        assert_eq!((a.rows(), a.cols()), (128, 16));
    }

    #[test]
    fn worked_centroid_for_diagonal_squares() {
        // For e1e1 = e3, e2e2 = e4 the two-sided system forces
        // a33 = a11, a44 = a22, kills the rest of the upper 2×4 block and
        // columns 3, 4 — but leaves a31, a32, a41, a42 free, because
        // e3, e4 annihilate the algebra on both sides. Exact kernel
        // dimension: 6.
        let g = centroid(&as4_1());
        assert_eq!(g.dim(), 6);
        let expected = span_of(
            4,
            &[
                combo_flat(4, &[(1, 1, 1), (1, 3, 3)]),
                combo_flat(4, &[(1, 2, 2), (1, 4, 4)]),
                unit_flat(4, 3, 1),
                unit_flat(4, 3, 2),
                unit_flat(4, 4, 1),
                unit_flat(4, 4, 2),
            ],
        );
        assert_eq!(*g.space(), expected);
        // a12 is forced to zero: the matrix unit E12 is not centroidal.
        let e12 = RatMatrix::from_flat_col_major(4, &unit_flat(4, 1, 2));
        assert!(!g.contains_matrix(&e12).unwrap());
        assert!(!is_centroid_element(&as4_1(), &e12).unwrap());
    }

    #[test]
    fn worked_centroid_twisted_product() {
        // e1e2 = e3, e2e1 = e4: one scalar on the diagonal plus the same
        // four free lower-corner entries; dimension 5.
        let g = centroid(&as4_2());
        assert_eq!(g.dim(), 5);
        let expected = span_of(
            4,
            &[
                combo_flat(4, &[(1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 4, 4)]),
                unit_flat(4, 3, 1),
                unit_flat(4, 3, 2),
                unit_flat(4, 4, 1),
                unit_flat(4, 4, 2),
            ],
        );
        assert_eq!(*g.space(), expected);
    }

    #[test]
    fn worked_centroid_with_forced_scalar_diagonal() {
        // e1e2 = e4, e3e1 = e4: scalar diagonal with free a41, a42, a43.
        let g = centroid(&as4_3());
        assert_eq!(g.dim(), 4);
        let expected = span_of(
            4,
            &[
                combo_flat(4, &[(1, 1, 1), (1, 2, 2), (1, 3, 3), (1, 4, 4)]),
                unit_flat(4, 4, 1),
                unit_flat(4, 4, 2),
                unit_flat(4, 4, 3),
            ],
        );
        assert_eq!(*g.space(), expected);
    }

    #[test]
    fn zero_algebra_centroid_is_everything() {
        let sc = StructureConstants::zero_algebra(3);
        let g = centroid(&sc);
        assert_eq!(g.dim(), 9);
        let c = central_derivations(&sc);
        assert_eq!(c.dim(), 9);
        assert!(c.definitions_coincide());
    }

    #[test]
    fn identity_is_always_centroidal() {
        for sc in [as4_1(), as4_2(), as4_3()] {
            let g = centroid(&sc);
            assert!(g.contains_matrix(&RatMatrix::identity(4)).unwrap());
            assert!(is_centroid_element(&sc, &RatMatrix::identity(4)).unwrap());
        }
    }

    #[test]
    fn centroid_basis_has_exact_residuals_and_composes() {
        let sc = as4_1();
        let g = centroid(&sc);
        let mats = g.basis_matrices();
        for phi in &mats {
            assert!(is_centroid_element(&sc, phi).unwrap());
        }
        // Γ is closed under composition.
        for a in &mats {
            for b in &mats {
                assert!(g.contains_matrix(&a.mul(b)).unwrap());
            }
        }
    }

    #[test]
    fn central_derivations_both_characterizations() {
        // For e1e1 = e3, e2e2 = e4: Z(A) = ⟨e3, e4⟩ = A², so both
        // characterizations give exactly the lower-left 2×2 corner block.
        let sc = as4_1();
        let c = central_derivations(&sc);
        assert_eq!(c.dim(), 4);
        let expected = span_of(
            4,
            &[
                unit_flat(4, 3, 1),
                unit_flat(4, 3, 2),
                unit_flat(4, 4, 1),
                unit_flat(4, 4, 2),
            ],
        );
        assert_eq!(*c.space(), expected);
        assert_eq!(*c.definitional_space(), expected);
        assert!(c.definitions_coincide());
    }

    #[test]
    fn stacked_oracle_agrees_with_intersection() {
        for sc in [as4_1(), as4_2(), as4_3()] {
            let c = central_derivations(&sc);
            let oracle = stacked_central_system_kernel(&sc);
            assert_eq!(*c.space(), oracle);
        }
    }

    #[test]
    fn composition_properties_hold() {
        for sc in [as4_1(), as4_2(), as4_3()] {
            let report = verify_centroid_derivation_props(&sc);
            assert!(report.all_hold(), "failures: {:?}", report.failures);
            assert!(report.failures.is_empty());
            assert!(report.pairs_checked > 0);
        }
    }

    #[test]
    fn shape_errors() {
        let sc = as4_1();
        let bad = RatMatrix::zeros(3, 3);
        assert!(is_centroid_element(&sc, &bad).is_err());
        assert!(centroid(&sc).contains_matrix(&bad).is_err());
    }
}
