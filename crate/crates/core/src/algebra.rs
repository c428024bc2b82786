//! Algebras presented by structure constants.
//!
//! A [`StructureConstants`] value fixes a basis `e1..en` and the full
//! product table `ei · ej = Σ_k γ[i][j][k] ek`. No identities are assumed:
//! associativity is a checkable property, not a precondition, and every
//! invariant in this crate is computed from the raw tensor.
//!
//! Elements are coordinate vectors `&[Rat]` of length `dim` in the fixed
//! basis. Operators on the algebra are [`RatMatrix`] values acting on
//! coordinate columns: the matrix `M` of a map sends basis vector `e_i` to
//! the column `M[:, i]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::{format_rat, Rat};
use crate::subspace::Subspace;

/// A named parameter with its bound rational value and excluded values.
///
/// Exclusions record where the defining family degenerates; binding a
/// parameter to an excluded value is rejected at parse time.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterBinding {
    pub name: String,
    pub value: Rat,
    pub excluded: Vec<Rat>,
}

/// Errors from algebra-level operations.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraError {
    /// An element has the wrong number of coordinates.
    BadElementLength { expected: usize, found: usize },
    /// A basis change matrix was not square of size `dim` or not
    /// invertible.
    BadBasisChange(LinalgError),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BadElementLength { expected, found } => {
                write!(f, "element has {found} coordinates, expected {expected}")
            }
            AlgebraError::BadBasisChange(e) => write!(f, "bad basis change: {e}"),
        }
    }
}

/// An algebra of dimension `n` given by its structure tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    name: String,
    dim: usize,
    /// `gamma[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i · e_j`
    /// (all indices 0-based).
    gamma: Vec<Rat>,
    /// Parameter bindings the tensor was evaluated under (informational;
    /// the tensor itself is fully numeric).
    params: Vec<ParameterBinding>,
}

impl StructureConstants {
    /// Builds an algebra from a flat tensor of length `dim³`.
    pub fn new(name: String, dim: usize, gamma: Vec<Rat>, params: Vec<ParameterBinding>) -> Self {
        assert_eq!(gamma.len(), dim * dim * dim, "tensor length is not dim³");
        StructureConstants {
            name,
            dim,
            gamma,
            params,
        }
    }

    /// The zero algebra of dimension `dim` (all products vanish).
    pub fn zero_algebra(dim: usize) -> Self {
        StructureConstants::new(
            String::from("zero"),
            dim,
            vec![Rat::zero(); dim * dim * dim],
            Vec::new(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: String) {
        self.name = name;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[ParameterBinding] {
        &self.params
    }

    /// The coefficient of `e_k` in `e_i · e_j` (0-based indices).
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }

    /// Mutates one tensor entry (used by the parser and by tests that
    /// perturb a table).
    pub fn set_gamma(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        self.gamma[(i * self.dim + j) * self.dim + k] = v;
    }

    /// The product `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim).map(|k| self.gamma(i, j, k).clone()).collect()
    }

    /// The `i`-th basis vector as a coordinate vector.
    pub fn basis_element(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::from_integer(1.into());
        v
    }

    fn check_len(&self, v: &[Rat]) -> Result<(), AlgebraError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::BadElementLength {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    /// The bilinear product `x · y`.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        *slot += &coef * g;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of left multiplication `L_x : y ↦ x·y`.
    ///
    /// Column `j` holds the coordinates of `x · e_j`, i.e.
    /// `(L_x)[k, j] = Σ_i x_i γ[i][j][k]`.
    pub fn left_mult_operator(&self, x: &[Rat]) -> Result<RatMatrix, AlgebraError> {
        self.check_len(x)?;
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        let v = &x[i] * g;
                        m.add_at(k, j, &v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix of right multiplication `R_y : x ↦ x·y`.
    ///
    /// Column `j` holds the coordinates of `e_j · y`, i.e.
    /// `(R_y)[k, j] = Σ_i y_i γ[j][i][k]`.
    pub fn right_mult_operator(&self, y: &[Rat]) -> Result<RatMatrix, AlgebraError> {
        self.check_len(y)?;
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if y[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let g = self.gamma(j, i, k);
                    if !g.is_zero() {
                        let v = &y[i] * g;
                        m.add_at(k, j, &v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// First associativity violation `(e_i e_j) e_k ≠ e_i (e_j e_k)`, if
    /// any, scanning triples in lexicographic order.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let left = self
                        .multiply(&ij, &self.basis_element(k))
                        .expect("basis product has dim coordinates");
                    let right = self
                        .multiply(&self.basis_element(i), &jk)
                        .expect("basis product has dim coordinates");
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Whether the product is associative on all basis triples (hence, by
    /// bilinearity, everywhere).
    pub fn check_associative(&self) -> bool {
        self.associativity_violation().is_none()
    }

    /// The square `A² = span{ e_i e_j : all i, j }` as a subspace of the
    /// coordinate space.
    pub fn algebra_square(&self) -> Subspace {
        let mut gens = RatMatrix::zeros(self.dim, self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    gens.set(k, i * self.dim + j, self.gamma(i, j, k).clone());
                }
            }
        }
        Subspace::span(self.dim, &gens)
    }

    /// Two-sided annihilator-style centralizer of a set of elements:
    /// `{ x : x·h = 0 and h·x = 0 for all h in hs }`.
    ///
    /// Computed as one kernel: stack `R_h` and `L_h` for every `h` and take
    /// the common null space.
    pub fn centralizer(&self, hs: &[Vec<Rat>]) -> Result<Subspace, AlgebraError> {
        let mut stack = RatMatrix::zeros(0, self.dim);
        for h in hs {
            stack = stack.vstack(&self.right_mult_operator(h)?);
            stack = stack.vstack(&self.left_mult_operator(h)?);
        }
        Ok(Subspace::from_independent_basis(
            self.dim,
            stack.kernel_basis(),
        ))
    }

    /// The annihilator center `Z(A) = { x : x·y = 0 and y·x = 0 for all y }`
    /// — the two-sided annihilator of the whole algebra.
    pub fn annihilator_center(&self) -> Subspace {
        let basis: Vec<Vec<Rat>> = (0..self.dim).map(|i| self.basis_element(i)).collect();
        self.centralizer(&basis)
            .expect("basis elements have dim coordinates")
    }

    /// The commutant center `{ x : x·y = y·x for all y }` (the usual center
    /// of an associative algebra). Distinct from
    /// [`annihilator_center`](Self::annihilator_center) in general — e.g.
    /// a unital commutative algebra has full commutant center but trivial
    /// annihilator center.
    pub fn commutant_center(&self) -> Subspace {
        // x is central iff Σ_i x_i (γ[i][j][k] − γ[j][i][k]) = 0 for all j, k.
        let n = self.dim;
        let mut constraints = RatMatrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    let diff = self.gamma(i, j, k) - self.gamma(j, i, k);
                    constraints.set(j * n + k, i, diff);
                }
            }
        }
        Subspace::from_independent_basis(n, constraints.kernel_basis())
    }

    /// Whether the algebra is nilpotent: the descending chain
    /// `A¹ = A`, `A^(m+1) = A^m·A + A·A^m` reaches zero.
    ///
    /// The chain is monotone decreasing, so it either hits `0` (nilpotent)
    /// or stabilizes at a nonzero subspace (not nilpotent); both outcomes
    /// are reached within `dim + 1` steps.
    pub fn is_nilpotent_algebra(&self) -> bool {
        let mut current = Subspace::full(self.dim);
        loop {
            let next = self.two_sided_product_span(&current);
            if next.dim() == 0 {
                return true;
            }
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
    }

    /// `span{ v·e_j, e_j·v : v in basis(s), all j }`.
    fn two_sided_product_span(&self, s: &Subspace) -> Subspace {
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for v in s.basis_vectors() {
            for j in 0..self.dim {
                let ej = self.basis_element(j);
                gens.push(self.multiply(&v, &ej).expect("dims agree"));
                gens.push(self.multiply(&ej, &v).expect("dims agree"));
            }
        }
        let mut m = RatMatrix::zeros(self.dim, gens.len());
        for (c, g) in gens.iter().enumerate() {
            for (r, x) in g.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Subspace::span(self.dim, &m)
    }

    /// Transport of structure through an invertible matrix `p`: the
    /// returned algebra is the same product expressed in the basis
    /// `f_i = Σ_j p[j,i] e_j` (columns of `p` are the new basis vectors).
    pub fn change_basis(&self, p: &RatMatrix) -> Result<StructureConstants, AlgebraError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(AlgebraError::BadBasisChange(LinalgError::DimMismatch {
                expected: self.dim,
                found: p.rows(),
            }));
        }
        let p_inv = p
            .inverse()
            .map_err(AlgebraError::BadBasisChange)?
            .ok_or(AlgebraError::BadBasisChange(LinalgError::NotInvertible))?;
        let n = self.dim;
        let mut gamma = vec![Rat::zero(); n * n * n];
        for i in 0..n {
            let fi = p.col(i);
            for j in 0..n {
                let fj = p.col(j);
                let prod = self.multiply(&fi, &fj).expect("dims agree");
                let coords = p_inv.apply(&prod);
                for (k, x) in coords.into_iter().enumerate() {
                    gamma[(i * n + j) * n + k] = x;
                }
            }
        }
        Ok(StructureConstants::new(
            self.name.clone(),
            n,
            gamma,
            self.params.clone(),
        ))
    }

    /// Renders an element as a readable combination like `e1 - 2/3 e3`.
    pub fn format_element(&self, v: &[Rat]) -> String {
        let mut out = String::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let formatted = format_rat(x);
            if out.is_empty() {
                if formatted == "1" {
                    // leading coefficient 1 is omitted
                } else if formatted == "-1" {
                    out.push('-');
                } else {
                    out.push_str(&formatted);
                    out.push(' ');
                }
            } else if formatted.starts_with('-') {
                out.push_str(" - ");
                if formatted != "-1" {
                    out.push_str(&formatted[1..]);
                    out.push(' ');
                }
            } else {
                out.push_str(" + ");
                if formatted != "1" {
                    out.push_str(&formatted);
                    out.push(' ');
                }
            }
            out.push('e');
            out.push_str(&alloc::format!("{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
