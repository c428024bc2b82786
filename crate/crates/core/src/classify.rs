//! Structural classification flags: associativity, algebra nilpotency,
//! nilpotency of the whole derivation algebra, and characteristic
//! nilpotency (the conjunction of the last two, per the convention used
//! throughout this crate).
//!
//! Whether *every* derivation is a nilpotent operator is decided without
//! sampling, by building the canonical ascending flag
//! `V_0 = {0} ⊂ V_1 ⊂ …` with
//! `V_{k+1} = {v : D v ∈ V_k for every basis derivation D}`. For a
//! bracket-closed family the flag reaches the full space exactly when
//! every operator in the span is nilpotent (the two directions are the
//! easy triangularity argument and Engel's theorem). The chain is
//! strictly increasing until it stalls or finishes, so at most `n` steps
//! are needed.

use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::algebra::StructureConstants;
use crate::derivation::{derivations, is_bracket_closed};
use crate::matrix::RatMatrix;
use crate::rational::{rat_int, Rat};
use crate::subspace::Subspace;

/// Why the Engel-flag computation refused to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngelError {
    /// The given operator family is not closed under the commutator, so
    /// "flag reaches the full space" would not characterize nilpotency of
    /// the span.
    NotBracketClosed,
}

impl fmt::Display for EngelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngelError::NotBracketClosed => {
                write!(
                    f,
                    "operator family is not closed under the commutator bracket"
                )
            }
        }
    }
}

/// Decides whether every operator in the span of `mats` (a bracket-closed
/// family of `n × n` matrices) is nilpotent, returning the dimensions of
/// the ascending flag actually constructed.
///
/// The returned chain starts at `0`; it ends at `n` exactly when the
/// answer is `true`. On a stall the stalled dimension is not repeated.
pub fn engel_flag(n: usize, mats: &[RatMatrix]) -> Result<(bool, Vec<usize>), EngelError> {
    if !is_bracket_closed(n, mats).map_err(|_| EngelError::NotBracketClosed)? {
        return Err(EngelError::NotBracketClosed);
    }
    let mut current = Subspace::zero(n);
    let mut chain = vec![0usize];
    loop {
        // V_{k+1} = ker of the stacked maps v ↦ Q_k · D_i · v, where the
        // rows of Q_k vanish exactly on V_k.
        let q = current.annihilator();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for d in mats {
            let qd = q.mul(d);
            for r in 0..qd.rows() {
                rows.push(qd.row(r));
            }
        }
        let stack = if rows.is_empty() {
            RatMatrix::zeros(0, n)
        } else {
            RatMatrix::from_rows(rows)
        };
        let next = Subspace::from_independent_basis(n, stack.kernel_basis());
        if next.dim() == n {
            chain.push(n);
            return Ok((true, chain));
        }
        if next.dim() == current.dim() {
            return Ok((false, chain));
        }
        chain.push(next.dim());
        current = next;
    }
}

/// The classification summary for one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationFlags {
    /// The associator vanishes on all basis triples.
    pub associative: bool,
    /// The two-sided power chain A ⊇ A² ⊇ A³ ⊇ … reaches zero.
    pub algebra_nilpotent: bool,
    /// Every element of Der(A) is a nilpotent operator.
    pub all_derivations_nilpotent: bool,
    /// Both of the above (the convention for characteristic nilpotency
    /// used here).
    pub characteristically_nilpotent: bool,
    /// Dimensions of the ascending Engel flag built for Der(A); ends at
    /// `dim A` exactly when `all_derivations_nilpotent`.
    pub flag_chain: Vec<usize>,
}

/// Computes all classification flags for an algebra.
pub fn classify(sc: &StructureConstants) -> ClassificationFlags {
    let associative = sc.check_associative();
    let algebra_nilpotent = sc.is_nilpotent_algebra();
    let der = derivations(sc);
    let (all_derivations_nilpotent, flag_chain) = engel_flag(sc.dim(), &der.basis_matrices())
        .expect("Der(A) is closed under the commutator for every bilinear product");
    ClassificationFlags {
        associative,
        algebra_nilpotent,
        all_derivations_nilpotent,
        characteristically_nilpotent: algebra_nilpotent && all_derivations_nilpotent,
        flag_chain,
    }
}

/// Deterministically searches `Der(A)` for a non-nilpotent element:
/// first the solver basis, then the basis sum, then pairwise sums and
/// differences, then a fixed-seed stream of small random combinations.
/// Returns `None` when the search exhausts its budget (in particular
/// whenever every derivation is nilpotent).
pub fn find_non_nilpotent_derivation(sc: &StructureConstants) -> Option<RatMatrix> {
    let n = sc.dim();
    let mats = derivations(sc).basis_matrices();
    if mats.is_empty() {
        return None;
    }
    let not_nil = |m: &RatMatrix| !m.is_nilpotent().expect("candidates are square");

    for m in &mats {
        if not_nil(m) {
            return Some(m.clone());
        }
    }
    let mut total = RatMatrix::zeros(n, n);
    for m in &mats {
        total = total.add(m);
    }
    if not_nil(&total) {
        return Some(total);
    }
    for a in 0..mats.len() {
        for b in (a + 1)..mats.len() {
            let sum = mats[a].add(&mats[b]);
            if not_nil(&sum) {
                return Some(sum);
            }
            let diff = mats[a].sub(&mats[b]);
            if not_nil(&diff) {
                return Some(diff);
            }
        }
    }
    // Fixed-seed xorshift stream of coefficient vectors in {-2,…,3}.
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..256 {
        let mut candidate = RatMatrix::zeros(n, n);
        let mut nonzero = false;
        for m in &mats {
            let c = (next() % 6) as i64 - 2;
            if c != 0 {
                nonzero = true;
                candidate = candidate.add(&m.scale(&rat_int(c)));
            }
        }
        if nonzero && not_nil(&candidate) {
            return Some(candidate);
        }
    }
    None
}

/// Debug rendering of a flag chain like `0 ⊂ 1 ⊂ 3 ⊂ 4`.
pub fn format_flag_chain(chain: &[usize]) -> alloc::string::String {
    let mut out = alloc::string::String::new();
    for (ix, d) in chain.iter().enumerate() {
        if ix > 0 {
            out.push_str(" < ");
        }
        out.push_str(&format!("{d}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::is_derivation;
    use crate::parse::parse_algebra;

    fn as4_1() -> StructureConstants {
        parse_algebra("dim 4\ne1*e1 = e3\ne2*e2 = e4\n").unwrap()
    }

    fn as4_20() -> StructureConstants {
        parse_algebra("dim 4\ne1*e1 = e1\ne2*e2 = e2\ne3*e3 = e3\ne4*e4 = e4\n").unwrap()
    }

    fn as4_36() -> StructureConstants {
        parse_algebra("dim 4\ne1*e1 = e4\ne1*e4 = -e3\ne2*e1 = e3\ne2*e2 = e3\ne4*e1 = -e3\n")
            .unwrap()
    }

    fn unit(n: usize, r: usize, c: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        m.set(r - 1, c - 1, rat_int(1));
        m
    }

    #[test]
    fn strictly_triangular_family_passes() {
        let mats = alloc::vec![unit(3, 1, 2), unit(3, 1, 3), unit(3, 2, 3)];
        let (ok, chain) = engel_flag(3, &mats).unwrap();
        assert!(ok);
        assert_eq!(chain, alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn non_closed_family_is_rejected() {
        let mats = alloc::vec![unit(2, 1, 2), unit(2, 2, 1)];
        assert_eq!(engel_flag(2, &mats), Err(EngelError::NotBracketClosed));
    }

    #[test]
    fn empty_family_is_vacuously_nilpotent() {
        let (ok, chain) = engel_flag(4, &[]).unwrap();
        assert!(ok);
        assert_eq!(chain, alloc::vec![0, 4]);
    }

    #[test]
    fn nilpotent_algebra_with_diagonal_derivations() {
        // e1e1 = e3, e2e2 = e4: the algebra is nilpotent but Der contains
        // diag(1, 0, 2, 0), so it is not characteristically nilpotent.
        let flags = classify(&as4_1());
        assert!(flags.associative);
        assert!(flags.algebra_nilpotent);
        assert!(!flags.all_derivations_nilpotent);
        assert!(!flags.characteristically_nilpotent);
        // The six basis derivations have trivial common kernel.
        assert_eq!(flags.flag_chain, alloc::vec![0]);
        let witness = find_non_nilpotent_derivation(&as4_1()).expect("witness exists");
        assert!(!witness.is_nilpotent().unwrap());
        assert!(is_derivation(&as4_1(), &witness).unwrap());
    }

    #[test]
    fn semisimple_algebra_has_zero_derivations() {
        let flags = classify(&as4_20());
        assert!(flags.associative);
        assert!(!flags.algebra_nilpotent);
        // Der = {0}: vacuously all nilpotent, but the algebra is not.
        assert!(flags.all_derivations_nilpotent);
        assert!(!flags.characteristically_nilpotent);
        assert_eq!(flags.flag_chain, alloc::vec![0, 4]);
        assert!(find_non_nilpotent_derivation(&as4_20()).is_none());
    }

    #[test]
    fn characteristically_nilpotent_example() {
        let flags = classify(&as4_36());
        assert!(flags.associative);
        assert!(flags.algebra_nilpotent);
        assert!(flags.all_derivations_nilpotent);
        assert!(flags.characteristically_nilpotent);
        assert_eq!(flags.flag_chain, alloc::vec![0, 1, 2, 3, 4]);
        assert!(find_non_nilpotent_derivation(&as4_36()).is_none());
        // The derivation algebra itself has dimension 4 here.
        assert_eq!(derivations(&as4_36()).dim(), 4);
    }

    #[test]
    fn zero_algebra_is_nilpotent_but_not_characteristically() {
        let sc = StructureConstants::zero_algebra(2);
        let flags = classify(&sc);
        assert!(flags.associative);
        assert!(flags.algebra_nilpotent);
        // Der = gl_2 contains the identity.
        assert!(!flags.all_derivations_nilpotent);
        assert!(!flags.characteristically_nilpotent);
    }

    #[test]
    fn chain_formatting() {
        assert_eq!(format_flag_chain(&[0, 1, 3, 4]), "0 < 1 < 3 < 4");
        assert_eq!(format_flag_chain(&[0]), "0");
    }
}
