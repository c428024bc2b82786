//! Acceptance criteria for the artifact, one integration test per
//! criterion (criteria 2 and 3 split into their independent clauses).
//!
//! Every test prints a single `criterion N ...: PASS/FAIL` line before
//! asserting, so the verdict and its evidence are visible in the test
//! output even when an assertion then fails. The reference tables are
//! metadata under audit here: where an assertion pins a reference value
//! that the exact kernel computation contradicts, the test states the
//! computed value and the evidence, then asserts the reference value as
//! written and fails honestly.

use std::process::Command;
use std::time::Instant;

use algkit::corpus::{bundled_corpus, CorpusEntry};
use algkit::report::corpus_report;
use algkit_core::centroid::{
    central_derivations_from, centroid, centroid_constraint_matrix, centroid_residuals,
    stacked_central_system_kernel,
};
use algkit_core::classify::{classify, find_non_nilpotent_derivation};
use algkit_core::derivation::{
    characterize_operator, derivations, is_bracket_closed, leibniz_residual,
};
use algkit_core::rational::{rat, rat_int};
use algkit_core::{RatMatrix, StructureConstants, Subspace};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn parse_entry(entry: &CorpusEntry) -> StructureConstants {
    entry
        .parse()
        .unwrap_or_else(|e| panic!("{} fails to parse: {e}", entry.name))
}

/// Criterion 1 — Table reproduction (Der): the corpus report computes
/// dim Der matching the reference Dim column on the unambiguous spot
/// set, and every remaining class either matches or carries a
/// structured discrepancy record with the echelon kernel basis as
/// evidence; the full corpus runs in under five seconds.
#[test]
fn criterion_1_table_reproduction_der() {
    let corpus = bundled_corpus();
    let start = Instant::now();
    let reports = corpus_report(&corpus);
    let elapsed = start.elapsed();

    let spot_set: &[(usize, usize)] = &[
        (1, 6),
        (2, 6),
        (10, 12),
        (16, 12),
        (20, 0),
        (34, 1),
        (41, 2),
        (51, 9),
    ];
    let mut failures: Vec<String> = Vec::new();

    for (idx, want) in spot_set {
        let r = &reports[idx - 1];
        if r.dim_der != *want {
            failures.push(format!(
                "spot As4_{idx}: computed dim Der = {}, reference {want}",
                r.dim_der
            ));
        }
    }

    // Every remaining class: exact match, or a structured discrepancy
    // record whose evidence is the computed echelon basis.
    for (entry, r) in corpus.iter().zip(&reports) {
        let der_discrepancies: Vec<_> = r
            .discrepancies
            .iter()
            .filter(|d| d.quantity == "dim_der")
            .collect();
        if r.dim_der == entry.expected_dim_der {
            if !der_discrepancies.is_empty() {
                failures.push(format!("{}: spurious dim_der discrepancy", entry.name));
            }
        } else {
            match der_discrepancies.as_slice() {
                [d] => {
                    if d.expected != entry.expected_dim_der
                        || d.computed != r.dim_der
                        || d.evidence_basis.len() != r.dim_der
                        || d.evidence_basis.iter().any(|m| m.len() != 4)
                    {
                        failures.push(format!(
                            "{}: malformed dim_der discrepancy record",
                            entry.name
                        ));
                    }
                }
                _ => failures.push(format!(
                    "{}: mismatch without a single structured discrepancy record",
                    entry.name
                )),
            }
        }
    }

    if elapsed.as_secs_f64() >= 5.0 {
        failures.push(format!(
            "full corpus report took {:.2}s (budget: 5s)",
            elapsed.as_secs_f64()
        ));
    }

    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 1 (Der table reproduction, 8 spot values, 58-class \
         match-or-discrepancy contract, <5s): {verdict} ({:.2}s)",
        elapsed.as_secs_f64()
    );
    for f in &failures {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "{failures:?}");
}

/// Criterion 2, contract clause — Table reproduction (centroid): every
/// class either matches the reference Dim column or emits a structured
/// discrepancy record with the exact echelon kernel basis attached; in
/// particular the As4_34 matrix-vs-Dim tension surfaces as a
/// discrepancy record rather than a crash or a silent pass.
#[test]
fn criterion_2_centroid_match_or_discrepancy_contract() {
    let corpus = bundled_corpus();
    let reports = corpus_report(&corpus);
    let mut failures: Vec<String> = Vec::new();

    for (entry, r) in corpus.iter().zip(&reports) {
        if r.error.is_some() {
            failures.push(format!("{}: analysis aborted", entry.name));
            continue;
        }
        let cen_discrepancies: Vec<_> = r
            .discrepancies
            .iter()
            .filter(|d| d.quantity == "dim_centroid")
            .collect();
        if r.dim_centroid == entry.expected_dim_centroid {
            if !cen_discrepancies.is_empty() {
                failures.push(format!("{}: spurious centroid discrepancy", entry.name));
            }
        } else {
            match cen_discrepancies.as_slice() {
                [d] => {
                    // The evidence must be the computed echelon basis,
                    // re-derivable from the definition.
                    let sc = parse_entry(entry);
                    let fresh: Vec<_> = centroid(&sc)
                        .basis_matrices()
                        .iter()
                        .map(|m| m.to_string_rows())
                        .collect();
                    if d.expected != entry.expected_dim_centroid
                        || d.computed != r.dim_centroid
                        || d.evidence_basis != fresh
                    {
                        failures.push(format!(
                            "{}: discrepancy record does not carry the exact echelon basis",
                            entry.name
                        ));
                    }
                }
                _ => failures.push(format!(
                    "{}: mismatch without a single structured discrepancy record",
                    entry.name
                )),
            }
        }
    }

    // The As4_34 tension specifically: reference Dim 1 versus a
    // printed basis of rank 4; the computed kernel settles it at 4 and
    // the mismatch must be on the record.
    let r34 = &reports[33];
    let has_34 = r34
        .discrepancies
        .iter()
        .any(|d| d.quantity == "dim_centroid" && d.expected == 1 && d.computed == 4);
    if !has_34 {
        failures.push(format!(
            "As4_34: expected a dim_centroid discrepancy record (reference 1 vs computed {}), found none",
            r34.dim_centroid
        ));
    }

    let n_disc = reports
        .iter()
        .flat_map(|r| &r.discrepancies)
        .filter(|d| d.quantity == "dim_centroid")
        .count();
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 2, match-or-discrepancy contract (58 classes, {n_disc} \
         centroid discrepancies surfaced with echelon-basis evidence, \
         As4_34 tension on record): {verdict}"
    );
    for f in &failures {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "{failures:?}");
}

/// Criterion 2, spot-value clause — asserts the six reference centroid
/// dimensions verbatim. Three of them (As4_1: 2, As4_7: 6, As4_25: 7)
/// contradict the exact kernel of the defining linear system, so this
/// test fails; the printed analysis carries the computed dimensions,
/// the echelon bases, and cross-checks showing where the reference
/// values come from.
#[test]
fn criterion_2_centroid_spot_values() {
    let corpus = bundled_corpus();
    let spot_set: &[(usize, usize)] = &[(1, 2), (2, 5), (7, 6), (11, 1), (20, 4), (25, 7)];

    let mut mismatches: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, want) in spot_set {
        let sc = parse_entry(&corpus[idx - 1]);
        let computed = centroid(&sc).dim();
        if computed != *want {
            mismatches.push((*idx, *want, computed));
        }
    }

    let verdict = if mismatches.is_empty() {
        "PASS"
    } else {
        "FAIL"
    };
    println!("criterion 2, six centroid spot values as printed: {verdict}");

    for (idx, want, computed) in &mismatches {
        println!(
            "  As4_{idx}: reference table prints dim = {want}, exact kernel of the \
             defining system phi(xy) = phi(x)y = x phi(y) has dim = {computed}"
        );
    }

    if !mismatches.is_empty() {
        // Supporting analysis, computed live so it can be audited.

        // As4_1: the two reference-table-only maps a11(E11+E33+E44),
        // a22 E22 satisfy the system, but so do the four corner maps
        // E31, E32, E41, E42 (images inside the two-sided annihilator
        // span{e3, e4}, kernels containing the square span{e3, e4}).
        // The reference tables include exactly these corner maps for
        // As4_2, whose products have the same annihilator structure,
        // so dropping them here is internally inconsistent.
        let sc1 = parse_entry(&corpus[0]);
        let mut e31 = RatMatrix::zeros(4, 4);
        e31.set(2, 0, rat_int(1));
        let fmt_vec = |v: &[algkit_core::Rat]| {
            v.iter()
                .map(algkit_core::rational::format_rat)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let (left, right) = centroid_residuals(&sc1, &e31, 0, 0).unwrap();
        let zero = vec![rat_int(0); 4];
        let all_products_zero = (0..4).all(|i| {
            (0..4).all(|j| {
                let (l, r) = centroid_residuals(&sc1, &e31, i, j).unwrap();
                l == zero && r == zero
            })
        });
        println!(
            "  As4_1 analysis: corner map E31 has residuals phi(e1 e1) - phi(e1) e1 = \
             [{}], phi(e1 e1) - e1 phi(e1) = [{}]; all 32 defining residuals \
             vanish: {all_products_zero}. Echelon basis of the computed kernel:",
            fmt_vec(&left),
            fmt_vec(&right)
        );
        for (t, m) in centroid(&sc1).basis_matrices().iter().enumerate() {
            println!("    basis {}: {:?}", t + 1, m.to_string_rows());
        }

        // As4_7 and As4_25: dimension of the kernel when only the left
        // condition phi(xy) = phi(x)y is imposed (the first n^3 rows of
        // the stacked system). The reference value 6 for As4_7 is
        // exactly the left-only dimension — the right condition forces
        // a12 = 0 there. For As4_25 not even the one-sided reading
        // reaches the printed 7.
        for idx in [7usize, 25] {
            let sc = parse_entry(&corpus[idx - 1]);
            let stacked = centroid_constraint_matrix(&sc);
            let n3 = 4 * 4 * 4;
            let left_rows: Vec<Vec<_>> = (0..n3).map(|r| stacked.row(r)).collect();
            let left_only = RatMatrix::from_rows(left_rows).kernel_basis().cols();
            let two_sided = centroid(&sc).dim();
            println!(
                "  As4_{idx} analysis: left-only condition gives dim {left_only}, \
                 two-sided system gives dim {two_sided}"
            );
        }
    }

    assert!(
        mismatches.is_empty(),
        "centroid spot values disagree with the exact kernel: {mismatches:?}"
    );
}

/// Criterion 3, derivation clause — the computed Der space for As4_1
/// equals the span of the six matrices given as its reference solution,
/// as subspaces (canonical-form equality).
#[test]
fn criterion_3_reference_der_basis() {
    let corpus = bundled_corpus();
    let sc = parse_entry(&corpus[0]);
    let der = derivations(&sc);

    // The six reference matrices: d1 = E11 + 2 E33, d2 = E22 + 2 E44,
    // d3 = E31, d4 = E32, d5 = E41, d6 = E42.
    let mut mats: Vec<RatMatrix> = Vec::new();
    let mut d1 = RatMatrix::zeros(4, 4);
    d1.set(0, 0, rat_int(1));
    d1.set(2, 2, rat_int(2));
    mats.push(d1);
    let mut d2 = RatMatrix::zeros(4, 4);
    d2.set(1, 1, rat_int(1));
    d2.set(3, 3, rat_int(2));
    mats.push(d2);
    for (r, c) in [(2, 0), (2, 1), (3, 0), (3, 1)] {
        let mut m = RatMatrix::zeros(4, 4);
        m.set(r, c, rat_int(1));
        mats.push(m);
    }

    let mut gens = RatMatrix::zeros(16, 6);
    for (t, m) in mats.iter().enumerate() {
        for (f, v) in m.flatten_col_major().into_iter().enumerate() {
            gens.set(f, t, v);
        }
    }
    let reference = Subspace::span(16, &gens);
    let equal = reference == *der.space();

    let verdict = if equal && der.dim() == 6 {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "criterion 3, Der(As4_1) equals the span of the six reference matrices \
         (canonical subspace equality, dim {}): {verdict}",
        der.dim()
    );
    assert_eq!(der.dim(), 6);
    assert!(equal, "computed Der(As4_1) is not the reference span");
}

/// Criterion 3, centroid clause — asserts the reference solution's constraint
/// pattern for As4_1 verbatim: every centroid element satisfies
/// a33 = a11 = a44 with a22 free. The exact system actually forces
/// a33 = a11 and a44 = a22 (two independent diagonal pairs, plus four
/// free lower-corner entries), so the a44 = a11 clause fails; the
/// analysis below shows the computed relations.
#[test]
fn criterion_3_reference_centroid_constraints() {
    let corpus = bundled_corpus();
    let sc = parse_entry(&corpus[0]);
    let gamma = centroid(&sc);
    let basis = gamma.basis_matrices();

    // a22 freedom holds in the computed space: some element has
    // a22 != a11.
    let a22_free = basis.iter().any(|m| m.at(1, 1) != m.at(0, 0));

    // The printed pattern: a33 = a11 and a44 = a11 on every element.
    let a33_eq_a11 = basis.iter().all(|m| m.at(2, 2) == m.at(0, 0));
    let a44_eq_a11 = basis.iter().all(|m| m.at(3, 3) == m.at(0, 0));
    // The relation the exact system actually imposes.
    let a44_eq_a22 = basis.iter().all(|m| m.at(3, 3) == m.at(1, 1));

    let pass = a33_eq_a11 && a44_eq_a11 && a22_free;
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!(
        "criterion 3, centroid constraint pattern a33 = a11 = a44 with a22 free \
         for As4_1: {verdict}"
    );
    println!(
        "  computed relations on the exact kernel: a33 = a11 holds on every \
         element: {a33_eq_a11}; a44 = a11 holds on every element: {a44_eq_a11}; \
         a44 = a22 holds on every element: {a44_eq_a22}; a22 free: {a22_free}"
    );
    println!(
        "  the exact system couples the diagonal as a33 = a11 and a44 = a22 \
         (e1 e1 = e3 ties a33 to a11, e2 e2 = e4 ties a44 to a22); no condition \
         ties the two pairs together. Echelon basis:"
    );
    for (t, m) in basis.iter().enumerate() {
        println!("    basis {}: {:?}", t + 1, m.to_string_rows());
    }

    assert!(a33_eq_a11, "a33 = a11 fails on the computed kernel");
    assert!(
        a44_eq_a11,
        "a44 = a11 fails on the computed kernel (the exact relation is a44 = a22)"
    );
    assert!(a22_free, "a22 is not free in the computed kernel");
}

/// Criterion 4 — characteristic nilpotency: exactly one corpus class is
/// flagged; 100 random rational combinations of its Der basis are
/// nilpotent (exact check); every other class is either a non-nilpotent
/// algebra or carries a non-nilpotent derivation witness.
#[test]
fn criterion_4_characteristic_nilpotency() {
    let corpus = bundled_corpus();
    let mut failures: Vec<String> = Vec::new();
    let mut cn_classes: Vec<String> = Vec::new();

    for entry in &corpus {
        let sc = parse_entry(entry);
        let flags = classify(&sc);
        if flags.characteristically_nilpotent {
            cn_classes.push(entry.name.clone());
            // 100 random rational combinations of the Der basis must be
            // nilpotent, exactly.
            let der = derivations(&sc);
            let basis = der.basis_matrices();
            let mut rng = ChaCha8Rng::seed_from_u64(0x0AC4_C0DE);
            for trial in 0..100 {
                let mut d = RatMatrix::zeros(4, 4);
                for b in &basis {
                    let num = rng.gen_range(-9i64..=9);
                    let den = rng.gen_range(1i64..=4);
                    d = d.add(&b.scale(&rat(num, den)));
                }
                if !d.is_nilpotent().unwrap() {
                    failures.push(format!(
                        "{}: random Der combination {trial} is not nilpotent",
                        entry.name
                    ));
                    break;
                }
            }
        } else if flags.algebra_nilpotent {
            // Nilpotent algebra, not characteristically nilpotent: a
            // non-nilpotent derivation witness must exist.
            match find_non_nilpotent_derivation(&sc) {
                Some(w) => {
                    let residual_ok = (0..4).all(|i| {
                        (0..4).all(|j| {
                            leibniz_residual(&sc, &w, i, j).unwrap() == vec![rat_int(0); 4]
                        })
                    });
                    if !residual_ok {
                        failures.push(format!("{}: witness is not a derivation", entry.name));
                    }
                    if w.is_nilpotent().unwrap() {
                        failures.push(format!("{}: witness is nilpotent", entry.name));
                    }
                }
                None => failures.push(format!(
                    "{}: nilpotent algebra but no non-nilpotent derivation witness found",
                    entry.name
                )),
            }
        }
        // Non-nilpotent algebras satisfy the criterion by themselves.
    }

    if cn_classes.len() != 1 {
        failures.push(format!(
            "expected exactly one characteristically nilpotent class, found {cn_classes:?}"
        ));
    }

    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 4 (exactly one characteristically nilpotent class: {:?}; 100 \
         nilpotent random Der combinations there; witness or non-nilpotent \
         algebra everywhere else): {verdict}",
        cn_classes
    );
    for f in &failures {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "{failures:?}");
}

/// Randomized search for associative algebras of dim <= 3: sparse
/// small-integer tensors filtered by the exact associativity check.
fn random_associative_algebras(count: usize, rng: &mut ChaCha8Rng) -> Vec<StructureConstants> {
    let mut out = Vec::new();
    let mut attempt = 0usize;
    while out.len() < count {
        attempt += 1;
        let n = rng.gen_range(1usize..=3);
        let mut gamma = vec![rat_int(0); n * n * n];
        let nonzero = rng.gen_range(1usize..=3);
        for _ in 0..nonzero {
            let slot = rng.gen_range(0..n * n * n);
            gamma[slot] = rat_int(rng.gen_range(-2i64..=2));
        }
        let sc = StructureConstants::new(
            format!("random_{}_{attempt}", out.len() + 1),
            n,
            gamma,
            Vec::new(),
        );
        if sc.check_associative() {
            out.push(sc);
        }
    }
    out
}

/// A random invertible rational matrix, by rejection.
fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> RatMatrix {
    loop {
        let mut p = RatMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                p.set(r, c, rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)));
            }
        }
        if p.inverse().unwrap().is_some() {
            return p;
        }
    }
}

/// Criterion 5 — property suite independent of the reference tables, on
/// all 58 corpus entries plus 20 randomly generated associative
/// algebras of dim <= 3: (a) exact Leibniz residuals vanish on the Der
/// basis; (b) exact centroid residuals vanish on the centroid basis;
/// (c) the identity map is in the centroid; (d) Der is bracket-closed;
/// (e) the intersection centroid ∩ Der equals the kernel of the stacked
/// combined system; (f) dim Der and dim centroid are invariant under 5
/// random rational basis changes per algebra.
#[test]
fn criterion_5_property_suite() {
    let corpus = bundled_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    let mut algebras: Vec<StructureConstants> = corpus.iter().map(parse_entry).collect();
    algebras.extend(random_associative_algebras(20, &mut rng));

    let mut failures: Vec<String> = Vec::new();
    for sc in &algebras {
        let n = sc.dim();
        let zero = vec![rat_int(0); n];
        let der = derivations(sc);
        let gamma = centroid(sc);

        // (a) exact Leibniz residual zero for every Der basis element.
        for d in der.basis_matrices() {
            for i in 0..n {
                for j in 0..n {
                    if leibniz_residual(sc, &d, i, j).unwrap() != zero {
                        failures.push(format!("{}: Leibniz residual nonzero", sc.name()));
                    }
                }
            }
        }

        // (b) exact centroid residual zero for every basis element.
        for phi in gamma.basis_matrices() {
            for i in 0..n {
                for j in 0..n {
                    let (l, r) = centroid_residuals(sc, &phi, i, j).unwrap();
                    if l != zero || r != zero {
                        failures.push(format!("{}: centroid residual nonzero", sc.name()));
                    }
                }
            }
        }

        // (c) identity map is in the centroid.
        if !gamma.contains_matrix(&RatMatrix::identity(n)).unwrap() {
            failures.push(format!("{}: identity not in centroid", sc.name()));
        }

        // (d) Der is closed under the commutator bracket.
        if !is_bracket_closed(n, &der.basis_matrices()).unwrap() {
            failures.push(format!("{}: Der not bracket-closed", sc.name()));
        }

        // (e) centroid ∩ Der equals the stacked-system kernel.
        let central = central_derivations_from(sc, &der, &gamma);
        let intersection = der.space().intersect(gamma.space()).unwrap();
        let stacked = stacked_central_system_kernel(sc);
        if intersection != *central.space() || intersection != stacked {
            failures.push(format!(
                "{}: centroid ∩ Der disagrees with the stacked kernel",
                sc.name()
            ));
        }

        // (f) dim Der and dim centroid invariant under 5 random basis
        // changes.
        for _ in 0..5 {
            let p = random_invertible(n, &mut rng);
            let tr = sc.change_basis(&p).unwrap();
            if derivations(&tr).dim() != der.dim() {
                failures.push(format!("{}: dim Der not basis-invariant", sc.name()));
            }
            if centroid(&tr).dim() != gamma.dim() {
                failures.push(format!("{}: dim centroid not basis-invariant", sc.name()));
            }
        }
    }

    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 5 (property suite on 58 corpus entries + 20 random associative \
         algebras of dim <= 3: residuals, identity in centroid, bracket closure, \
         stacked-kernel oracle, basis invariance): {verdict}"
    );
    for f in &failures {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "{failures:?}");
}

/// Criterion 6 — operator-theorem equivalence: on every corpus algebra,
/// 100 random matrices (half generic, half built near the Der subspace
/// so both branches occur) classify identically under the
/// kernel-membership test and the commutator-operator test.
#[test]
fn criterion_6_operator_characterization_equivalence() {
    let corpus = bundled_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1CE_0006);
    let mut failures: Vec<String> = Vec::new();
    let mut members = 0usize;
    let mut non_members = 0usize;

    for entry in &corpus {
        let sc = parse_entry(entry);
        let der = derivations(&sc);
        let basis = der.basis_matrices();
        for trial in 0..100 {
            let m = if trial % 2 == 0 || basis.is_empty() {
                // Generic random matrix.
                let mut m = RatMatrix::zeros(4, 4);
                for r in 0..4 {
                    for c in 0..4 {
                        m.set(r, c, rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)));
                    }
                }
                m
            } else {
                // Random combination of the Der basis, exercising the
                // membership branch.
                let mut m = RatMatrix::zeros(4, 4);
                for b in &basis {
                    m = m.add(&b.scale(&rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3))));
                }
                m
            };
            let member = der.contains_matrix(&m).unwrap();
            let ch = characterize_operator(&sc, &m).unwrap();
            if member {
                members += 1;
            } else {
                non_members += 1;
            }
            if !ch.consistent() || ch.leibniz != member {
                failures.push(format!(
                    "{} trial {trial}: kernel membership {member}, Leibniz {}, \
                     left-operator {}, right-operator {}",
                    entry.name, ch.leibniz, ch.left_operator, ch.right_operator
                ));
            }
        }
    }

    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion 6 (operator test vs kernel membership on 58 x 100 random \
         matrices, {members} members / {non_members} non-members, zero \
         disagreements): {verdict}"
    );
    for f in failures.iter().take(5) {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "{} disagreements", failures.len());
}

/// Criterion 7 — determinism: two runs of the report command in JSON
/// mode produce byte-identical output.
#[test]
fn criterion_7_report_determinism() {
    let exe = env!("CARGO_BIN_EXE_algkit");
    let run = || {
        Command::new(exe)
            .args(["report", "--format", "json"])
            .env_remove("ALGKIT_CORPUS_DIR")
            .output()
            .expect("report command runs")
    };
    let first = run();
    let second = run();

    let ok = first.status.success()
        && second.status.success()
        && !first.stdout.is_empty()
        && first.stdout == second.stdout;
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!(
        "criterion 7 (two `report --format json` runs byte-identical, {} bytes): {verdict}",
        first.stdout.len()
    );
    assert!(first.status.success() && second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "JSON report is not deterministic"
    );
}
