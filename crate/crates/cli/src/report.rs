//! Report assembly: computes all invariants for one algebra and packs
//! them into a schema-stable, byte-deterministic structure.
//!
//! The JSON schema is a public contract. Field names `name`, `dim`,
//! `params`, `dim_der`, `dim_centroid`, `dim_central_der`, `flags`,
//! `discrepancies`, `bases` are stable; rationals are always rendered
//! as `p/q` strings, never as decimals. Every collection is a `Vec` in
//! a fixed order, so serializing the same input twice yields identical
//! bytes.

use algkit_core::centroid::{central_derivations_from, centroid};
use algkit_core::classify::{classify, find_non_nilpotent_derivation};
use algkit_core::derivation::derivations;
use algkit_core::rational::format_rat;
use algkit_core::{RatMatrix, StructureConstants, Subspace};
use serde::Serialize;

use crate::corpus::CorpusEntry;

/// A parameter binding as reported: the effective value plus the
/// declared excluded values, all as exact `p/q` strings.
#[derive(Debug, Clone, Serialize)]
pub struct ParamReport {
    pub name: String,
    pub value: String,
    pub excluded: Vec<String>,
}

/// Nilpotency-related flags for one algebra.
#[derive(Debug, Clone, Serialize)]
pub struct FlagsReport {
    /// The associator vanishes on all basis triples.
    pub associative: bool,
    /// The power chain A ⊇ A² ⊇ A³ ⊇ … reaches zero.
    pub algebra_nilpotent: bool,
    /// Every derivation is a nilpotent operator (Engel flag verdict).
    pub all_derivations_nilpotent: bool,
    /// Both of the above.
    pub characteristically_nilpotent: bool,
    /// Dimensions of the ascending flag built by the Engel test.
    pub flag_chain: Vec<usize>,
}

/// A mismatch between a computed dimension and the reference value
/// stored in the corpus, with the computed echelon basis attached as
/// evidence. The exact kernel computation is the ground truth; the
/// reference column is metadata under comparison.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    /// Which quantity disagrees: `"dim_der"` or `"dim_centroid"`.
    pub quantity: String,
    /// The reference dimension the corpus records.
    pub expected: usize,
    /// The dimension of the computed kernel.
    pub computed: usize,
    /// The computed echelon basis: one n×n matrix per basis element,
    /// entries as `p/q` strings.
    pub evidence_basis: Vec<Vec<Vec<String>>>,
}

/// Echelon bases of the three computed spaces, one matrix per basis
/// element, entries as `p/q` strings.
#[derive(Debug, Clone, Serialize)]
pub struct BasesReport {
    pub der: Vec<Vec<Vec<String>>>,
    pub centroid: Vec<Vec<Vec<String>>>,
    pub central_der: Vec<Vec<Vec<String>>>,
}

/// The two center conventions, reported side by side.
#[derive(Debug, Clone, Serialize)]
pub struct CentersReport {
    /// Dimension of {z : za = az = 0 for all a}.
    pub annihilator_center_dim: usize,
    /// Dimension of {z : za = az for all a}.
    pub commutant_center_dim: usize,
    /// Echelon basis vectors of the annihilator center.
    pub annihilator_center_basis: Vec<Vec<String>>,
    /// Echelon basis vectors of the commutant center.
    pub commutant_center_basis: Vec<Vec<String>>,
}

/// The full per-algebra report.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub name: String,
    pub dim: usize,
    pub params: Vec<ParamReport>,
    pub dim_der: usize,
    pub dim_centroid: usize,
    pub dim_central_der: usize,
    pub flags: FlagsReport,
    pub discrepancies: Vec<Discrepancy>,
    pub bases: BasesReport,
    pub centers: CentersReport,
    /// Whether the intersection Γ ∩ Der coincides with the definitional
    /// characterization of central derivations (maps sending the
    /// algebra into its annihilator center and annihilating A²).
    pub central_der_definitions_coincide: bool,
    /// A non-nilpotent derivation, when one exists, as evidence for a
    /// negative Engel verdict.
    pub non_nilpotent_derivation_witness: Option<Vec<Vec<String>>>,
    /// Set when the entry could not be analyzed (e.g. a parse failure
    /// in an external corpus); all other fields are then defaults.
    pub error: Option<String>,
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_string_rows()
}

fn matrices_strings(ms: &[RatMatrix]) -> Vec<Vec<Vec<String>>> {
    ms.iter().map(matrix_strings).collect()
}

fn subspace_vector_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors()
        .iter()
        .map(|v| v.iter().map(format_rat).collect())
        .collect()
}

fn params_report(sc: &StructureConstants) -> Vec<ParamReport> {
    sc.params()
        .iter()
        .map(|p| ParamReport {
            name: p.name.clone(),
            value: format_rat(&p.value),
            excluded: p.excluded.iter().map(format_rat).collect(),
        })
        .collect()
}

/// Computes every invariant for one algebra. When reference dimensions
/// are supplied, mismatches are recorded as discrepancy records with
/// the computed echelon basis attached; computation never reads the
/// reference values.
pub fn analyze(sc: &StructureConstants, expected: Option<(usize, usize)>) -> AlgebraReport {
    let der = derivations(sc);
    let gamma = centroid(sc);
    let central = central_derivations_from(sc, &der, &gamma);
    let flags = classify(sc);

    let der_basis = der.basis_matrices();
    let gamma_basis = gamma.basis_matrices();
    let central_basis = central.basis_matrices();

    let mut discrepancies = Vec::new();
    if let Some((want_der, want_gamma)) = expected {
        if der.dim() != want_der {
            discrepancies.push(Discrepancy {
                quantity: "dim_der".to_string(),
                expected: want_der,
                computed: der.dim(),
                evidence_basis: matrices_strings(&der_basis),
            });
        }
        if gamma.dim() != want_gamma {
            discrepancies.push(Discrepancy {
                quantity: "dim_centroid".to_string(),
                expected: want_gamma,
                computed: gamma.dim(),
                evidence_basis: matrices_strings(&gamma_basis),
            });
        }
    }

    let ann_center = sc.annihilator_center();
    let com_center = sc.commutant_center();

    let witness = if flags.all_derivations_nilpotent {
        None
    } else {
        find_non_nilpotent_derivation(sc).map(|m| matrix_strings(&m))
    };

    AlgebraReport {
        name: sc.name().to_string(),
        dim: sc.dim(),
        params: params_report(sc),
        dim_der: der.dim(),
        dim_centroid: gamma.dim(),
        dim_central_der: central.dim(),
        flags: FlagsReport {
            associative: flags.associative,
            algebra_nilpotent: flags.algebra_nilpotent,
            all_derivations_nilpotent: flags.all_derivations_nilpotent,
            characteristically_nilpotent: flags.characteristically_nilpotent,
            flag_chain: flags.flag_chain,
        },
        discrepancies,
        bases: BasesReport {
            der: matrices_strings(&der_basis),
            centroid: matrices_strings(&gamma_basis),
            central_der: matrices_strings(&central_basis),
        },
        centers: CentersReport {
            annihilator_center_dim: ann_center.dim(),
            commutant_center_dim: com_center.dim(),
            annihilator_center_basis: subspace_vector_strings(&ann_center),
            commutant_center_basis: subspace_vector_strings(&com_center),
        },
        central_der_definitions_coincide: central.definitions_coincide(),
        non_nilpotent_derivation_witness: witness,
        error: None,
    }
}

/// Builds a placeholder report for an entry that failed to parse, so a
/// corpus report never aborts on a single bad entry.
pub fn error_report(name: &str, message: String) -> AlgebraReport {
    AlgebraReport {
        name: name.to_string(),
        dim: 0,
        params: Vec::new(),
        dim_der: 0,
        dim_centroid: 0,
        dim_central_der: 0,
        flags: FlagsReport {
            associative: false,
            algebra_nilpotent: false,
            all_derivations_nilpotent: false,
            characteristically_nilpotent: false,
            flag_chain: Vec::new(),
        },
        discrepancies: Vec::new(),
        bases: BasesReport {
            der: Vec::new(),
            centroid: Vec::new(),
            central_der: Vec::new(),
        },
        centers: CentersReport {
            annihilator_center_dim: 0,
            commutant_center_dim: 0,
            annihilator_center_basis: Vec::new(),
            commutant_center_basis: Vec::new(),
        },
        central_der_definitions_coincide: true,
        non_nilpotent_derivation_witness: None,
        error: Some(message),
    }
}

/// Runs the full corpus report in class order. Per-entry failures
/// become error records, never aborts.
pub fn corpus_report(entries: &[CorpusEntry]) -> Vec<AlgebraReport> {
    entries
        .iter()
        .map(|entry| match entry.parse() {
            Ok(sc) => analyze(
                &sc,
                Some((entry.expected_dim_der, entry.expected_dim_centroid)),
            ),
            Err(e) => error_report(&entry.name, e.to_string()),
        })
        .collect()
}

/// Serializes reports to the stable JSON form (pretty, trailing
/// newline). Struct fields and `Vec`s fix the order, so output is
/// byte-deterministic.
pub fn to_json(reports: &[AlgebraReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("report serialization is total");
    s.push('\n');
    s
}

/// Serializes one report to JSON.
pub fn single_to_json(report: &AlgebraReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization is total");
    s.push('\n');
    s
}

/// Renders one matrix with aligned columns for terminal output.
pub fn format_matrix(rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return String::from("  (empty)\n");
    }
    let cols = rows[0].len();
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        out.push_str("  [");
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push(' ');
            }
            out.push_str(&" ".repeat(widths[c] - cell.len()));
            out.push_str(cell);
        }
        out.push_str("]\n");
    }
    out
}

fn flags_cell(r: &AlgebraReport) -> String {
    let mut parts = Vec::new();
    if r.flags.algebra_nilpotent {
        parts.push("nilp");
    }
    if r.flags.characteristically_nilpotent {
        parts.push("CN");
    }
    if parts.is_empty() {
        parts.push("-");
    }
    parts.join(" ")
}

/// Renders the corpus report as a fixed-width text table with one row
/// per class and a discrepancy column comparing computed dimensions
/// to the reference values.
pub fn render_text_table(reports: &[AlgebraReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<8} {:>8} {:>12} {:>12} {:<9} discrepancies\n",
        "class", "dim Der", "dim centroid", "dim central", "flags"
    ));
    out.push_str(&"-".repeat(78));
    out.push('\n');
    let mut n_disc = 0usize;
    for r in reports {
        if let Some(err) = &r.error {
            out.push_str(&format!("{:<8} error: {}\n", r.name, err));
            continue;
        }
        let disc = if r.discrepancies.is_empty() {
            String::new()
        } else {
            n_disc += r.discrepancies.len();
            r.discrepancies
                .iter()
                .map(|d| {
                    format!(
                        "{}: reference {}, computed {}",
                        d.quantity, d.expected, d.computed
                    )
                })
                .collect::<Vec<_>>()
                .join("; ")
        };
        out.push_str(&format!(
            "{:<8} {:>8} {:>12} {:>12} {:<9} {}\n",
            r.name,
            r.dim_der,
            r.dim_centroid,
            r.dim_central_der,
            flags_cell(r),
            disc
        ));
    }
    out.push_str(&"-".repeat(78));
    out.push('\n');
    out.push_str(&format!(
        "{} classes, {} dimension discrepancies vs the reference tables\n",
        reports.len(),
        n_disc
    ));
    out.push_str("flags: nilp = nilpotent algebra, CN = characteristically nilpotent\n");
    out
}

/// Renders a detailed single-algebra text report. `show` selects which
/// sections to print.
pub struct TextSections {
    pub der: bool,
    pub centroid: bool,
    pub central: bool,
    pub flags: bool,
}

pub fn render_text_single(report: &AlgebraReport, show: &TextSections) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {} (dim {})\n", report.name, report.dim));
    for p in &report.params {
        let excl = if p.excluded.is_empty() {
            String::new()
        } else {
            format!(" (excluded: {})", p.excluded.join(", "))
        };
        out.push_str(&format!("parameter {} = {}{}\n", p.name, p.value, excl));
    }
    if let Some(err) = &report.error {
        out.push_str(&format!("error: {err}\n"));
        return out;
    }
    if show.der {
        out.push_str(&format!("dim Der(A) = {}\n", report.dim_der));
        for (i, m) in report.bases.der.iter().enumerate() {
            out.push_str(&format!("d_{} =\n{}", i + 1, format_matrix(m)));
        }
    }
    if show.centroid {
        out.push_str(&format!("dim centroid(A) = {}\n", report.dim_centroid));
        for (i, m) in report.bases.centroid.iter().enumerate() {
            out.push_str(&format!("phi_{} =\n{}", i + 1, format_matrix(m)));
        }
    }
    if show.central {
        out.push_str(&format!(
            "dim central derivations C(A) = {}\n",
            report.dim_central_der
        ));
        for (i, m) in report.bases.central_der.iter().enumerate() {
            out.push_str(&format!("c_{} =\n{}", i + 1, format_matrix(m)));
        }
        out.push_str(&format!(
            "definitional characterization coincides: {}\n",
            report.central_der_definitions_coincide
        ));
    }
    if show.flags {
        out.push_str(&format!("associative: {}\n", report.flags.associative));
        out.push_str(&format!(
            "nilpotent algebra: {}\n",
            report.flags.algebra_nilpotent
        ));
        out.push_str(&format!(
            "all derivations nilpotent: {}\n",
            report.flags.all_derivations_nilpotent
        ));
        out.push_str(&format!(
            "characteristically nilpotent: {}\n",
            report.flags.characteristically_nilpotent
        ));
        let chain = report
            .flags
            .flag_chain
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" < ");
        out.push_str(&format!("Engel flag chain dimensions: {chain}\n"));
        if let Some(w) = &report.non_nilpotent_derivation_witness {
            out.push_str("non-nilpotent derivation witness:\n");
            out.push_str(&format_matrix(w));
        }
        out.push_str(&format!(
            "annihilator center dim = {}, commutant center dim = {}\n",
            report.centers.annihilator_center_dim, report.centers.commutant_center_dim
        ));
    }
    if !report.discrepancies.is_empty() {
        for d in &report.discrepancies {
            out.push_str(&format!(
                "discrepancy: {} reference {}, computed {}\n",
                d.quantity, d.expected, d.computed
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{bundled_corpus, find_entry};

    #[test]
    fn analyze_as4_1_matches_known_dimensions() {
        let corpus = bundled_corpus();
        let sc = find_entry(&corpus, "As4_1").unwrap().parse().unwrap();
        let report = analyze(&sc, Some((6, 2)));
        assert_eq!(report.dim_der, 6);
        assert_eq!(report.dim_centroid, 6);
        assert_eq!(report.dim_central_der, 4);
        // The reference centroid dimension (2) disagrees with the
        // computed kernel (6): exactly one discrepancy, with evidence.
        assert_eq!(report.discrepancies.len(), 1);
        assert_eq!(report.discrepancies[0].quantity, "dim_centroid");
        assert_eq!(report.discrepancies[0].computed, 6);
        assert_eq!(report.discrepancies[0].evidence_basis.len(), 6);
        assert!(report.flags.algebra_nilpotent);
        assert!(!report.flags.characteristically_nilpotent);
        assert!(report.non_nilpotent_derivation_witness.is_some());
        assert!(report.central_der_definitions_coincide);
        assert!(report.error.is_none());
    }

    #[test]
    fn corpus_report_runs_in_class_order_and_is_deterministic() {
        let corpus = bundled_corpus();
        let reports = corpus_report(&corpus);
        assert_eq!(reports.len(), 58);
        for (i, r) in reports.iter().enumerate() {
            assert_eq!(r.name, format!("As4_{}", i + 1));
            assert!(r.error.is_none());
        }
        let a = to_json(&reports);
        let b = to_json(&corpus_report(&corpus));
        assert_eq!(a, b);
    }

    #[test]
    fn error_entries_become_records_not_aborts() {
        let entry = crate::corpus::CorpusEntry {
            name: "broken".to_string(),
            definition: "dim 4\ne1*e1 = e9\n".to_string(),
            expected_dim_der: 0,
            expected_dim_centroid: 0,
        };
        let reports = corpus_report(&[entry]);
        assert_eq!(reports.len(), 1);
        assert!(reports[0].error.is_some());
        let text = render_text_table(&reports);
        assert!(text.contains("error"));
    }

    #[test]
    fn text_table_marks_the_characteristically_nilpotent_class() {
        let corpus = bundled_corpus();
        let reports = corpus_report(&corpus);
        let cn_rows: Vec<_> = reports
            .iter()
            .filter(|r| r.flags.characteristically_nilpotent)
            .collect();
        assert_eq!(cn_rows.len(), 1);
        let table = render_text_table(&reports);
        let cn_line = table
            .lines()
            .find(|l| l.starts_with(&cn_rows[0].name))
            .unwrap();
        assert!(cn_line.contains("CN"));
    }

    #[test]
    fn rationals_render_as_exact_fractions() {
        let corpus = bundled_corpus();
        let sc = find_entry(&corpus, "As4_9").unwrap().parse().unwrap();
        let report = analyze(&sc, None);
        let json = single_to_json(&report);
        // The default binding alpha = 2 appears as an exact integer
        // string; no decimal points anywhere in the document.
        assert!(json.contains("\"value\": \"2\""));
        assert!(!json.contains("0.5"));
    }
}
