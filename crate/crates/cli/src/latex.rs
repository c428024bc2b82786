//! LaTeX rendering of the corpus report: a standalone document with a
//! three-column table (class, dim Der, dim centroid). Computed values
//! that disagree with the reference dimensions carry superscript
//! markers explained in a legend below the table.

use crate::report::AlgebraReport;

/// Marker characters used for the two discrepancy kinds.
const DER_MARK: &str = "*";
const CENTROID_MARK: &str = "\\dagger";

fn class_label(name: &str) -> String {
    // "As4_7" renders as the math label $\mathrm{As}_4^{7}$; any other
    // name is typeset verbatim (escaping is limited to underscores,
    // the only special character a class label can contain).
    if let Some(idx) = name.strip_prefix("As4_") {
        if idx.chars().all(|c| c.is_ascii_digit()) {
            return format!("$\\mathrm{{As}}_4^{{{idx}}}$");
        }
    }
    name.replace('_', "\\_")
}

fn marked_value(value: usize, mark: Option<&str>) -> String {
    match mark {
        Some(m) => format!("${value}^{{{m}}}$"),
        None => format!("${value}$"),
    }
}

/// Renders the reports as a complete LaTeX document.
pub fn render_latex(reports: &[AlgebraReport]) -> String {
    let mut rows = String::new();
    let mut legend: Vec<String> = Vec::new();
    for r in reports {
        if let Some(err) = &r.error {
            rows.push_str(&format!(
                "{} & \\multicolumn{{2}}{{l}}{{error: {}}} \\\\\n",
                class_label(&r.name),
                err.replace('\\', " ")
                    .replace('&', "\\&")
                    .replace('_', "\\_")
            ));
            continue;
        }
        let mut der_mark = None;
        let mut cen_mark = None;
        for d in &r.discrepancies {
            match d.quantity.as_str() {
                "dim_der" => {
                    der_mark = Some(DER_MARK);
                    legend.push(format!(
                        "${{}}^{{{}}}$ {}: reference $\\dim\\mathrm{{Der}} = {}$, computed ${}$.",
                        DER_MARK,
                        class_label(&r.name),
                        d.expected,
                        d.computed
                    ));
                }
                "dim_centroid" => {
                    cen_mark = Some(CENTROID_MARK);
                    legend.push(format!(
                        "${{}}^{{{}}}$ {}: reference $\\dim\\Gamma = {}$, computed ${}$.",
                        CENTROID_MARK,
                        class_label(&r.name),
                        d.expected,
                        d.computed
                    ));
                }
                _ => {}
            }
        }
        rows.push_str(&format!(
            "{} & {} & {} \\\\\n",
            class_label(&r.name),
            marked_value(r.dim_der, der_mark),
            marked_value(r.dim_centroid, cen_mark)
        ));
    }

    let legend_block = if legend.is_empty() {
        String::from("\\noindent All computed dimensions agree with the reference tables.\n")
    } else {
        let mut block = String::from(
            "\\noindent Superscripts mark computed dimensions that disagree with the \
             reference tables; the exact kernel computation is the value shown.\n\n\
             \\begin{itemize}\n",
        );
        for item in &legend {
            block.push_str(&format!("  \\item {item}\n"));
        }
        block.push_str("\\end{itemize}\n");
        block
    };

    format!(
        "\\documentclass{{article}}\n\
         \\begin{{document}}\n\
         \n\
         \\begin{{center}}\n\
         \\begin{{tabular}}{{lrr}}\n\
         \\hline\n\
         IC & $\\dim\\mathrm{{Der}}(A)$ & $\\dim\\Gamma(A)$ \\\\\n\
         \\hline\n\
         {rows}\\hline\n\
         \\end{{tabular}}\n\
         \\end{{center}}\n\
         \n\
         {legend_block}\
         \n\
         \\end{{document}}\n"
    )
}
