//! Command-line front end for exact derivation/centroid analysis of
//! finite-dimensional algebras given by rational structure constants.
//!
//! Exit codes are a stable contract:
//!   0 success, 1 parse error, 2 associativity failure,
//!   3 parameter error (unbound/excluded/malformed binding), 4 I/O error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use algkit::{corpus, latex, report};
use algkit_core::parse::is_parameter_error;
use algkit_core::rational::parse_rat;
use algkit_core::{parse_algebra_with_params, Rat, StructureConstants};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{AlgebraReport, TextSections};

const EXIT_PARSE: u8 = 1;
const EXIT_ASSOCIATIVITY: u8 = 2;
const EXIT_PARAMETER: u8 = 3;
const EXIT_IO: u8 = 4;

/// A failure that terminates the invocation with a specific exit code.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Parser)]
#[command(
    name = "algkit",
    version,
    about = "Exact derivation, centroid, and nilpotency analysis for \
             finite-dimensional algebras over the rationals",
    after_help = "Exit codes: 0 success, 1 parse error, 2 associativity \
                  failure, 3 parameter error, 4 I/O error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Arguments shared by the single-algebra commands.
#[derive(Args)]
struct AlgebraArgs {
    /// Definition file path, or the name of a bundled corpus entry
    /// (e.g. "As4_7")
    target: String,
    /// Override a parameter default, e.g. --params alpha=3 (repeatable)
    #[arg(long = "params", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write output to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Directory with an alternative corpus (index.json + definitions);
    /// the ALGKIT_CORPUS_DIR environment variable has the same effect
    #[arg(long, value_name = "PATH")]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a definition and verify associativity
    Check {
        /// Definition file path, or the name of a bundled corpus entry
        target: String,
        /// Override a parameter default, e.g. --params alpha=3 (repeatable)
        #[arg(long = "params", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Directory with an alternative corpus
        #[arg(long, value_name = "PATH")]
        corpus: Option<PathBuf>,
    },
    /// Compute the derivation algebra Der(A)
    Der(AlgebraArgs),
    /// Compute the centroid of A
    Centroid(AlgebraArgs),
    /// Compute the central derivations C(A) = centroid ∩ Der(A)
    CentralDer(AlgebraArgs),
    /// Compute nilpotency and characteristic-nilpotency flags
    Classify(AlgebraArgs),
    /// Analyze the whole corpus and compare against the reference tables
    Report {
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write output to this file instead of standard output
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Directory with an alternative corpus (index.json + definitions)
        #[arg(long, value_name = "PATH")]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Check {
            target,
            params,
            corpus,
        } => cmd_check(&target, &params, corpus.as_deref()),
        Command::Der(args) => single_algebra_command(&args, Section::Der),
        Command::Centroid(args) => single_algebra_command(&args, Section::Centroid),
        Command::CentralDer(args) => single_algebra_command(&args, Section::Central),
        Command::Classify(args) => single_algebra_command(&args, Section::Flags),
        Command::Report {
            format,
            output,
            corpus,
        } => cmd_report(format, output.as_deref(), corpus.as_deref()),
    }
}

/// Which section a single-algebra command prints in text mode.
enum Section {
    Der,
    Centroid,
    Central,
    Flags,
}

/// Parses repeatable `--params name=value` bindings.
fn parse_param_overrides(specs: &[String]) -> Result<Vec<(String, Rat)>, CliError> {
    specs
        .iter()
        .map(|spec| {
            let (name, value) = spec.split_once('=').ok_or_else(|| {
                CliError::new(
                    EXIT_PARAMETER,
                    format!("--params expects NAME=VALUE, got '{spec}'"),
                )
            })?;
            let name = name.trim();
            let value = value.trim();
            let rat = parse_rat(value).ok_or_else(|| {
                CliError::new(
                    EXIT_PARAMETER,
                    format!("--params {name}: '{value}' is not a rational number"),
                )
            })?;
            Ok((name.to_string(), rat))
        })
        .collect()
}

/// The definition text a command operates on, plus reference dims when
/// the target was a corpus entry.
struct ResolvedTarget {
    name: String,
    definition: String,
    expected: Option<(usize, usize)>,
}

/// Resolves a target string: an existing file path wins, otherwise the
/// corpus (bundled, or overridden via --corpus / ALGKIT_CORPUS_DIR) is
/// searched by entry name.
fn resolve_target(target: &str, corpus_dir: Option<&Path>) -> Result<ResolvedTarget, CliError> {
    let path = Path::new(target);
    if path.is_file() {
        let definition = fs::read_to_string(path)
            .map_err(|e| CliError::new(EXIT_IO, format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| target.to_string());
        return Ok(ResolvedTarget {
            name,
            definition,
            expected: None,
        });
    }
    let entries =
        corpus::resolve_corpus(corpus_dir).map_err(|e| CliError::new(EXIT_IO, e.to_string()))?;
    match corpus::find_entry(&entries, target) {
        Some(entry) => Ok(ResolvedTarget {
            name: entry.name.clone(),
            definition: entry.definition.clone(),
            expected: Some((entry.expected_dim_der, entry.expected_dim_centroid)),
        }),
        None => Err(CliError::new(
            EXIT_IO,
            format!("'{target}' is neither a readable file nor a corpus entry name"),
        )),
    }
}

/// Parses the resolved definition, mapping parameter-binding failures
/// to exit 3 and all other parse failures to exit 1.
fn parse_target(
    resolved: &ResolvedTarget,
    overrides: &[(String, Rat)],
) -> Result<StructureConstants, CliError> {
    match parse_algebra_with_params(&resolved.definition, overrides) {
        Ok(mut sc) => {
            sc.set_name(resolved.name.clone());
            Ok(sc)
        }
        Err(e) => {
            let code = if is_parameter_error(&e) {
                EXIT_PARAMETER
            } else {
                EXIT_PARSE
            };
            Err(CliError::new(code, format!("{}: {e}", resolved.name)))
        }
    }
}

fn write_output(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::new(EXIT_IO, format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            match std::io::stdout().lock().write_all(text.as_bytes()) {
                Ok(()) => Ok(()),
                // A closed pipe (e.g. piping into `head`) is not an error.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                    std::process::exit(0);
                }
                Err(e) => Err(CliError::new(EXIT_IO, format!("stdout: {e}"))),
            }
        }
    }
}

fn cmd_check(target: &str, params: &[String], corpus_dir: Option<&Path>) -> Result<(), CliError> {
    let overrides = parse_param_overrides(params)?;
    let resolved = resolve_target(target, corpus_dir)?;
    let sc = parse_target(&resolved, &overrides)?;
    if let Some((i, j, k)) = sc.associativity_violation() {
        // 1-based indices, matching the definition grammar.
        let (i, j, k) = (i + 1, j + 1, k + 1);
        return Err(CliError::new(
            EXIT_ASSOCIATIVITY,
            format!(
                "{}: not associative: (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k}) \
                 at basis triple ({i}, {j}, {k})",
                sc.name()
            ),
        ));
    }
    println!(
        "ok: {} parses (dim {}) and is associative",
        sc.name(),
        sc.dim()
    );
    Ok(())
}

fn single_algebra_command(args: &AlgebraArgs, section: Section) -> Result<(), CliError> {
    let overrides = parse_param_overrides(&args.params)?;
    let resolved = resolve_target(&args.target, args.corpus.as_deref())?;
    let sc = parse_target(&resolved, &overrides)?;
    // Reference dimensions only make sense at the default binding; an
    // overridden parameter changes the algebra under analysis.
    let expected = if overrides.is_empty() {
        resolved.expected
    } else {
        None
    };
    let rep = report::analyze(&sc, expected);
    let text = match args.format {
        OutputFormat::Json => report::single_to_json(&rep),
        OutputFormat::Latex => latex::render_latex(std::slice::from_ref(&rep)),
        OutputFormat::Text => {
            let show = match section {
                Section::Der => TextSections {
                    der: true,
                    centroid: false,
                    central: false,
                    flags: false,
                },
                Section::Centroid => TextSections {
                    der: false,
                    centroid: true,
                    central: false,
                    flags: false,
                },
                Section::Central => TextSections {
                    der: false,
                    centroid: false,
                    central: true,
                    flags: false,
                },
                Section::Flags => TextSections {
                    der: false,
                    centroid: false,
                    central: false,
                    flags: true,
                },
            };
            report::render_text_single(&rep, &show)
        }
    };
    write_output(&text, args.output.as_deref())
}

fn cmd_report(
    format: OutputFormat,
    output: Option<&Path>,
    corpus_dir: Option<&Path>,
) -> Result<(), CliError> {
    let entries =
        corpus::resolve_corpus(corpus_dir).map_err(|e| CliError::new(EXIT_IO, e.to_string()))?;
    let reports: Vec<AlgebraReport> = report::corpus_report(&entries);
    let text = match format {
        OutputFormat::Json => report::to_json(&reports),
        OutputFormat::Latex => latex::render_latex(&reports),
        OutputFormat::Text => report::render_text_table(&reports),
    };
    write_output(&text, output)
}
