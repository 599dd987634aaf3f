//! `pte` — exact-arithmetic toolkit for C-finite sequences and
//! equal-power-sum identities.
//!
//! Subcommands expand rational generating functions, verify the built-in
//! identity families, construct Chernick tuples, fit recurrences, form
//! Hadamard products, and search for small PTE pairs. All arithmetic is
//! exact; integers print as decimal strings in every output format.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical deviation
//! or a non-integral series, 2 on usage or parse errors.

mod output;

use std::fmt;
use std::io;
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use output::{format_recurrence, render, Format, Row};
use pte_core::cfinite::{self, CFiniteError};
use pte_core::identities;
use pte_core::pell;
use pte_core::pte::{chernick, CHERNICK_LABELS};
use pte_core::search::{find_ideal, SearchSpec};
use pte_core::RationalGF;

#[derive(Parser)]
#[command(
    name = "pte",
    version,
    about = "Exact-arithmetic toolkit for C-finite sequences and equal-power-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a rational generating function into series coefficients.
    Expand(ExpandArgs),
    /// Verify a built-in identity family over an index range.
    Verify(VerifyArgs),
    /// Evaluate the Chernick quadratic forms at integer parameters (m, n).
    Chernick(ChernickArgs),
    /// Fit a minimal linear recurrence to the given terms.
    FindRecurrence(FindRecurrenceArgs),
    /// Hadamard (termwise) product of two rational generating functions.
    Hadamard(HadamardArgs),
    /// Exhaustively search for PTE pairs within a bound.
    Search(SearchArgs),
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct WorkersArg {
    /// Split the index range over N threads (output bytes are unchanged).
    #[arg(long, default_value = "1")]
    workers: NonZeroUsize,
}

#[derive(Args)]
struct ExpandArgs {
    /// Generating function as NUM/DEN, e.g. "(x^2+164x+3)/(x^3-99x^2+99x-1)".
    #[arg(
        long,
        required_unless_present = "label",
        conflicts_with = "label",
        allow_hyphen_values = true
    )]
    gf: Option<String>,
    /// Built-in sequence label: one of a, b, c, d, e, f, p, q, r, s, t.
    #[arg(long)]
    label: Option<String>,
    /// How many leading coefficients to print.
    #[arg(long)]
    terms: usize,
    /// Allow non-integer coefficients, printed as exact fractions.
    #[arg(long)]
    rational: bool,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    target: VerifyTarget,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Check the eleven-sequence power-sum identity.
    Theorem {
        /// Largest index k to check.
        #[arg(long, default_value_t = 200)]
        max_k: usize,
        /// Exponents to check, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
        powers: Vec<u32>,
        #[command(flatten)]
        workers: WorkersArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check the cubic identity a^3 + b^3 - c^3 = (-1)^n.
    Ramanujan {
        /// Largest index n to check.
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[command(flatten)]
        workers: WorkersArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check recurrence values against the Q(sqrt 6) closed forms.
    ClosedForms {
        /// Largest index k to check.
        #[arg(long, default_value_t = 200)]
        max_k: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Rebuild H1, H2, H3 by sequence algebra and compare canonical forms.
    HForms {
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check the Pell invariant h(k+1)^2 - 10 h(k+1) h(k) + h(k)^2 = 1.
    Pell {
        /// Largest index k to check.
        #[arg(long, default_value_t = 1000)]
        max_k: usize,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Args)]
struct ChernickArgs {
    /// Parameter m of the quadratic forms.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
    m: BigInt,
    /// Parameter n of the quadratic forms.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
    n: BigInt,
    /// Apply v -> M*v + K to every value, given as "M,K".
    #[arg(long, value_name = "M,K", allow_hyphen_values = true, value_parser = parse_affine)]
    affine: Option<(BigInt, BigInt)>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct FindRecurrenceArgs {
    /// Comma-separated integer terms, e.g. "0,1,10,99,980,9701".
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_parser = parse_bigint,
        required = true
    )]
    terms: Vec<BigInt>,
    /// Largest order to try; defaults to the most the data can certify.
    #[arg(long)]
    max_order: Option<usize>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct HadamardArgs {
    /// First factor as NUM/DEN.
    #[arg(long, allow_hyphen_values = true)]
    gf1: String,
    /// Second factor as NUM/DEN.
    #[arg(long, allow_hyphen_values = true)]
    gf2: String,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Args)]
struct SearchArgs {
    /// Number of elements on each side (2..=5).
    #[arg(long)]
    size: usize,
    /// Elements are drawn from 0..=bound (bound <= 100).
    #[arg(long)]
    bound: u64,
    /// Required power-sum agreement: exponents 1..=degree.
    #[arg(long)]
    degree: usize,
    /// Allow repeated elements within one side.
    #[arg(long)]
    allow_repeats: bool,
    /// Collapse translate families to representatives touching 0.
    #[arg(long)]
    normalize: bool,
    #[command(flatten)]
    format: FormatArg,
}

/// A handler failure with its exit code.
#[derive(Debug)]
enum CliError {
    /// Bad invocation or unparsable input: exit 2.
    Usage(String),
    /// Mathematical deviation or non-integral series: exit 1.
    Math(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(message) | CliError::Math(message) => f.write_str(message),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Math(_) => ExitCode::from(1),
        }
    }
}

/// What a successful handler hands back for rendering.
struct Outcome {
    rows: Vec<Row>,
    format: Format,
    /// Human summary for stderr; stdout stays machine-readable.
    summary: Option<String>,
    /// True when deviations were found (exit 1 after printing them).
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if let Err(error) = render(&outcome.rows, outcome.format, &mut stdout) {
                eprintln!("error: {error}");
                return ExitCode::from(1);
            }
            if let Some(summary) = &outcome.summary {
                eprintln!("{summary}");
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args.target),
        Command::Chernick(args) => cmd_chernick(args),
        Command::FindRecurrence(args) => cmd_find_recurrence(args),
        Command::Hadamard(args) => cmd_hadamard(args),
        Command::Search(args) => cmd_search(args),
    }
}

fn parse_bigint(text: &str) -> Result<BigInt, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("not an integer: {text:?}"))
}

fn parse_affine(text: &str) -> Result<(BigInt, BigInt), String> {
    let (m, k) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"M,K\", got {text:?}"))?;
    Ok((parse_bigint(m)?, parse_bigint(k)?))
}

fn resolve_gf(gf: Option<&str>, label: Option<&str>) -> Result<RationalGF, CliError> {
    match (gf, label) {
        (Some(text), None) => text
            .parse()
            .map_err(|error| CliError::Usage(format!("cannot parse generating function: {error}"))),
        (None, Some(label)) => identities::sequence_gf(label).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown label {label:?}; expected one of {}",
                identities::LABELS.join(", ")
            ))
        }),
        _ => unreachable!("clap enforces exactly one of --gf/--label"),
    }
}

fn cmd_expand(args: ExpandArgs) -> Result<Outcome, CliError> {
    let gf = resolve_gf(args.gf.as_deref(), args.label.as_deref())?;
    let rows = if args.rational {
        cfinite::expand_rational(&gf, args.terms)
            .iter()
            .enumerate()
            .map(|(index, value)| Row::new().cell("index", index).cell("value", value))
            .collect()
    } else {
        match cfinite::expand(&gf, args.terms) {
            Ok(values) => values
                .iter()
                .enumerate()
                .map(|(index, value)| Row::new().cell("index", index).cell("value", value))
                .collect(),
            Err(error @ CFiniteError::NonIntegralSeries { .. }) => {
                return Err(CliError::Math(format!(
                    "{error} (use --rational to print fractions)"
                )))
            }
            Err(error) => return Err(CliError::Math(error.to_string())),
        }
    };
    Ok(Outcome {
        rows,
        format: args.format.format,
        summary: None,
        failed: false,
    })
}

/// Builds the shared verify outcome: deviation rows, a stderr summary,
/// and exit 1 when any deviation exists.
fn report(target: &str, scope: String, rows: Vec<Row>, format: Format) -> Outcome {
    let failed = !rows.is_empty();
    let summary = if failed {
        format!("{target}: {} deviation(s) over {scope}", rows.len())
    } else {
        format!("{target}: ok over {scope}")
    };
    Outcome {
        rows,
        format,
        summary: Some(summary),
        failed,
    }
}

fn cmd_verify(target: VerifyTarget) -> Result<Outcome, CliError> {
    match target {
        VerifyTarget::Theorem {
            max_k,
            powers,
            workers,
            format,
        } => {
            if powers.is_empty() {
                return Err(CliError::Usage(
                    "--powers needs at least one exponent".to_string(),
                ));
            }
            let deviations = identities::verify_identity(max_k, &powers, workers.workers.get());
            let rows = deviations
                .iter()
                .map(|d| {
                    Row::new()
                        .cell("k", d.k)
                        .cell("power", d.power)
                        .cell("value", &d.value)
                })
                .collect();
            Ok(report(
                "theorem",
                format!("k <= {max_k}, powers {powers:?}"),
                rows,
                format.format,
            ))
        }
        VerifyTarget::Ramanujan {
            max_n,
            workers,
            format,
        } => {
            let deviations = identities::verify_ramanujan(max_n, workers.workers.get());
            let rows = deviations
                .iter()
                .map(|d| {
                    Row::new()
                        .cell("n", d.n)
                        .cell("value", &d.value)
                        .cell("expected", &d.expected)
                })
                .collect();
            Ok(report(
                "ramanujan",
                format!("n <= {max_n}"),
                rows,
                format.format,
            ))
        }
        VerifyTarget::ClosedForms { max_k, format } => {
            let deviations = pell::verify_closed_forms(max_k);
            let rows = deviations
                .iter()
                .map(|d| {
                    Row::new()
                        .cell("k", d.k)
                        .cell("form", d.kind)
                        .cell("recurrence", &d.recurrence)
                        .cell("closed_form", &d.closed_form)
                })
                .collect();
            Ok(report(
                "closed-forms",
                format!("k <= {max_k}"),
                rows,
                format.format,
            ))
        }
        VerifyTarget::HForms { format } => {
            let derived = identities::derive_h_forms();
            let expected = identities::expected_h_forms();
            let assembled = identities::assemble_a_gf(&derived);
            let a_gf = identities::sequence_gf("a").expect("built-in label");
            let checks = [
                ("H1", &derived.h1, &expected.h1),
                ("H2", &derived.h2, &expected.h2),
                ("H3", &derived.h3, &expected.h3),
                ("-5 H3 + 4 H2 - 3 H1 + 2/(1-x)", &assembled, &a_gf),
            ];
            let rows = checks
                .iter()
                .filter(|(_, computed, expected)| computed != expected)
                .map(|(check, computed, expected)| {
                    Row::new()
                        .cell("check", check)
                        .cell("computed", computed)
                        .cell("expected", expected)
                })
                .collect();
            Ok(report(
                "h-forms",
                format!("{} checks", checks.len()),
                rows,
                format.format,
            ))
        }
        VerifyTarget::Pell { max_k, format } => {
            let deviations = pell::verify_pell_invariant(max_k);
            let rows = deviations
                .iter()
                .map(|d| Row::new().cell("k", d.k).cell("value", &d.value))
                .collect();
            Ok(report("pell", format!("k <= {max_k}"), rows, format.format))
        }
    }
}

fn cmd_chernick(args: ChernickArgs) -> Result<Outcome, CliError> {
    let tuple = chernick(&args.m, &args.n);
    let (mul, add) = args
        .affine
        .clone()
        .unwrap_or_else(|| (BigInt::one(), BigInt::zero()));
    let mut rows: Vec<Row> = CHERNICK_LABELS
        .iter()
        .zip(tuple.lhs.iter().chain(tuple.rhs.iter()))
        .map(|(label, value)| {
            Row::new()
                .cell("label", label)
                .cell("value", &mul * value + &add)
        })
        .collect();
    let degree = tuple.pair().affine(&mul, &add).degree();
    rows.push(Row::new().cell("label", "degree").cell("value", degree));
    Ok(Outcome {
        rows,
        format: args.format.format,
        summary: Some(format!("degree certificate: {degree}")),
        failed: false,
    })
}

fn cmd_find_recurrence(args: FindRecurrenceArgs) -> Result<Outcome, CliError> {
    let max_order = args
        .max_order
        .unwrap_or_else(|| args.terms.len().saturating_sub(2) / 2);
    if max_order == 0 {
        return Err(CliError::Usage(
            "need at least 4 terms to certify an order-1 recurrence".to_string(),
        ));
    }
    match cfinite::find_recurrence(&args.terms, max_order) {
        Ok(Some(seq)) => {
            let row = Row::new()
                .cell("order", seq.order())
                .cell("recurrence", format_recurrence(seq.rec()))
                .cell("gf", seq.to_gf());
            Ok(Outcome {
                rows: vec![row],
                format: args.format.format,
                summary: None,
                failed: false,
            })
        }
        Ok(None) => Err(CliError::Math(format!(
            "no linear recurrence of order <= {max_order} fits the {} given terms",
            args.terms.len()
        ))),
        Err(error @ CFiniteError::InsufficientData { .. }) => {
            Err(CliError::Usage(error.to_string()))
        }
        Err(error) => Err(CliError::Math(error.to_string())),
    }
}

fn cmd_hadamard(args: HadamardArgs) -> Result<Outcome, CliError> {
    let parse = |text: &str| -> Result<RationalGF, CliError> {
        text.parse()
            .map_err(|error| CliError::Usage(format!("cannot parse generating function: {error}")))
    };
    let first = cfinite::to_recurrence(&parse(&args.gf1)?)
        .map_err(|error| CliError::Math(error.to_string()))?;
    let second = cfinite::to_recurrence(&parse(&args.gf2)?)
        .map_err(|error| CliError::Math(error.to_string()))?;
    let product =
        cfinite::hadamard(&first, &second).map_err(|error| CliError::Math(error.to_string()))?;
    let row = Row::new()
        .cell("order", product.order())
        .cell("gf", product.to_gf());
    Ok(Outcome {
        rows: vec![row],
        format: args.format.format,
        summary: None,
        failed: false,
    })
}

fn cmd_search(args: SearchArgs) -> Result<Outcome, CliError> {
    let spec = SearchSpec {
        size: args.size,
        bound: args.bound,
        target_degree: args.degree,
        allow_repeats: args.allow_repeats,
        normalize_translation: args.normalize,
    };
    let pairs = find_ideal(&spec).map_err(|error| CliError::Usage(error.to_string()))?;
    let summary = format!(
        "search: {} pair(s) for size {}, bound {}, degree >= {}",
        pairs.len(),
        args.size,
        args.bound,
        args.degree
    );
    let rows = pairs
        .iter()
        .map(|pair| {
            Row::new()
                .cell("a", pair.a())
                .cell("b", pair.b())
                .cell("degree", pair.degree())
        })
        .collect();
    Ok(Outcome {
        rows,
        format: args.format.format,
        summary: Some(summary),
        failed: false,
    })
}
