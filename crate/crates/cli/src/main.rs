//! Command-line front end: matrix emission, braid-word evaluation,
//! verification suites, Bratteli export, and the randomized faithfulness
//! probe. All results go to stdout, diagnostics to stderr. Exit codes:
//! 0 success / all checks pass, 1 verification failure, 2 usage error.

mod probe;
mod render;

use braidrep::bmw::{self, BmwParams};
use braidrep::braid::BraidWord;
use braidrep::bratteli::{dimension_theorem_check, level_dimension_identity, BratteliGraph};
use braidrep::lk;
use braidrep::ring::{parse_rational, RationalPoint};
use braidrep::RelationCheck;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "braidrep",
    version,
    about = "Exact braid group representation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the matrix of one Lawrence-Krammer generator.
    #[command(name = "lk-matrix")]
    LkMatrix {
        /// Strand count (at least 2).
        #[arg(long)]
        n: usize,
        /// Generator index, 1 <= gen <= n-1.
        #[arg(long = "gen")]
        generator: usize,
        /// Emit the exact inverse instead.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Evaluate a braid word, symbolically or at an exact rational point.
    Apply {
        #[arg(long)]
        n: usize,
        /// Whitespace-separated signed generator indices, e.g. "1 -2 1".
        #[arg(long)]
        word: String,
        /// Rational value for q, as `p` or `p/r`; requires --t.
        #[arg(long)]
        q: Option<String>,
        /// Rational value for t; requires --q.
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Basis rescaling shift for the theorem3 suite.
        #[arg(long, default_value_t = 0)]
        k_shift: i64,
        /// For the bmw suite: also report fully independent parameters
        /// (kappa, m, l). Informational; never affects the exit code.
        #[arg(long)]
        generic: bool,
    },
    /// Export the Bratteli diagram of the tower.
    Bratteli {
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Table)]
        format: GraphFormat,
    },
    /// Sample random braid words; filtered nontrivial words must never map
    /// to the identity matrix.
    Probe {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Rational probe point for q; |q| must differ from 1.
        #[arg(long, default_value = "3/5")]
        q: String,
        /// Rational probe point for t; |t| must differ from 1.
        #[arg(long, default_value = "7/11")]
        t: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Braid,
    Bmw,
    Theorem3,
    Cubic,
    Bratteli,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::LkMatrix {
            n,
            generator,
            inverse,
            format,
        } => {
            let matrix = if inverse {
                lk::generator_inverse(n, generator)
            } else {
                lk::generator(n, generator)
            }
            .map_err(|e| e.to_string())?;
            let basis = render::basis_labels(n);
            match format {
                MatrixFormat::Json => {
                    println!("{}", render::matrix_json(n, generator, &basis, &matrix))
                }
                MatrixFormat::Latex => println!("{}", render::matrix_latex(&matrix)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply {
            n,
            word,
            q,
            t,
            format,
        } => {
            let parsed = BraidWord::parse(&word, n).map_err(|e| e.to_string())?;
            let basis = render::basis_labels(n);
            match (q, t) {
                (Some(q), Some(t)) => {
                    let point = probe_point(&q, &t, false)?;
                    let matrix =
                        lk::evaluate_numeric(&parsed, &point).map_err(|e| e.to_string())?;
                    match format {
                        MatrixFormat::Json => println!(
                            "{}",
                            render::numeric_json(n, &word, (&q, &t), &basis, &matrix)
                        ),
                        MatrixFormat::Latex => {
                            println!("{}", render::numeric_latex(&matrix))
                        }
                    }
                }
                (None, None) => {
                    let matrix = lk::evaluate(&parsed).map_err(|e| e.to_string())?;
                    match format {
                        MatrixFormat::Json => {
                            println!("{}", render::word_json(n, &word, &basis, &matrix))
                        }
                        MatrixFormat::Latex => println!("{}", render::matrix_latex(&matrix)),
                    }
                }
                _ => return Err("--q and --t must be given together".to_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            n,
            k_shift,
            generic,
        } => verify(suite, n, k_shift, generic),
        Command::Bratteli { levels, format } => {
            let graph = BratteliGraph::build(levels).map_err(|e| e.to_string())?;
            match format {
                GraphFormat::Dot => print!("{}", graph.to_dot()),
                GraphFormat::Json => println!("{}", graph.to_json()),
                GraphFormat::Table => print!("{}", graph.to_table()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe {
            n,
            trials,
            max_len,
            seed,
            q,
            t,
        } => {
            let point = probe_point(&q, &t, true)?;
            let config = probe::ProbeConfig {
                n,
                trials,
                max_len,
                seed,
                q_text: q,
                t_text: t,
                point,
            };
            let report = probe::run(&config).map_err(|e| e.to_string())?;
            let collisions = report.true_collisions;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serialization")
            );
            if collisions == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

/// Parse the (q, t) point; the probe additionally rejects values on the
/// unit circle, where the specialization degenerates.
fn probe_point(q: &str, t: &str, reject_unit: bool) -> Result<RationalPoint, String> {
    let qv = parse_rational(q).map_err(|e| e.to_string())?;
    let tv = parse_rational(t).map_err(|e| e.to_string())?;
    if reject_unit {
        let one = num::BigRational::from_integer(1.into());
        if num::Signed::abs(&qv) == one {
            return Err("probe point needs |q| != 1".to_string());
        }
        if num::Signed::abs(&tv) == one {
            return Err("probe point needs |t| != 1".to_string());
        }
    }
    RationalPoint::new([("q", qv), ("t", tv)]).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_shift: Option<i64>,
    pass: bool,
    checks: Vec<RelationCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generic_checks: Option<Vec<RelationCheck>>,
}

fn verify(suite: Suite, n: usize, k_shift: i64, generic: bool) -> Result<ExitCode, String> {
    let mut shift = None;
    let mut generic_checks = None;
    let (name, checks) = match suite {
        Suite::Braid => (
            "braid",
            lk::braid_relation_suite(n).map_err(|e| e.to_string())?,
        ),
        Suite::Bmw => {
            if generic {
                generic_checks = Some(
                    bmw::relation_suite_with(n, &BmwParams::generic())
                        .map_err(|e| e.to_string())?,
                );
            }
            ("bmw", bmw::relation_suite(n).map_err(|e| e.to_string())?)
        }
        Suite::Theorem3 => {
            shift = Some(k_shift);
            let report = bmw::theorem3_check(n, k_shift).map_err(|e| e.to_string())?;
            ("theorem3", report.checks)
        }
        Suite::Cubic => ("cubic", bmw::cubic_suite(n).map_err(|e| e.to_string())?),
        Suite::Bratteli => ("bratteli", bratteli_suite(n)?),
    };
    let pass = checks.iter().all(|c| c.pass);
    let report = VerifyReport {
        suite: name.to_string(),
        n,
        k_shift: shift,
        pass,
        checks,
        generic_checks,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialization")
    );
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

/// Dimension theorem for 3..=n, the squared-dimension level identity, and
/// the hook-length cross-check on full levels.
fn bratteli_suite(n: usize) -> Result<Vec<RelationCheck>, String> {
    if n < 3 {
        return Err("bratteli suite needs --n of at least 3".to_string());
    }
    let mut checks = Vec::new();
    for k in 3..=n {
        let report = dimension_theorem_check(k).map_err(|e| e.to_string())?;
        checks.push(RelationCheck {
            name: format!("dimension_theorem[n={k}]"),
            pass: report.pass,
            detail: (!report.pass).then(|| {
                format!(
                    "dim {} expected {} (parts {} + {} + {})",
                    report.dim,
                    report.expected,
                    report.upper_recursive,
                    report.upper_hook,
                    report.upper_row
                )
            }),
        });
    }
    for k in 1..=n {
        let report = level_dimension_identity(k).map_err(|e| e.to_string())?;
        checks.push(RelationCheck {
            name: format!("level_identity[n={k}]"),
            pass: report.pass,
            detail: (!report.pass).then(|| {
                format!(
                    "sum of squares {} vs (2n-1)!! {}",
                    report.sum_of_squares, report.double_factorial
                )
            }),
        });
    }
    let graph = BratteliGraph::build(n).map_err(|e| e.to_string())?;
    for k in 1..=n {
        let pass = graph
            .level(k)
            .iter()
            .filter(|node| node.diagram.size() == k)
            .all(|node| node.dim == node.diagram.hook_length_dim());
        checks.push(RelationCheck {
            name: format!("hecke_hook[n={k}]"),
            pass,
            detail: None,
        });
    }
    Ok(checks)
}
