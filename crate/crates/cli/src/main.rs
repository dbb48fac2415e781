//! `taumax` CLI: critical points, limit constants, sequence tables, figure
//! data, and derivative sign-alternation checks.
//!
//! Exit codes: 0 success, 2 usage error, 3 solver failure, 4 claim or
//! verification failure.

mod figures;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use taumax::cm::check_cm;
use taumax::limits::solve_x0;
use taumax::maximizer::{solve_t_star, SolverConfig};
use taumax::sequence::{compute_sequence, verify_claims, Sampling};
use taumax::{ClaimReport, CriticalPoint, Error, LimitConstants, SequenceRow};

use output::{emit, fmt_sig, kv_table, resolve_format, OutFormat};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 2;
const EXIT_SOLVER: i32 = 3;
const EXIT_CLAIMS: i32 = 4;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "taumax",
    version,
    about = "Maximum of tau(x,t) = (t - (t+x+1)(t/(1+t))^(x+1))/x: per-x critical points, limit constants, sequence claims, figure data, and complete-monotonicity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the critical point t*(x) and the maximum alpha(x) for one x >= 1
    Critical(CriticalArgs),
    /// Compute the limit constants a0, x0, ell and alpha*
    Limit(LimitArgs),
    /// Tabulate t_n, alpha_n, t_n/n and verify the sequence claims
    Sequence(SequenceArgs),
    /// Emit plot data (1: eta with its root; 2: tau(n,t) curves for n=1,2,3)
    Figure(FigureArgs),
    /// Check sign alternation of the f_beta derivatives over a grid
    VerifyCm(VerifyCmArgs),
}

#[derive(Args)]
struct CommonOpts {
    /// Output format (default: table on a terminal, csv otherwise)
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Significant digits in table/csv/plot output (1..=17)
    #[arg(long, default_value_t = 12)]
    digits: usize,
    /// Solver relative tolerance
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Solver absolute tolerance
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Solver iteration budget
    #[arg(long)]
    max_iter: Option<u32>,
}

impl CommonOpts {
    fn solver_config(&self) -> SolverConfig {
        let mut cfg = SolverConfig::default();
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.max_iter {
            cfg.max_iter = v;
        }
        cfg
    }

    fn format(&self) -> OutFormat {
        resolve_format(self.format, self.out.as_deref())
    }
}

#[derive(Args)]
struct CriticalArgs {
    /// Evaluation point, x >= 1 (non-integer values are fine)
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct LimitArgs {
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct SequenceArgs {
    /// Largest sequence index
    #[arg(long)]
    n_max: u64,
    /// dense: every n; log: a logarithmic subset always containing 1, 2, 3
    #[arg(long, value_enum, default_value_t = SamplingArg::Dense)]
    sampling: SamplingArg,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SamplingArg {
    Dense,
    Log,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id: 1 or 2
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    id: u8,
    /// Samples per curve
    #[arg(long, default_value_t = 500)]
    points: usize,
    /// Right end of the a range for figure 1
    #[arg(long, default_value_t = 2.5)]
    a_max: f64,
    /// Right end of the t range for figure 2
    #[arg(long, default_value_t = 6.0)]
    t_max: f64,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct VerifyCmArgs {
    /// Exponent of f_beta; defaults to the threshold 1/(1 + alpha*)
    #[arg(long, allow_hyphen_values = true, conflicts_with = "beta_from_limit")]
    beta: Option<f64>,
    /// Use beta = 1/(1 + alpha*) from the limit constants (the default)
    #[arg(long)]
    beta_from_limit: bool,
    /// Highest derivative order to check (0..=20)
    #[arg(long, default_value_t = 12)]
    orders: usize,
    /// Comma-separated grid of evaluation points, all > -1
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_values_t = vec![-0.5, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0]
    )]
    grid: Vec<f64>,
    #[command(flatten)]
    common: CommonOpts,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Critical(args) => cmd_critical(args),
        Command::Limit(args) => cmd_limit(args),
        Command::Sequence(args) => cmd_sequence(args),
        Command::Figure(args) => cmd_figure(args),
        Command::VerifyCm(args) => cmd_verify_cm(args),
    };
    std::process::exit(code);
}

/// Emit an error as a message on stderr, or as a machine-readable object on
/// the normal output stream in json mode, then return the exit code.
fn fail(common: &CommonOpts, code: i32, message: &str) -> i32 {
    if common.format() == OutFormat::Json {
        #[derive(Serialize)]
        struct ErrorOut<'a> {
            schema_version: &'a str,
            error: ErrorBody<'a>,
        }
        #[derive(Serialize)]
        struct ErrorBody<'a> {
            code: i32,
            message: &'a str,
        }
        let body = ErrorOut {
            schema_version: SCHEMA_VERSION,
            error: ErrorBody { code, message },
        };
        let rendered = serde_json::to_string_pretty(&body).expect("serialize error") + "\n";
        let _ = emit(common.out.as_ref(), &rendered);
    } else {
        eprintln!("error: {message}");
    }
    code
}

fn solver_exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::UnsupportedOrder { .. } => EXIT_USAGE,
        _ => EXIT_SOLVER,
    }
}

fn write_or_fail(common: &CommonOpts, content: String, code_on_success: i32) -> i32 {
    match emit(common.out.as_ref(), &content) {
        Ok(()) => code_on_success,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            EXIT_SOLVER
        }
    }
}

fn check_digits(common: &CommonOpts) -> Option<i32> {
    if common.digits < 1 || common.digits > 17 {
        return Some(fail(
            common,
            EXIT_USAGE,
            "--digits must be between 1 and 17",
        ));
    }
    None
}

// --- critical ---------------------------------------------------------------

#[derive(Serialize)]
struct CriticalOut {
    schema_version: &'static str,
    #[serde(flatten)]
    point: CriticalPoint,
}

fn cmd_critical(args: CriticalArgs) -> i32 {
    let common = &args.common;
    if let Some(code) = check_digits(common) {
        return code;
    }
    if !args.x.is_finite() || args.x < 1.0 {
        return fail(common, EXIT_USAGE, "x must be >= 1");
    }
    let cp = match solve_t_star(args.x, &common.solver_config()) {
        Ok(cp) => cp,
        Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
    };
    let d = common.digits;
    let content = match common.format() {
        OutFormat::Table => kv_table(&[
            ("x", fmt_sig(cp.x, d)),
            ("t_star", fmt_sig(cp.t_star, d)),
            ("alpha", fmt_sig(cp.alpha, d)),
            ("residual", fmt_sig(cp.residual, d)),
            ("iterations", cp.iterations.to_string()),
            ("bracket_lo", fmt_sig(cp.bracket_lo, d)),
            ("bracket_hi", fmt_sig(cp.bracket_hi, d)),
        ]),
        OutFormat::Csv => format!(
            "x,t_star,alpha,residual,iterations,bracket_lo,bracket_hi\n{},{},{},{},{},{},{}\n",
            fmt_sig(cp.x, d),
            fmt_sig(cp.t_star, d),
            fmt_sig(cp.alpha, d),
            fmt_sig(cp.residual, d),
            cp.iterations,
            fmt_sig(cp.bracket_lo, d),
            fmt_sig(cp.bracket_hi, d),
        ),
        OutFormat::Json => {
            serde_json::to_string_pretty(&CriticalOut {
                schema_version: SCHEMA_VERSION,
                point: cp,
            })
            .expect("serialize critical point")
                + "\n"
        }
    };
    write_or_fail(common, content, EXIT_OK)
}

// --- limit -------------------------------------------------------------------

#[derive(Serialize)]
struct LimitOut {
    schema_version: &'static str,
    #[serde(flatten)]
    constants: LimitConstants,
}

fn cmd_limit(args: LimitArgs) -> i32 {
    let common = &args.common;
    if let Some(code) = check_digits(common) {
        return code;
    }
    let lc = match solve_x0(&common.solver_config()) {
        Ok(lc) => lc,
        Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
    };
    let d = common.digits;
    let content = match common.format() {
        OutFormat::Table => kv_table(&[
            ("a0", fmt_sig(lc.a0, d)),
            ("x0", fmt_sig(lc.x0, d)),
            ("ell", fmt_sig(lc.ell, d)),
            ("alpha_star", fmt_sig(lc.alpha_star, d)),
            ("eta_residual", fmt_sig(lc.eta_residual, d)),
        ]),
        OutFormat::Csv => format!(
            "a0,x0,ell,alpha_star,eta_residual\n{},{},{},{},{}\n",
            fmt_sig(lc.a0, d),
            fmt_sig(lc.x0, d),
            fmt_sig(lc.ell, d),
            fmt_sig(lc.alpha_star, d),
            fmt_sig(lc.eta_residual, d),
        ),
        OutFormat::Json => {
            serde_json::to_string_pretty(&LimitOut {
                schema_version: SCHEMA_VERSION,
                constants: lc,
            })
            .expect("serialize limit constants")
                + "\n"
        }
    };
    write_or_fail(common, content, EXIT_OK)
}

// --- sequence ----------------------------------------------------------------

#[derive(Serialize)]
struct SequenceOut<'a> {
    schema_version: &'static str,
    n_max: u64,
    sampling: &'static str,
    rows: &'a [SequenceRow],
    report: &'a ClaimReport,
    all_passed: bool,
}

fn sequence_csv(rows: &[SequenceRow], d: usize) -> String {
    let mut s = String::from("n,t_n,alpha_n,ratio,gap\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt_sig(r.t_n, d),
            fmt_sig(r.alpha_n, d),
            fmt_sig(r.ratio, d),
            fmt_sig(r.gap, d),
        ));
    }
    s
}

fn cmd_sequence(args: SequenceArgs) -> i32 {
    let common = &args.common;
    if let Some(code) = check_digits(common) {
        return code;
    }
    if args.n_max < 1 {
        return fail(common, EXIT_USAGE, "--n-max must be >= 1");
    }
    let cfg = common.solver_config();
    let sampling = match args.sampling {
        SamplingArg::Dense => Sampling::Dense,
        SamplingArg::Log => Sampling::Log,
    };
    let rows = match compute_sequence(args.n_max, sampling, &cfg) {
        Ok(rows) => rows,
        Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
    };
    let limits = match solve_x0(&cfg) {
        Ok(lc) => lc,
        Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
    };
    let report = verify_claims(&rows, &limits);
    let all_passed = report.all_passed();
    let d = common.digits;

    let content = match common.format() {
        OutFormat::Table => {
            let mut s = format!(
                "{:<8} {:<20} {:<20} {:<20} {}\n",
                "n", "t_n", "alpha_n", "ratio", "gap"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:<8} {:<20} {:<20} {:<20} {}\n",
                    r.n,
                    fmt_sig(r.t_n, d),
                    fmt_sig(r.alpha_n, d),
                    fmt_sig(r.ratio, d),
                    fmt_sig(r.gap, d),
                ));
            }
            s.push('\n');
            for c in &report.claims {
                s.push_str(&format!(
                    "[{}] {} ({})\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            for note in &report.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            s.push_str(if all_passed {
                "all claims passed\n"
            } else {
                "CLAIM FAILURES PRESENT\n"
            });
            s
        }
        OutFormat::Csv => {
            // csv carries the rows; the verdict goes to stderr so the data
            // stream stays machine-readable
            for c in &report.claims {
                if !c.passed {
                    eprintln!("claim failed: {} ({})", c.name, c.detail);
                }
            }
            sequence_csv(&rows, d)
        }
        OutFormat::Json => {
            serde_json::to_string_pretty(&SequenceOut {
                schema_version: SCHEMA_VERSION,
                n_max: args.n_max,
                sampling: match args.sampling {
                    SamplingArg::Dense => "dense",
                    SamplingArg::Log => "log",
                },
                rows: &rows,
                report: &report,
                all_passed,
            })
            .expect("serialize sequence")
                + "\n"
        }
    };
    write_or_fail(
        common,
        content,
        if all_passed { EXIT_OK } else { EXIT_CLAIMS },
    )
}

// --- figure --------------------------------------------------------------

fn cmd_figure(args: FigureArgs) -> i32 {
    let common = &args.common;
    if let Some(code) = check_digits(common) {
        return code;
    }
    if args.points < 2 {
        return fail(common, EXIT_USAGE, "--points must be >= 2");
    }
    let positive = |v: f64| v.is_finite() && v > 0.0;
    if !positive(args.a_max) || !positive(args.t_max) {
        return fail(common, EXIT_USAGE, "--a-max and --t-max must be positive");
    }
    let cfg = common.solver_config();
    let rendered = match args.id {
        1 => figures::figure_eta(args.points, args.a_max, common.digits, &cfg),
        2 => figures::figure_tau_curves(args.points, args.t_max, common.digits, &cfg),
        _ => unreachable!("clap range-checks the id"),
    };
    match rendered {
        Ok(content) => write_or_fail(common, content, EXIT_OK),
        Err(e) => fail(common, solver_exit_code(&e), &e.to_string()),
    }
}

// --- verify-cm -----------------------------------------------------------

#[derive(Serialize)]
struct CmOut<'a> {
    schema_version: &'static str,
    beta: f64,
    orders: usize,
    reports: &'a [taumax::cm::CmReport],
    all_pass: bool,
}

fn cmd_verify_cm(args: VerifyCmArgs) -> i32 {
    let common = &args.common;
    if let Some(code) = check_digits(common) {
        return code;
    }
    if args.orders > taumax::cm::MAX_CM_ORDER {
        return fail(
            common,
            EXIT_USAGE,
            &format!("--orders must be <= {}", taumax::cm::MAX_CM_ORDER),
        );
    }
    if let Some(bad) = args.grid.iter().find(|x| !x.is_finite() || **x <= -1.0) {
        return fail(
            common,
            EXIT_USAGE,
            &format!("grid points must be > -1, got {bad}"),
        );
    }
    if args.grid.is_empty() {
        return fail(common, EXIT_USAGE, "grid must not be empty");
    }
    let cfg = common.solver_config();
    let beta = match args.beta {
        Some(b) if b.is_finite() => b,
        Some(b) => return fail(common, EXIT_USAGE, &format!("beta must be finite, got {b}")),
        None => match solve_x0(&cfg) {
            Ok(lc) => 1.0 / (1.0 + lc.alpha_star),
            Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
        },
    };

    let mut reports = Vec::with_capacity(args.grid.len());
    for res in check_cm(&args.grid, beta, args.orders) {
        match res {
            Ok(report) => reports.push(report),
            Err(e) => return fail(common, solver_exit_code(&e), &e.to_string()),
        }
    }
    let all_pass = reports.iter().all(|r| r.all_alternating);
    let d = common.digits;

    let content = match common.format() {
        OutFormat::Table => {
            let mut s = format!(
                "beta = {}  orders = {}\n{:<12} {:<12} {:<22} {}\n",
                fmt_sig(beta, d),
                args.orders,
                "x",
                "alternating",
                "min_margin",
                "first_violation"
            );
            for r in &reports {
                s.push_str(&format!(
                    "{:<12} {:<12} {:<22} {}\n",
                    fmt_sig(r.x, d),
                    r.all_alternating,
                    fmt_sig(r.min_margin, d),
                    r.first_violation.map_or("-".to_string(), |k| k.to_string()),
                ));
            }
            s.push_str(if all_pass {
                "alternation holds on the whole grid\n"
            } else {
                "ALTERNATION VIOLATIONS PRESENT\n"
            });
            s
        }
        OutFormat::Csv => {
            let mut s = String::from("x,all_alternating,min_margin,first_violation\n");
            for r in &reports {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_sig(r.x, d),
                    r.all_alternating,
                    fmt_sig(r.min_margin, d),
                    r.first_violation.map_or(String::new(), |k| k.to_string()),
                ));
            }
            s
        }
        OutFormat::Json => {
            serde_json::to_string_pretty(&CmOut {
                schema_version: SCHEMA_VERSION,
                beta,
                orders: args.orders,
                reports: &reports,
                all_pass,
            })
            .expect("serialize cm reports")
                + "\n"
        }
    };
    write_or_fail(
        common,
        content,
        if all_pass { EXIT_OK } else { EXIT_CLAIMS },
    )
}
