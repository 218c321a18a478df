//! `qcert`: run verification sweeps, compute single objects, write reports.
//!
//! Exit codes: 0 when every decided cell holds, 1 when any fails or is
//! ill-posed, 2 on usage errors or a grid with no cell inside the
//! statement's hypotheses.

mod output;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcert_core::cyclotomic::cyclotomic;
use qcert_core::euler::euler_numbers;
use qcert_core::lehmer::{lehmer_euler_numbers, lehmer_euler_rows};
use qcert_core::qcomb::q_binomial;
use qcert_core::theorems::{m_star, partition_grid, verify, ParamSpec, StatementId, Variant};

use output::{render_records, render_report, ReportEntry};

#[derive(Parser)]
#[command(name = "qcert", version, about = "Exact verifier for cyclotomic q-supercongruences")]
struct Cli {
    /// Worker threads for grid sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one statement over a parameter grid
    Verify(Box<VerifyArgs>),
    /// Print a single exact object
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Run default grids for many statements and write a summary report
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    statement: StatementId,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<ParamSpec>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<ParamSpec>,
    /// as_printed, corrected (alias standard_fermat_quotient)
    #[arg(long, default_value = "as_printed")]
    variant: Variant,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Coefficients of Φ_n, ascending
    Cyclotomic {
        #[arg(long)]
        n: u64,
    },
    /// Coefficients of the Gaussian binomial [n, k], ascending
    Qbinomial {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
    },
    /// W_{r,0..count}^{(α)}
    LehmerEuler {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// E_0 .. E_count
    EulerNumbers {
        #[arg(long)]
        count: usize,
    },
    /// M_n^*(α)
    MStar {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        alpha: i64,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Every registered statement (the default when no list is given)
    #[arg(long, conflicts_with = "statement")]
    all: bool,
    /// Comma-separated statement tags
    #[arg(long, value_delimiter = ',')]
    statement: Vec<StatementId>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(*args),
        Command::Compute(cmd) => cmd_compute(cmd),
        Command::Report(args) => cmd_report(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&PathBuf>, body: &str) -> Result<(), String> {
    match path {
        Some(p) => {
            let mut f = File::create(p).map_err(|e| format!("{}: {e}", p.display()))?;
            f.write_all(body.as_bytes())
                .map_err(|e| format!("{}: {e}", p.display()))
        }
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let id = args.statement;
    let info = id.info();
    let mut grid = id.default_grid();
    let overrides = [
        ("n", &args.n),
        ("alpha", &args.alpha),
        ("p", &args.p),
        ("r", &args.r),
        ("k", &args.k),
        ("t", &args.t),
        ("m", &args.m),
    ];
    for (name, spec) in overrides {
        let Some(spec) = spec else { continue };
        if !info.params.contains(&name) {
            return Err(format!(
                "{id} takes parameters {}, not --{name}",
                info.params.join(", ")
            ));
        }
        let defaults = grid.values(name).unwrap_or_default().to_vec();
        grid.set_axis(name, spec.resolve(&defaults));
    }
    if args.variant == Variant::Corrected && info.correction.is_none() {
        eprintln!("note: {id} has no corrected variant; checking as printed");
    }

    let (cells, skipped) = partition_grid(id, &grid, args.variant);
    if cells.is_empty() {
        let reason = skipped
            .iter()
            .find(|v| !v.relational)
            .or(skipped.first())
            .map(|v| v.to_string())
            .unwrap_or_else(|| "empty grid".into());
        return Err(format!("no parameter cell satisfies the hypotheses of {id}: {reason}"));
    }
    if !skipped.is_empty() {
        eprintln!(
            "note: skipped {} cell(s) outside the hypotheses ({})",
            skipped.len(),
            info.hypotheses
        );
    }

    let records = verify(id, &grid, args.variant);
    write_out(args.output.as_ref(), &render_records(&records, args.format)?)?;

    let bad = records.iter().filter(|r| r.status != qcert_core::Status::Holds).count();
    if bad == 0 {
        return Ok(0);
    }
    if let (Variant::AsPrinted, Some(fix)) = (args.variant, info.correction) {
        eprintln!(
            "note: {bad} cell(s) fail as printed; a corrected variant exists ({fix}), run with --variant corrected"
        );
    }
    Ok(1)
}

fn cmd_compute(cmd: ComputeCmd) -> Result<u8, String> {
    let body = match cmd {
        ComputeCmd::Cyclotomic { n } => {
            let phi = cyclotomic(n).map_err(|e| e.to_string())?;
            serde_json::to_string(&*phi).map_err(|e| e.to_string())?
        }
        ComputeCmd::Qbinomial { n, k } => {
            serde_json::to_string(&q_binomial(n, k)).map_err(|e| e.to_string())?
        }
        ComputeCmd::LehmerEuler {
            r,
            alpha,
            count,
            format,
        } => {
            if r == 0 {
                return Err("--r must be positive".into());
            }
            match format {
                Format::Text => lehmer_euler_numbers(r, alpha, count)
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Format::Json => serde_json::to_string_pretty(&lehmer_euler_rows(r, alpha, count))
                    .map_err(|e| e.to_string())?,
                Format::Csv => output::csv_rows(&lehmer_euler_rows(r, alpha, count))?,
            }
        }
        ComputeCmd::EulerNumbers { count } => euler_numbers(count)
            .values()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(","),
        ComputeCmd::MStar { n, alpha } => m_star(n, alpha).to_string(),
    };
    let body = if body.ends_with('\n') { body } else { body + "\n" };
    write_out(None, &body)?;
    Ok(0)
}

fn cmd_report(args: ReportArgs) -> Result<u8, String> {
    let ids: Vec<StatementId> = if args.all || args.statement.is_empty() {
        StatementId::ALL.to_vec()
    } else {
        args.statement
    };
    let entries: Vec<ReportEntry> = ids.iter().map(|&id| ReportEntry::run(id)).collect();
    write_out(args.output.as_ref(), &render_report(&entries, args.format)?)?;
    Ok(if entries.iter().all(ReportEntry::holds) { 0 } else { 1 })
}
