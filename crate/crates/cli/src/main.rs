//! `twistcert` — drives the end-to-end commands and renders their reports.
//!
//! Exit codes: 0 every check passed, 2 conditional pass (assumptions or
//! budget-skipped work remain), 1 a check failed, 64 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twistcert_core::commands::{
    cmd_certify, cmd_degree_sweep, cmd_twist_probe, cmd_verify_figure1, Report, RunConfig,
};

/// environment variable overriding the default intermediate-weight budget
const BUDGET_ENV: &str = "TWISTCERT_BUDGET";

#[derive(Parser)]
#[command(name = "twistcert", version, about = "Exact certificates for Dehn-twist constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// chain rank r (stretch-factor degree d = 2r)
    #[arg(long, global = true)]
    r: Option<usize>,

    /// surface genus g (needs g >= r + 2)
    #[arg(long, global = true)]
    g: Option<usize>,

    /// terminal intersection weight k
    #[arg(long, global = true)]
    k: Option<i64>,

    /// twist exponent m
    #[arg(long, global = true)]
    m: Option<i64>,

    /// inclusive exponent range for sweeps, e.g. 1..40
    #[arg(long = "m-range", global = true, value_parser = parse_range)]
    m_range: Option<(i64, i64)>,

    /// inclusive probe window, e.g. -2..8 (default -2..n+2)
    #[arg(long = "j-range", global = true, value_parser = parse_range, allow_hyphen_values = true)]
    j_range: Option<(i64, i64)>,

    /// cap on intermediate curve weight (env TWISTCERT_BUDGET overrides the default)
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// widest index span probed by the triple twisting table
    #[arg(long = "probe-span", global = true)]
    probe_span: Option<i64>,

    /// seed echoed into reports for reproducibility bookkeeping
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// directory receiving report.json, report.txt and any CSV table
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the drawn genus-3 model: boundary, symmetries, i(a,b) = 5
    VerifyFigure1,
    /// Sweep the twist exponent and check degree stabilization at 2r
    DegreeSweep,
    /// Desk-scale probes of the twisted curve sequence
    TwistProbe,
    /// End-to-end certificate for one family member
    Certify,
}

/// "LO..HI" (both ends inclusive); a bare "N" means N..N
fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| e.to_string());
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?)),
        None => parse(s).map(|n| (n, n)),
    }
}

fn run_config(cli: &Cli) -> RunConfig {
    let mut cfg = RunConfig::default();
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        if let Ok(b) = v.parse() {
            cfg.budget = b;
        }
    }
    if let Some(r) = cli.r {
        cfg.r = r;
        cfg.g = cfg.g.max(r + 2);
    }
    if let Some(g) = cli.g {
        cfg.g = g;
    }
    if let Some(k) = cli.k {
        cfg.k = k;
    }
    if let Some(m) = cli.m {
        cfg.m = m;
    }
    if let Some(mr) = cli.m_range {
        cfg.m_range = mr;
    }
    cfg.j_range = cli.j_range;
    if let Some(b) = cli.budget {
        cfg.budget = b;
    }
    if let Some(s) = cli.probe_span {
        cfg.probe_span = s;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    cfg
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> std::io::Result<()> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), report.to_json())?;
        std::fs::write(dir.join("report.txt"), report.to_text())?;
        if let Some(csv) = &report.csv {
            std::fs::write(dir.join(format!("{}.csv", report.command)), csv)?;
        }
    }
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => match &report.csv {
            Some(csv) => print!("{csv}"),
            None => {
                eprintln!("no CSV table for command {}; showing text", report.command);
                print!("{}", report.to_text());
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = run_config(&cli);
    let report = match cli.command {
        Command::VerifyFigure1 => cmd_verify_figure1(&cfg),
        Command::DegreeSweep => cmd_degree_sweep(&cfg),
        Command::TwistProbe => cmd_twist_probe(&cfg),
        Command::Certify => cmd_certify(&cfg),
    };
    if let Err(e) = emit(&report, cli.format, cli.out.as_ref()) {
        eprintln!("failed to write report: {e}");
        return ExitCode::from(74); // EX_IOERR
    }
    ExitCode::from(u8::try_from(report.exit_code()).unwrap_or(1))
}
