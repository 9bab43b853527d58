use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lieverify::verify::{emit_report, run_scenarios, Config, Format, Scenario};

/// Batch verification of the minimal-orbit claims for D_n, E6 and E7.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Samples per randomized check.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Report path; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,

    /// Include feasibility verdicts for the pullback prescriptions.
    #[arg(long, global = true)]
    check_prescriptions: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// D_n suites; `--n 6` or a range `--n 4..8` (inclusive).
    Dn {
        #[arg(long, default_value = "4..8", value_parser = parse_range)]
        n: (usize, usize),
    },
    E6,
    E7,
    /// D_4..D_8, E6 and E7.
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim_start_matches('=').trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: usize = lo.parse().map_err(|_| format!("bad rank `{lo}`"))?;
    let hi: usize = hi.parse().map_err(|_| format!("bad rank `{hi}`"))?;
    if lo < 4 || hi < lo {
        return Err(format!("need 4 <= lo <= hi, got {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let scenarios: Vec<Scenario> = match cli.command {
        Command::Dn { n: (lo, hi) } => (lo..=hi).map(Scenario::Dn).collect(),
        Command::E6 => vec![Scenario::E6],
        Command::E7 => vec![Scenario::E7],
        Command::All => (4..=8)
            .map(Scenario::Dn)
            .chain([Scenario::E6, Scenario::E7])
            .collect(),
    };
    let cfg = Config {
        seed: cli.seed,
        samples: cli.samples,
        check_prescriptions: cli.check_prescriptions,
    };
    let report = run_scenarios(&scenarios, &cfg);
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    match emit_report(&report, format, cli.out.as_deref()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("cannot write report: {e}");
            ExitCode::from(2)
        }
    }
}
