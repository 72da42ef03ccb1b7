use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use kronbrist::field::FieldSpec;
use kronbrist::harness::{run_scenario, Scenario, ScenarioConfig, DEFAULT_SEED, DEFAULT_SUBSET_LIMIT};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Run a verification scenario and print its report.
///
/// Exit status: 0 if every check passes, 1 if any fails, 2 on usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "kronbrist", version, after_help = scenario_list())]
struct Cli {
    /// Scenario name (see the list below).
    scenario: String,
    /// Number of arrows.
    #[arg(long)]
    n: Option<usize>,
    /// Work over GF(P).
    #[arg(long, conflicts_with = "rational")]
    q: Option<u64>,
    /// Work over the rationals.
    #[arg(long)]
    rational: bool,
    /// Largest t for I_t and tau^t.
    #[arg(long = "tmax")]
    t_max: Option<usize>,
    /// Random samples for the property scenarios.
    #[arg(long)]
    samples: Option<usize>,
    /// Largest subset search done exhaustively.
    #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
    subset_limit: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random attempts for isomorphism and extension searches.
    #[arg(long, default_value_t = 64)]
    attempts: usize,
    /// Module file for the minimal-t search.
    #[arg(long)]
    module: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn scenario_list() -> String {
    let mut s = String::from("Scenarios:\n");
    for sc in Scenario::ALL {
        s.push_str(&format!("  {:<30} {}\n", sc.name(), sc.summary()));
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let scenario: Scenario = match cli.scenario.parse() {
        Ok(sc) => sc,
        Err(e) => {
            eprintln!("error: {e}\n\n{}", scenario_list());
            return ExitCode::from(2);
        }
    };
    let field = match (cli.q, cli.rational) {
        (Some(p), _) => match format!("gf({p})").parse::<FieldSpec>() {
            Ok(f) => Some(f),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        (None, true) => Some(FieldSpec::Rationals),
        (None, false) => None,
    };
    let cfg = ScenarioConfig {
        scenario,
        n: cli.n,
        field,
        t_max: cli.t_max,
        subset_limit: cli.subset_limit,
        samples: cli.samples,
        seed: cli.seed,
        attempts: cli.attempts,
        module: cli.module,
        timing: cli.timing,
    };
    let report = match run_scenario(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
