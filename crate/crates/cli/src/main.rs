use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use lqt_cli::job::{parse_job, Overrides};
use lqt_cli::report::Report;
use lqt_cli::run::{run, TASKS};
use lqt_cli::CliError;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Json,
    Table,
}

/// Exact Hochschild, cyclic and Lie algebra homology of decorated quivers.
#[derive(Parser, Debug)]
#[command(name = "lqt", version)]
struct Args {
    /// One of hh, hc, tor, cycles, paths, floop, fpath, lqt-check, maps-check.
    task: String,
    /// Job file (JSON).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    max_degree: Option<i64>,
    #[arg(long)]
    max_weight: Option<u32>,
    /// Matrix size for lqt-check.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Highest degree judged by lqt-check (default N).
    #[arg(long)]
    stable_degree: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
    /// Include the wall time in the JSON report.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let start = Instant::now();
    let mut report = if !TASKS.contains(&args.task.as_str()) {
        let e = CliError::Usage(format!("unknown task `{}`; expected one of {}", args.task, TASKS.join(", ")));
        Report::failed(&args.task, None, &e)
    } else {
        match parse_job(&args.input) {
            Ok(mut job) => {
                job.apply(&Overrides {
                    task: Some(args.task.clone()),
                    max_degree: args.max_degree,
                    max_weight: args.max_weight,
                    n: args.n,
                    stable_degree: args.stable_degree,
                });
                run(&job)
            }
            Err(e) => Report::failed(&args.task, None, &e),
        }
    };
    let ms = start.elapsed().as_millis();
    eprintln!("lqt {}: {:?} in {ms} ms", report.task, report.status);
    if let Some(e) = &report.error {
        eprintln!("error: {}", e.message);
    }
    if args.timing || matches!(args.output, Output::Table) {
        report.wall_time_ms = Some(ms);
    }
    match args.output {
        Output::Json => print!("{}", report.to_json()),
        Output::Table => print!("{}", report.to_table()),
    }
    ExitCode::from(report.exit_code as u8)
}
