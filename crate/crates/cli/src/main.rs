use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mordellkit::identities::ParamMap;
use mordellkit_cli::{list_text, parse_assignment, run, Command, Format, RunConfig, SweepRange, UsageError};

/// Numerical verification of Mordell-integral, Fourier-kernel and lattice-sum identities.
#[derive(Parser)]
#[command(name = "mordellkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the registry: id, parameter domains, constraint and citation.
    List,
    /// Verify identities at one point each, or at sampled points.
    Verify {
        /// Identity ids, or `all`.
        #[arg(required = true)]
        ids: Vec<String>,
        /// Draw this many random points per identity from the sampling boxes.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Seed for sampled points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Verify one identity over a grid of its free parameters.
    Sweep {
        id: String,
        /// `name:start:stop:count[:log]`; several ranges form a product grid.
        #[arg(long = "range", required = true, value_parser = parse_range)]
        ranges: Vec<SweepRange>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Fixed parameter value `name=value`; repeatable.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, f64)>,
    /// Tolerance overriding each identity's default.
    #[arg(long)]
    tol: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Worker threads.
    #[arg(long, env = "MORDELLKIT_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Record per-outcome wall time (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    parse_assignment(s).map_err(|e| e.0)
}

fn parse_range(s: &str) -> Result<SweepRange, String> {
    s.parse::<SweepRange>().map_err(|e| e.0)
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>().map_err(|e| e.0)
}

fn config(command: Command, ids: Vec<String>, ranges: Vec<SweepRange>, c: &Common) -> Result<RunConfig, UsageError> {
    let mut params = ParamMap::new();
    for (k, v) in &c.params {
        if params.insert(k.clone(), *v).is_some() {
            return Err(UsageError(format!("parameter `{k}` given twice")));
        }
    }
    Ok(RunConfig {
        command,
        ids,
        params,
        ranges,
        tol: c.tol,
        format: c.format,
        jobs: c.jobs,
        seed: 0,
        samples: 0,
        timings: c.timings,
    })
}

fn execute(cfg: RunConfig, out: Option<PathBuf>) -> Result<i32, UsageError> {
    let report = run(cfg)?;
    let text = report.render();
    match out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
            let s = &report.summary;
            eprintln!(
                "{} outcomes: {} pass, {} fail, {} inconclusive, {} exploratory; report in {}",
                s.total,
                s.pass,
                s.fail,
                s.inconclusive,
                s.exploratory,
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::List => {
            print!("{}", list_text());
            Ok(0)
        }
        Cmd::Verify { ids, samples, seed, common } => config(Command::Verify, ids, Vec::new(), &common).and_then(|mut c| {
            c.samples = samples;
            c.seed = seed;
            execute(c, common.out)
        }),
        Cmd::Sweep { id, ranges, common } => {
            config(Command::Sweep, vec![id], ranges, &common).and_then(|c| execute(c, common.out))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
