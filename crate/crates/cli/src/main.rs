//! `walkop`: periodic-potential quantum walks and ring opinion dynamics.

mod grid;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Parser, Subcommand};
use walkop_core::harness::{
    distribution_table, observables_table, run_opinion_sweep, run_qwalk_observables, sigma_by_case,
    sweep_table, trajectory_table, QwalkRunSpec, SweepSpec,
};
use walkop_core::opinion::{run_with, ModelParams, RunOptions, Termination, DEFAULT_MAX_STEPS};
use walkop_core::qwalk::{build_case, CaseKind, WalkCase};

#[derive(Parser)]
#[command(name = "walkop", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one walk case; writes observables.csv and dist_t<k>.csv.
    QwalkRun {
        /// IA, IB, IIA, IIB, IIIA, IIIB or HADAMARD.
        #[arg(long)]
        case: String,
        /// Period N (cases I, II, HADAMARD).
        #[arg(long = "N")]
        period: Option<usize>,
        /// Block length q (cases III).
        #[arg(long = "q")]
        q: Option<usize>,
        #[arg(long, default_value_t = 400)]
        steps: usize,
        /// Comma-separated steps at which to write the full distribution.
        #[arg(long = "snapshot-at", default_value = "")]
        snapshot_at: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run all six cases plus HADAMARD; writes sigma_by_case.csv.
    QwalkCases {
        #[arg(long = "N")]
        period: usize,
        #[arg(long = "q")]
        q: usize,
        #[arg(long, default_value_t = 400)]
        steps: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// One opinion run; writes trajectory.csv and prints the outcome.
    OpinionRun {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        agents: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-steps", default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Ensemble-averaged consensus time over an (alpha, mu, N) grid; writes sweep.csv.
    ///
    /// Grids take start:stop:step (stop included within half a step) or a
    /// comma list.
    OpinionSweep {
        #[arg(long = "alpha-grid")]
        alpha_grid: String,
        #[arg(long = "mu-grid")]
        mu_grid: String,
        /// Comma-separated agent counts.
        #[arg(long, default_value = "25")]
        agents: String,
        #[arg(long, default_value_t = 200)]
        ensemble: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-steps", default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: u64,
        /// Worker threads; results do not depend on this.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn prepare_out(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create output directory {}", dir.display()))
}

fn qwalk_run(
    case: &str,
    period: Option<usize>,
    q: Option<usize>,
    steps: usize,
    snapshot_at: &str,
    out: &Path,
) -> Result<()> {
    let kind: CaseKind = case.parse()?;
    let size = if kind.sized_by_q() {
        ensure!(period.is_none(), "case {kind} is sized by --q, not --N");
        q.with_context(|| format!("case {kind} requires --q"))?
    } else {
        ensure!(q.is_none(), "case {kind} is sized by --N, not --q");
        period.with_context(|| format!("case {kind} requires --N"))?
    };
    let case = WalkCase::new(kind, size);
    build_case(case)?;
    let record_distribution_at = grid::parse_list("snapshot-at", snapshot_at)?;
    if let Some(t) = record_distribution_at.iter().find(|&&t| t > steps) {
        bail!("--snapshot-at {t} exceeds --steps {steps}");
    }

    let report = run_qwalk_observables(&QwalkRunSpec {
        case,
        steps,
        record_distribution_at,
    })?;
    prepare_out(out)?;
    observables_table(&report).write_csv(out.join("observables.csv"))?;
    for snap in &report.snapshots {
        distribution_table(snap).write_csv(out.join(format!("dist_t{}.csv", snap.t)))?;
    }
    Ok(())
}

fn qwalk_cases(period: usize, q: usize, steps: usize, out: &Path) -> Result<()> {
    let table = sigma_by_case(period, q, steps)?;
    prepare_out(out)?;
    table.write_csv(out.join("sigma_by_case.csv"))?;
    Ok(())
}

fn opinion_run(params: ModelParams, out: &Path) -> Result<()> {
    params.validate()?;
    let outcome = run_with(
        &params,
        &RunOptions {
            record_trajectory: true,
            snapshot_at: Vec::new(),
        },
    )?;
    prepare_out(out)?;
    trajectory_table(&outcome).write_csv(out.join("trajectory.csv"))?;
    match outcome.termination.consensus() {
        Some(choice) => println!("consensus {choice} after {} steps", outcome.steps_used),
        None => {
            debug_assert_eq!(outcome.termination, Termination::StepCapReached);
            println!("no consensus: step cap reached after {} steps", outcome.steps_used)
        }
    }
    Ok(())
}

fn opinion_sweep(spec: SweepSpec, threads: Option<usize>, out: &Path) -> Result<()> {
    spec.validate()?;
    if threads == Some(0) {
        bail!("--threads must be at least 1");
    }
    let cells = run_opinion_sweep(&spec, threads)?;
    prepare_out(out)?;
    sweep_table(&cells).write_csv(out.join("sweep.csv"))?;
    Ok(())
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::QwalkRun {
            case,
            period,
            q,
            steps,
            snapshot_at,
            out,
        } => qwalk_run(&case, period, q, steps, &snapshot_at, &out),
        Command::QwalkCases { period, q, steps, out } => qwalk_cases(period, q, steps, &out),
        Command::OpinionRun {
            alpha,
            mu,
            agents,
            seed,
            max_steps,
            out,
        } => opinion_run(
            ModelParams {
                alpha,
                mu,
                n_agents: agents,
                seed,
                max_steps,
            },
            &out,
        ),
        Command::OpinionSweep {
            alpha_grid,
            mu_grid,
            agents,
            ensemble,
            seed,
            max_steps,
            threads,
            out,
        } => {
            let spec = SweepSpec {
                alpha_grid: grid::parse_unit_grid("alpha-grid", &alpha_grid)?,
                mu_grid: grid::parse_unit_grid("mu-grid", &mu_grid)?,
                n_agents_list: grid::parse_list("agents", &agents)?,
                ensemble_size: ensemble,
                base_seed: seed,
                max_steps,
            };
            opinion_sweep(spec, threads, &out)
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
