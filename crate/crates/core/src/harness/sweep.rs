use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::opinion::{run, ModelParams, RunOutcome, Termination};

use super::csv::Table;
use super::seed::derive_seed;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub alpha_grid: Vec<f64>,
    pub mu_grid: Vec<f64>,
    pub n_agents_list: Vec<usize>,
    pub ensemble_size: usize,
    pub base_seed: u64,
    pub max_steps: u64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, grid: &[f64]| {
            if grid.is_empty() {
                return Err(Error::InvalidSweep(format!("{name} grid is empty")));
            }
            match grid.iter().find(|v| !(0.0..=1.0).contains(*v)) {
                Some(v) => Err(Error::InvalidSweep(format!("{name} value {v} outside [0, 1]"))),
                None => Ok(()),
            }
        };
        unit("alpha", &self.alpha_grid)?;
        unit("mu", &self.mu_grid)?;
        if self.n_agents_list.is_empty() {
            return Err(Error::InvalidSweep("agent-count list is empty".into()));
        }
        if let Some(n) = self.n_agents_list.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidSweep(format!("agent count {n} is below 2")));
        }
        if self.ensemble_size == 0 {
            return Err(Error::InvalidSweep("ensemble size must be at least 1".into()));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidSweep("max_steps must be positive".into()));
        }
        Ok(())
    }

    /// `(alpha, mu, n_agents)` in output order: alpha outermost, agent count innermost.
    pub fn cells(&self) -> Vec<(f64, f64, usize)> {
        let mut cells = Vec::new();
        for &alpha in &self.alpha_grid {
            for &mu in &self.mu_grid {
                for &n in &self.n_agents_list {
                    cells.push((alpha, mu, n));
                }
            }
        }
        cells
    }
}

/// Aggregate of one `(alpha, mu, N)` ensemble.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepCell {
    pub alpha: f64,
    pub mu: f64,
    pub n_agents: usize,
    /// Mean steps to consensus over consensus-reaching runs only.
    pub mean_t: Option<f64>,
    /// Population standard deviation of the same steps.
    pub std_t: Option<f64>,
    /// Consensus-reaching runs over ensemble size.
    pub consensus_rate: f64,
    /// Runs ending in consensus on A over ensemble size.
    pub consensus_a_fraction: f64,
}

/// Reduces one cell's runs, in the given order, to a [`SweepCell`].
pub fn aggregate(alpha: f64, mu: f64, n_agents: usize, runs: &[RunOutcome]) -> SweepCell {
    let times: Vec<f64> = runs
        .iter()
        .filter(|r| r.termination != Termination::StepCapReached)
        .map(|r| r.steps_used as f64)
        .collect();
    let a_wins = runs
        .iter()
        .filter(|r| r.termination == Termination::ConsensusA)
        .count();
    let (mean_t, std_t) = if times.is_empty() {
        (None, None)
    } else {
        let n = times.len() as f64;
        let mean = times.iter().sum::<f64>() / n;
        let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / n;
        (Some(mean), Some(var.sqrt()))
    };
    let total = runs.len() as f64;
    SweepCell {
        alpha,
        mu,
        n_agents,
        mean_t,
        std_t,
        consensus_rate: times.len() as f64 / total,
        consensus_a_fraction: a_wins as f64 / total,
    }
}

/// One ensemble; member `k` runs with seed `derive_seed(base_seed, k)`.
pub fn run_ensemble(
    alpha: f64,
    mu: f64,
    n_agents: usize,
    ensemble_size: usize,
    base_seed: u64,
    max_steps: u64,
) -> Result<Vec<RunOutcome>> {
    (0..ensemble_size as u64)
        .into_par_iter()
        .map(|k| {
            run(&ModelParams {
                alpha,
                mu,
                n_agents,
                seed: derive_seed(base_seed, k),
                max_steps,
            })
        })
        .collect()
}

/// Runs every cell's ensemble, fanning runs out over `threads` workers
/// (rayon's default when `None`). Seeds depend only on the member index, so
/// all cells share one set of initial conditions per agent count, and results
/// do not depend on the worker count.
pub fn run_opinion_sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<SweepCell>> {
    spec.validate()?;
    let cells = spec.cells();
    let work = || -> Result<Vec<SweepCell>> {
        let jobs: Vec<(usize, u64)> = (0..cells.len())
            .flat_map(|c| (0..spec.ensemble_size as u64).map(move |k| (c, k)))
            .collect();
        let outcomes = jobs
            .par_iter()
            .map(|&(c, k)| {
                let (alpha, mu, n_agents) = cells[c];
                run(&ModelParams {
                    alpha,
                    mu,
                    n_agents,
                    seed: derive_seed(spec.base_seed, k),
                    max_steps: spec.max_steps,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(cells
            .iter()
            .zip(outcomes.chunks_exact(spec.ensemble_size))
            .map(|(&(alpha, mu, n), runs)| aggregate(alpha, mu, n, runs))
            .collect())
    };
    match threads {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidSweep(format!("cannot start {n} worker threads: {e}")))?
            .install(work),
    }
}

/// `alpha,mu,n_agents,mean_T,std_T,consensus_rate,consensus_A_fraction`;
/// absent statistics render as empty fields.
pub fn sweep_table(cells: &[SweepCell]) -> Table {
    let mut table = Table::new(&[
        "alpha",
        "mu",
        "n_agents",
        "mean_T",
        "std_T",
        "consensus_rate",
        "consensus_A_fraction",
    ]);
    for c in cells {
        table.push(vec![
            c.alpha.into(),
            c.mu.into(),
            c.n_agents.into(),
            c.mean_t.into(),
            c.std_t.into(),
            c.consensus_rate.into(),
            c.consensus_a_fraction.into(),
        ]);
    }
    table
}

/// `t,p_sA`
pub fn trajectory_table(outcome: &RunOutcome) -> Table {
    let mut table = Table::new(&["t", "p_sA"]);
    for (t, &p) in outcome.trajectory.iter().flatten().enumerate() {
        table.push(vec![t.into(), p.into()]);
    }
    table
}
