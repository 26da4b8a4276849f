use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};

use super::agent::{Choice, OpinionState};
use super::population::{Direction, OpinionPopulation};

pub const DEFAULT_MAX_STEPS: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    /// Social-pressure weight.
    pub alpha: f64,
    /// Peer-influence strength.
    pub mu: f64,
    pub n_agents: usize,
    pub seed: u64,
    pub max_steps: u64,
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} = {v} must lie in [0, 1]")))
            }
        };
        unit("alpha", self.alpha)?;
        unit("mu", self.mu)?;
        if self.n_agents < 2 {
            return Err(Error::InvalidParams(format!(
                "n_agents = {} must be at least 2",
                self.n_agents
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidParams("max_steps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Termination {
    ConsensusA,
    ConsensusB,
    StepCapReached,
}

impl Termination {
    pub fn consensus(self) -> Option<Choice> {
        match self {
            Termination::ConsensusA => Some(Choice::A),
            Termination::ConsensusB => Some(Choice::B),
            Termination::StepCapReached => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Record `p_sA` before the first step and after every step.
    pub record_trajectory: bool,
    /// Steps at which to copy out every agent's weights.
    pub snapshot_at: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub termination: Termination,
    /// Persuasion steps taken; zero if the initial draw is already unanimous.
    pub steps_used: u64,
    pub seed: u64,
    /// `p_sA` at `t = 0, 1, ..., steps_used`.
    pub trajectory: Option<Vec<f64>>,
    pub snapshots: Vec<(u64, Vec<OpinionState>)>,
}

/// Uniform on the open interval (0, 1).
fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let v: f64 = rng.gen();
        if v > 0.0 {
            return v;
        }
    }
}

/// Random weights for every agent, then a random first lobbyist and direction.
pub(crate) fn initial_population<R: Rng + ?Sized>(
    n_agents: usize,
    rng: &mut R,
) -> Result<OpinionPopulation> {
    let agents = (0..n_agents)
        .map(|_| {
            let c_a = open_unit(rng);
            let c_b = open_unit(rng);
            OpinionState::new(c_a, c_b)
        })
        .collect::<Result<Vec<_>>>()?;
    let lobbyist = rng.gen_range(0..n_agents);
    let direction = if rng.gen::<bool>() {
        Direction::Forward
    } else {
        Direction::Backward
    };
    OpinionPopulation::new(agents, lobbyist, direction)
}

pub fn run(params: &ModelParams) -> Result<RunOutcome> {
    run_with(params, &RunOptions::default())
}

/// Runs until every agent counts towards the same choice or the step cap.
/// Consensus is checked before each step.
pub fn run_with(params: &ModelParams, options: &RunOptions) -> Result<RunOutcome> {
    params.validate()?;
    let mut rng = Pcg64::seed_from_u64(params.seed);
    let mut pop = initial_population(params.n_agents, &mut rng)?;

    let mut trajectory = options.record_trajectory.then(Vec::new);
    let mut snapshots = Vec::new();
    let mut observe = |pop: &OpinionPopulation, trajectory: &mut Option<Vec<f64>>| {
        if let Some(log) = trajectory {
            log.push(pop.social_preference());
        }
        if options.snapshot_at.contains(&pop.step()) {
            snapshots.push((pop.step(), pop.agents().to_vec()));
        }
    };

    // With mu = 0 no weight can move, so a non-unanimous start runs to the cap.
    let frozen = params.mu == 0.0 && !pop.at_consensus();
    if frozen && trajectory.is_none() && options.snapshot_at.is_empty() {
        return Ok(RunOutcome {
            termination: Termination::StepCapReached,
            steps_used: params.max_steps,
            seed: params.seed,
            trajectory: None,
            snapshots,
        });
    }

    observe(&pop, &mut trajectory);
    let termination = loop {
        if pop.at_consensus() {
            break if pop.a_count() == 0 {
                Termination::ConsensusB
            } else {
                Termination::ConsensusA
            };
        }
        if pop.step() >= params.max_steps {
            break Termination::StepCapReached;
        }
        pop.persuasion_step(params.alpha, params.mu, &mut rng);
        observe(&pop, &mut trajectory);
    };

    Ok(RunOutcome {
        termination,
        steps_used: pop.step(),
        seed: params.seed,
        trajectory,
        snapshots,
    })
}
