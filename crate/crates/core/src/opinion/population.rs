use rand::Rng;

use crate::error::{Error, Result};

use super::agent::{apply_persuasion, decision_factor_from_ratios, preference_ratio, OpinionState};

/// Sense of propagation around the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }
}

/// Whether an agent counts towards A in the revealed preference `p_sA`:
/// the integral part of `p_A + 0.5`.
#[inline]
fn counts_for_a(ratio: f64) -> bool {
    (ratio + 0.5).floor() >= 1.0
}

/// `p_sA = (1/N) sum_i floor(p_{i,A} + 0.5)`.
pub fn social_preference(agents: &[OpinionState]) -> f64 {
    let count = agents
        .iter()
        .filter(|a| counts_for_a(preference_ratio(a)))
        .count();
    count as f64 / agents.len() as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct OpinionPopulation {
    agents: Vec<OpinionState>,
    lobbyist: usize,
    direction: Direction,
    step: u64,
    /// Number of agents counting towards A in `p_sA`.
    a_count: usize,
}

impl OpinionPopulation {
    pub fn new(agents: Vec<OpinionState>, lobbyist: usize, direction: Direction) -> Result<Self> {
        if agents.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "a ring needs at least 2 agents, got {}",
                agents.len()
            )));
        }
        if lobbyist >= agents.len() {
            return Err(Error::InvalidParams(format!(
                "lobbyist index {lobbyist} out of range for {} agents",
                agents.len()
            )));
        }
        let a_count = agents
            .iter()
            .filter(|a| counts_for_a(preference_ratio(a)))
            .count();
        Ok(Self {
            agents,
            lobbyist,
            direction,
            step: 0,
            a_count,
        })
    }

    pub fn agents(&self) -> &[OpinionState] {
        &self.agents
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn lobbyist(&self) -> usize {
        self.lobbyist
    }

    pub fn listener(&self) -> usize {
        let n = self.agents.len();
        match self.direction {
            Direction::Forward => (self.lobbyist + 1) % n,
            Direction::Backward => (self.lobbyist + n - 1) % n,
        }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// `p_sA`, maintained incrementally.
    pub fn social_preference(&self) -> f64 {
        self.a_count as f64 / self.agents.len() as f64
    }

    /// All agents count towards the same choice.
    pub fn at_consensus(&self) -> bool {
        self.a_count == 0 || self.a_count == self.agents.len()
    }

    /// Number of agents counting towards A.
    pub fn a_count(&self) -> usize {
        self.a_count
    }

    /// One lobbyist/listener interaction against the threshold `r`. Success
    /// requires the decision factor to strictly exceed `r`. Returns whether
    /// the persuasion succeeded.
    pub fn interact(&mut self, alpha: f64, mu: f64, r: f64) -> bool {
        let listener = self.listener();
        let lobbyist_ratio = preference_ratio(&self.agents[self.lobbyist]);
        let listener_ratio = preference_ratio(&self.agents[listener]);
        let factor =
            decision_factor_from_ratios(listener_ratio, lobbyist_ratio, self.social_preference(), alpha);

        let success = factor > r;
        if success {
            let updated = apply_persuasion(&self.agents[listener], lobbyist_ratio, mu);
            let was_a = counts_for_a(listener_ratio);
            let is_a = counts_for_a(preference_ratio(&updated));
            match (was_a, is_a) {
                (false, true) => self.a_count += 1,
                (true, false) => self.a_count -= 1,
                _ => {}
            }
            self.agents[listener] = updated;
        } else {
            self.direction = self.direction.reversed();
        }
        self.lobbyist = listener;
        self.step += 1;
        success
    }

    /// One interaction with `r` drawn uniformly from `[0, 1)`.
    pub fn persuasion_step<R: Rng + ?Sized>(&mut self, alpha: f64, mu: f64, rng: &mut R) -> bool {
        let r: f64 = rng.gen();
        self.interact(alpha, mu, r)
    }
}
