use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    A,
    B,
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Choice::A => "A",
            Choice::B => "B",
        })
    }
}

/// Preference weights `(c_A, c_B)` of one agent, each in `[0, 1]` with a
/// positive sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OpinionState {
    c_a: f64,
    c_b: f64,
}

impl OpinionState {
    pub fn new(c_a: f64, c_b: f64) -> Result<Self> {
        let in_range = |c: f64| (0.0..=1.0).contains(&c);
        if !in_range(c_a) || !in_range(c_b) {
            return Err(Error::InvalidParams(format!(
                "opinion weights ({c_a}, {c_b}) must lie in [0, 1]"
            )));
        }
        if c_a + c_b <= 0.0 {
            return Err(Error::DegenerateOpinion);
        }
        Ok(Self { c_a, c_b })
    }

    pub fn c_a(&self) -> f64 {
        self.c_a
    }

    pub fn c_b(&self) -> f64 {
        self.c_b
    }
}

/// `p_A = c_A / (c_A + c_B)`; `p_B = 1 - p_A`.
#[inline]
pub fn preference_ratio(agent: &OpinionState) -> f64 {
    agent.c_a / (agent.c_a + agent.c_b)
}

/// The choice an agent shows publicly. An exact tie shows B.
pub fn revealed_choice(agent: &OpinionState) -> Choice {
    if preference_ratio(agent) > 0.5 {
        Choice::A
    } else {
        Choice::B
    }
}

#[inline]
pub(crate) fn decision_factor_from_ratios(
    listener_ratio: f64,
    lobbyist_ratio: f64,
    social_pref_a: f64,
    alpha: f64,
) -> f64 {
    alpha * (social_pref_a - listener_ratio).abs()
        + (1.0 - alpha) * (1.0 - (lobbyist_ratio - listener_ratio).abs())
}

/// Propensity of the listener to be persuaded: large when the listener is far
/// from the revealed majority `p_sA` and close to the lobbyist.
pub fn decision_factor(
    listener: &OpinionState,
    lobbyist: &OpinionState,
    social_pref_a: f64,
    alpha: f64,
) -> f64 {
    decision_factor_from_ratios(
        preference_ratio(listener),
        preference_ratio(lobbyist),
        social_pref_a,
        alpha,
    )
}

/// Shifts the listener's weights by `delta = mu * (p_A(lobbyist) - p_A(listener))`,
/// adding to `c_A`, subtracting from `c_B`, then clamping each to `[0, 1]`.
///
/// Both weights cannot clamp to zero at once: that would need
/// `delta <= -c_A` and `delta >= c_B`, impossible while `c_A + c_B > 0`.
#[inline]
pub fn apply_persuasion(listener: &OpinionState, lobbyist_ratio: f64, mu: f64) -> OpinionState {
    let delta = mu * (lobbyist_ratio - preference_ratio(listener));
    let next = OpinionState {
        c_a: (listener.c_a + delta).clamp(0.0, 1.0),
        c_b: (listener.c_b - delta).clamp(0.0, 1.0),
    };
    debug_assert!(next.c_a + next.c_b > 0.0);
    next
}
