//! Ring of agents holding continuous weights for two opinions, A and B.
//!
//! Each step a lobbyist tries to persuade its neighbour (the listener) in the
//! current propagation direction. Success is decided by comparing a decision
//! factor, mixing social pressure and peer similarity, against a uniform
//! random threshold. On success the listener shifts its weights towards the
//! lobbyist and becomes the next lobbyist; on failure it keeps its weights
//! and turns around to lobby the original lobbyist.

mod agent;
mod population;
mod run;

pub use agent::{apply_persuasion, decision_factor, preference_ratio, revealed_choice, Choice, OpinionState};
pub use population::{social_preference, Direction, OpinionPopulation};
pub use run::{run, run_with, ModelParams, RunOptions, RunOutcome, Termination, DEFAULT_MAX_STEPS};
