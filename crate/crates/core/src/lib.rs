//! Two lattice simulators sharing one harness.
//!
//! * [`qwalk`]: a discrete-time quantum walk on the integer line whose coin
//!   operator is chosen per site from a periodic potential profile.
//! * [`opinion`]: a ring of agents holding continuous weights for two
//!   opinions, driven by a bidirectional lobbyist/listener persuasion rule.
//! * [`harness`]: seeded ensembles, observable tables and CSV output.

pub mod error;
pub mod harness;
pub mod opinion;
pub mod qwalk;

pub use error::{Error, Result};
pub use opinion::{
    apply_persuasion, decision_factor, preference_ratio, revealed_choice, run, Choice,
    ModelParams, OpinionPopulation, OpinionState, RunOutcome, Termination,
};
pub use qwalk::{
    brute_force_oracle, build_case, evolve, hadamard_coin, origin_probability,
    position_distribution, step, symmetric_initial_state, CaseKind, CoinOperator,
    PotentialProfile, WalkCase, WalkerState,
};
