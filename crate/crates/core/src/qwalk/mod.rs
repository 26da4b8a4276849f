//! Discrete-time quantum walk on the integer line with a position-periodic coin.
//!
//! One step applies the coin assigned to each site to that site's two
//! amplitudes, then moves the `|0>` component one site right and the `|1>`
//! component one site left.

mod coin;
mod observables;
mod oracle;
mod profile;
mod state;

pub use coin::{hadamard_coin, CoinOperator, UNITARY_TOLERANCE};
pub use observables::{
    mean_position, origin_probability, position_distribution, second_moment, std_dev,
};
pub use oracle::{brute_force_oracle, one_step_matrix, DenseMatrix};
pub use profile::{build_case, CaseKind, PotentialProfile, WalkCase};
pub use state::{evolve, step, symmetric_initial_state, Propagator, WalkerState};
