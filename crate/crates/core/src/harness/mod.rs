//! Ensembles, observable tables and CSV output shared by both engines.

mod csv;
mod qwalk;
mod seed;
mod sweep;

pub use self::csv::{read_csv, render_real, Cell, Table};
pub use self::qwalk::{
    distribution_table, observables_table, run_qwalk_observables, sigma_by_case, DistributionSnapshot,
    ObservableRow, QwalkReport, QwalkRunSpec,
};
pub use self::seed::{derive_seed, splitmix64};
pub use self::sweep::{
    aggregate, run_ensemble, run_opinion_sweep, sweep_table, trajectory_table, SweepCell, SweepSpec,
};
