use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coin operator is not unitary (max deviation {deviation:e})")]
    NonUnitaryCoin { deviation: f64 },

    #[error("invalid potential profile: {0}")]
    InvalidProfile(String),

    #[error("case {case} requires {requirement}")]
    InvalidCase {
        case: &'static str,
        requirement: &'static str,
    },

    #[error("lattice halfwidth {halfwidth} is smaller than the step count {steps}")]
    LatticeTooSmall { halfwidth: usize, steps: usize },

    #[error("snapshot step {requested} exceeds total steps {total}")]
    SnapshotOutOfRange { requested: usize, total: usize },

    #[error("opinion state has c_A + c_B = 0; preference ratio undefined")]
    DegenerateOpinion,

    #[error("invalid model parameter: {0}")]
    InvalidParams(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
