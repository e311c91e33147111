use thiserror::Error;

use crate::cartography::RegionId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// All four payoffs are equal; the game has no direction in parameter space.
    #[error("trivial game: all payoffs are equal")]
    TrivialGame,
    /// Two or more payoffs tie, so the game lies on a partition plane.
    #[error("boundary game: tied payoffs, adjacent regions {adjacent:?}")]
    BoundaryGame { adjacent: Vec<RegionId> },
    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("probability {value} outside [0, 1]")]
    ProbabilityOutOfRange { value: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
