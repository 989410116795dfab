use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("infeasible: set #{set} has no selectable element")]
    Infeasible { set: usize },

    #[error("linear program is infeasible: row #{row} is empty")]
    LpInfeasible { row: usize },

    #[error("linear program solver failed: {0}")]
    LpNumerical(String),

    #[error("time limit exceeded")]
    TimedOut,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
