use crate::units::Unit;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot convert {from} to {to}: incompatible dimensions")]
    IncompatibleUnits { from: Unit, to: Unit },

    #[error("invalid {parameter}: {reason}")]
    InvalidArgument { parameter: &'static str, reason: String },

    #[error("malformed substance file: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("substance file entry `{entry}`: field `{field}` {reason}")]
    InvalidField {
        entry: String,
        field: &'static str,
        reason: String,
    },

    #[error("duplicate {kind} name `{name}` (names are case-insensitive)")]
    DuplicateName { kind: &'static str, name: String },

    #[error("unknown substance `{name}`; available: {}", available.join(", "))]
    UnknownSubstance { name: String, available: Vec<String> },

    #[error("inverse iteration did not converge for state {state}")]
    InverseIteration { state: usize },

    #[error("quadrature did not converge: requested relative error {requested:e}, achieved {achieved:e}")]
    Quadrature { requested: f64, achieved: f64 },

    #[error("state {level} is not available ({available} states solved)")]
    MissingState { level: usize, available: usize },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(parameter: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            parameter,
            reason: reason.into(),
        }
    }

    /// True for failures of an iterative numerical method, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::InverseIteration { .. } | Error::Quadrature { .. })
    }
}
