use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("degenerate region: {0}")]
    DegenerateRegion(String),

    #[error("sieve tables too small: need bound >= {needed}, have {bound}")]
    TableTooSmall { needed: u64, bound: u64 },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("numeric domain error: {0}")]
    Domain(String),

    #[error("pole or zero of a constituent function near s = {0}")]
    Pole(String),

    #[error("horocycle is parallel to the base leaf (c = 0): translation by an integer")]
    ParallelHorocycle,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 usage, 3 capacity, 4 numeric domain.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::OutOfRange(_) => 2,
            Error::TableTooSmall { .. } | Error::Capacity(_) => 3,
            Error::DegenerateRegion(_)
            | Error::Domain(_)
            | Error::Pole(_)
            | Error::ParallelHorocycle => 4,
            Error::Io(_) => 1,
        }
    }
}
