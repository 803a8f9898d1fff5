use thiserror::Error;

use crate::backend::IntegerBackend;

/// Locations in the coefficient recurrence where an integer division happens.
///
/// Every one of these divisions is expected to be exact; a remainder means the
/// recurrence has been implemented incorrectly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionSite {
    /// Seeding the first row from a word lying entirely in the last block: `d / l!`.
    SeedSingleBlock,
    /// Seeding the first row from a word `A^r B^{q_m}`: `d / (r! q_m!)`.
    SeedTwoBlocks,
    /// Prefix inside the current block: `C[k-1, l-j] / j!`.
    RecurrenceSameBlock,
    /// Prefix spanning an A-block and the following B-block: `C[k-1, l-r-j] / (r! j!)`.
    RecurrenceCrossBlock,
    /// Final alternating sum: `C[k, n] / k`.
    FinalSum,
}

impl std::fmt::Display for DivisionSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DivisionSite::SeedSingleBlock => "first-row seed d/l!",
            DivisionSite::SeedTwoBlocks => "first-row seed d/(r! q_m!)",
            DivisionSite::RecurrenceSameBlock => "recurrence C/j!",
            DivisionSite::RecurrenceCrossBlock => "recurrence C/(r! j!)",
            DivisionSite::FinalSum => "final sum C/k",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchError {
    #[error("invalid word {0:?}: expected a nonempty string over {{A, B}}")]
    InvalidWord(String),

    #[error("invalid block list: {0}")]
    InvalidBlocks(String),

    #[error("{backend} arithmetic overflowed at degree {degree}; use the {suggested} backend")]
    BackendOverflow {
        backend: IntegerBackend,
        degree: u32,
        suggested: IntegerBackend,
    },

    #[error("division with nonzero remainder at {site} (degree {degree}, k = {k}, l = {l})")]
    InexactDivision {
        site: DivisionSite,
        degree: u32,
        k: u32,
        l: u32,
    },

    #[error("degree {degree} exceeds the oracle cap of {cap}")]
    OracleRangeExceeded { degree: u32, cap: u32 },

    #[error("degree {degree} is outside the table range 1..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
}

pub type Result<T, E = BchError> = std::result::Result<T, E>;
