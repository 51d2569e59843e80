use thiserror::Error;

/// Errors surfaced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("preference tuple must contain at least one car")]
    EmptyTuple,

    #[error("street must have at least one spot")]
    NoSpots,

    #[error("preference {entry} of car {car} is outside the street 1..={spots}")]
    EntryOutOfRange { car: usize, entry: usize, spots: usize },

    #[error("operation needs a street of {expected} spots, tuple has {found}")]
    SpotsMismatch { expected: usize, found: usize },

    #[error("spot {spot} is outside the street 1..={spots}")]
    SpotOutOfRange { spot: usize, spots: usize },

    #[error("content with zero cars has no word")]
    EmptyContent,

    #[error("degenerate orbit: cyclic shifts of {content:?} collide")]
    DegenerateOrbit { content: Vec<usize> },

    #[error("{task} for n = {n} exceeds the exhaustive bound {bound} (about {cost} items); use sampling mode instead")]
    BoundExceeded {
        task: &'static str,
        n: usize,
        bound: usize,
        cost: String,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
