//! Error type shared across parsing, metrics, engines, and the harness.

use crate::engine::{Algorithm, EngineKind};
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A data row could not be turned into an event. Fatal by default,
    /// skippable under lenient parsing.
    #[error("row at line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },

    /// A mapped column name does not exist in the header.
    #[error("column {0:?} not found in header")]
    MissingColumn(String),

    /// The input has no data rows.
    #[error("log contains no events")]
    EmptyLog,

    /// The column mapping itself is unusable (duplicate columns, name
    /// mapping without a header, missing timestamp column, ...).
    #[error("invalid schema: {0}")]
    InvalidSchema(String),

    /// Out-of-range metric or harness parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A requested prefix chunk cannot be cut from the log.
    #[error("chunk size {size} out of range for a log of {events} events")]
    SizeOutOfRange { size: usize, events: usize },

    /// Cosine similarity over vectors of different lengths.
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A trace refers to an actor id outside the declared actor count.
    #[error("actor id {id} out of range for {count} actors")]
    ActorIdOutOfRange { id: usize, count: usize },

    /// The brute-force validator refuses large inputs.
    #[error("oracle refuses logs over {limit} events (got {events})")]
    OracleInputTooLarge { events: usize, limit: usize },

    /// Engine build was requested before load.
    #[error("engine is not loaded")]
    NotLoaded,

    /// Engine was loaded for one algorithm and asked to build the other.
    #[error("engine was loaded for {loaded}, build of {requested} requested")]
    WrongMode {
        loaded: Algorithm,
        requested: Algorithm,
    },

    /// An engine produced a sociogram that diverges from the reference.
    #[error("{engine} sociogram diverges from the reference by {max_abs_diff:e} (tolerance {tolerance:e})")]
    ReferenceMismatch {
        engine: EngineKind,
        max_abs_diff: f64,
        tolerance: f64,
    },

    /// Engine comparison needs at least two engines sharing a chunk.
    #[error("comparison needs at least two engines sharing a chunk")]
    MissingPair,

    /// An engine error that occurred inside a bench run, annotated with
    /// where it happened.
    #[error("[{engine} @ chunk {chunk_size}] {source}")]
    Bench {
        engine: EngineKind,
        chunk_size: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
