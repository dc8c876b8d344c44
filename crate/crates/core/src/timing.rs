//! Phase timing primitives shared by the engines and the bench harness.
//!
//! Durations are measured with the monotonic wall clock and kept in raw
//! nanoseconds; millisecond views are derived for reporting.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::{Duration, Instant};

/// The measured steps of an engine run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    /// Engine population plus engine-side pre-processing (parse excluded).
    Load,
    /// Similarity computation over actor pairs.
    ComputeSimilarity,
    /// Writing similarity results into the engine's result structure.
    WriteResult,
    /// Accumulating the normalization constant.
    UpdateNormal,
    /// Finding bounding pairs (and, in the graph engine, linking
    /// intermediates).
    Detection,
    /// Folding detected contributions into the result structure.
    UpdateResult,
    /// Dividing by the normalization constant.
    Normalize,
}

impl Phase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Phase::Load => "load",
            Phase::ComputeSimilarity => "compute_similarity",
            Phase::WriteResult => "write_result",
            Phase::UpdateNormal => "update_normal",
            Phase::Detection => "detection",
            Phase::UpdateResult => "update_result",
            Phase::Normalize => "normalize",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One measured phase duration. `run_index` is 0 as recorded by an engine;
/// the bench harness stamps the actual run number when collecting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTiming {
    pub phase: Phase,
    pub duration_ns: u64,
    pub run_index: u32,
}

impl PhaseTiming {
    pub fn duration_ms(&self) -> f64 {
        self.duration_ns as f64 / 1_000_000.0
    }
}

/// Collects phase timings for one load+build cycle.
#[derive(Debug, Default)]
pub(crate) struct PhaseRecorder {
    timings: Vec<PhaseTiming>,
}

impl PhaseRecorder {
    pub fn clear(&mut self) {
        self.timings.clear();
    }

    /// Runs `work` and records its wall-clock duration under `phase`.
    pub fn record<T>(&mut self, phase: Phase, work: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = work();
        self.push(phase, start.elapsed());
        out
    }

    pub fn push(&mut self, phase: Phase, duration: Duration) {
        self.timings.push(PhaseTiming {
            phase,
            duration_ns: duration.as_nanos() as u64,
            run_index: 0,
        });
    }

    pub fn timings(&self) -> &[PhaseTiming] {
        &self.timings
    }
}
