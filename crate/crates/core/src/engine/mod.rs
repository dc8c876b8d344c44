//! Storage-engine abstraction with three interchangeable engines.
//!
//! All engines compute the same two sociograms from the same [`EventLog`],
//! but over deliberately different data layouts and access paths:
//!
//! - [`ReferenceEngine`] runs the metric functions directly on dense
//!   arrays; it is the correctness baseline.
//! - [`TabularEngine`] materializes relational-style row tables and
//!   answers everything through scans and nested-loop self-joins.
//! - [`GraphEngine`] stores a property graph with index-free adjacency and
//!   answers everything through traversals and edge merges.
//!
//! Engines also report per-phase wall-clock timings and a deterministic
//! byte accounting of their materialized structures, which is what the
//! bench harness compares.

mod graph;
mod pgraph;
mod reference;
mod tabular;

pub use graph::GraphEngine;
pub use reference::ReferenceEngine;
pub use tabular::TabularEngine;

use crate::event_log::EventLog;
use crate::metrics::{Sociogram, SubContractParams};
use crate::timing::PhaseTiming;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which sociogram an engine is asked to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    SimilarTask,
    SubContract,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::SimilarTask => "similar_task",
            Algorithm::SubContract => "sub_contract",
        })
    }
}

/// Engine selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineKind {
    Reference,
    Tabular,
    Graph,
}

impl EngineKind {
    pub fn all() -> [EngineKind; 3] {
        [EngineKind::Reference, EngineKind::Tabular, EngineKind::Graph]
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Reference => "reference",
            EngineKind::Tabular => "tabular",
            EngineKind::Graph => "graph",
        })
    }
}

/// One accounted structure (a table, or a class of graph elements).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StorageEntry {
    pub name: String,
    pub bytes: u64,
}

/// Deterministic byte accounting of an engine's materialized structures.
/// The total always equals the sum of the entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StorageReport {
    pub entries: Vec<StorageEntry>,
    pub total_bytes: u64,
}

impl StorageReport {
    pub fn from_entries<N: Into<String>>(entries: Vec<(N, u64)>) -> Self {
        let entries: Vec<StorageEntry> = entries
            .into_iter()
            .map(|(name, bytes)| StorageEntry {
                name: name.into(),
                bytes,
            })
            .collect();
        let total_bytes = entries.iter().map(|e| e.bytes).sum();
        Self {
            entries,
            total_bytes,
        }
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.bytes)
    }
}

/// Common surface of the three engines.
///
/// `load` populates the engine for one algorithm, replacing any previous
/// state, and records the load phase timing. After a load, builds are
/// repeatable: running the same build twice yields identical sociograms
/// and identical storage reports.
pub trait Engine {
    fn kind(&self) -> EngineKind;

    fn load(&mut self, log: &EventLog, algorithm: Algorithm) -> Result<()>;

    fn build_similar_task(&mut self) -> Result<Sociogram>;

    fn build_sub_contract(&mut self, params: &SubContractParams) -> Result<Sociogram>;

    /// Timings recorded since the last load: the load phase first, then
    /// the phases of each build in execution order.
    fn phase_timings(&self) -> Vec<PhaseTiming>;

    fn storage_report(&self) -> StorageReport;
}

pub fn create_engine(kind: EngineKind) -> Box<dyn Engine> {
    match kind {
        EngineKind::Reference => Box::new(ReferenceEngine::new()),
        EngineKind::Tabular => Box::new(TabularEngine::new()),
        EngineKind::Graph => Box::new(GraphEngine::new()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{similar_task, sub_contract, ActorActivityMatrix};
    use crate::sample::sample_log;
    use crate::synthetic::{synthetic_log, SyntheticSpec};
    use crate::timing::Phase;
    use std::time::Instant;

    #[test]
    fn storage_report_totals_sum_entries() {
        let report = StorageReport::from_entries(vec![("a", 10), ("b", 32)]);
        assert_eq!(report.total_bytes, 42);
        assert_eq!(report.get("b"), Some(32));
        assert_eq!(report.get("c"), None);
    }

    #[test]
    fn engines_refuse_builds_before_load_and_across_modes() {
        for kind in EngineKind::all() {
            let mut engine = create_engine(kind);
            assert!(matches!(
                engine.build_similar_task(),
                Err(crate::Error::NotLoaded)
            ));
            engine.load(&sample_log(), Algorithm::SimilarTask).unwrap();
            assert!(matches!(
                engine.build_sub_contract(&SubContractParams::default()),
                Err(crate::Error::WrongMode { .. })
            ));
        }
    }

    #[test]
    fn engines_match_reference_on_the_sample() {
        let log = sample_log();
        let reference_similar = similar_task(&ActorActivityMatrix::from_log(&log));
        let reference_sub = sub_contract(
            &log.group_by_case(),
            log.actors().len(),
            &SubContractParams::default(),
        )
        .unwrap();

        for kind in EngineKind::all() {
            let mut engine = create_engine(kind);
            engine.load(&log, Algorithm::SimilarTask).unwrap();
            let similar = engine.build_similar_task().unwrap();
            assert!(
                similar.max_abs_diff(&reference_similar) <= 1e-9,
                "{kind} similar-task"
            );

            engine.load(&log, Algorithm::SubContract).unwrap();
            let sub = engine
                .build_sub_contract(&SubContractParams::default())
                .unwrap();
            assert!(sub.max_abs_diff(&reference_sub) <= 1e-9, "{kind} sub-contract");
        }
    }

    #[test]
    fn builds_are_repeatable() {
        let log = synthetic_log(&SyntheticSpec::sized(400, 11));
        for kind in EngineKind::all() {
            let mut engine = create_engine(kind);
            engine.load(&log, Algorithm::SubContract).unwrap();
            let params = SubContractParams::default();
            let first = engine.build_sub_contract(&params).unwrap();
            let first_storage = engine.storage_report();
            let second = engine.build_sub_contract(&params).unwrap();
            let second_storage = engine.storage_report();
            assert_eq!(first, second, "{kind} sociogram repeatability");
            assert_eq!(first_storage, second_storage, "{kind} storage repeatability");
        }
    }

    #[test]
    fn phase_durations_fit_inside_build_wall_time() {
        let log = synthetic_log(&SyntheticSpec::sized(800, 3));
        for kind in EngineKind::all() {
            let mut engine = create_engine(kind);
            let started = Instant::now();
            engine.load(&log, Algorithm::SubContract).unwrap();
            engine
                .build_sub_contract(&SubContractParams::default())
                .unwrap();
            let wall_ns = started.elapsed().as_nanos() as u64;
            let timings = engine.phase_timings();
            let phases: Vec<Phase> = timings.iter().map(|t| t.phase).collect();
            assert_eq!(
                phases,
                vec![
                    Phase::Load,
                    Phase::UpdateNormal,
                    Phase::Detection,
                    Phase::UpdateResult,
                    Phase::Normalize,
                ],
                "{kind} phase set"
            );
            let sum: u64 = timings.iter().map(|t| t.duration_ns).sum();
            assert!(sum <= wall_ns, "{kind}: phase sum exceeds wall time");
        }
    }

    #[test]
    fn empty_engine_storage_is_zero() {
        for kind in EngineKind::all() {
            let engine = create_engine(kind);
            assert_eq!(engine.storage_report().total_bytes, 0, "{kind}");
        }
    }
}
