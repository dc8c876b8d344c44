//! Reference engine: the metric functions behind the engine surface.
//!
//! Exists so the bench harness can time the baseline with the same phase
//! decomposition as the storage engines. Builds are composed from the
//! exact same staged functions `metrics::similar_task` and
//! `metrics::sub_contract` use internally, so its output is bit-identical
//! to calling those functions directly.

use super::{Algorithm, Engine, EngineKind, StorageReport};
use crate::event_log::{EventLog, Trace};
use crate::metrics::{
    self, ActorActivityMatrix, Sociogram, SubContractParams,
};
use crate::timing::{Phase, PhaseRecorder, PhaseTiming};
use crate::{Error, Result};

enum State {
    Similar {
        matrix: ActorActivityMatrix,
    },
    Sub {
        traces: Vec<Trace>,
        actor_count: usize,
        event_count: usize,
    },
}

/// In-memory dense-array baseline.
///
/// Storage accounting rule: 8 bytes per matrix cell, 16 bytes per held
/// event; the built sociogram accounts `actors^2 * 8`.
#[derive(Default)]
pub struct ReferenceEngine {
    state: Option<State>,
    sociogram_cells: Option<usize>,
    recorder: PhaseRecorder,
}

impl ReferenceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn mode(&self) -> Option<Algorithm> {
        self.state.as_ref().map(|s| match s {
            State::Similar { .. } => Algorithm::SimilarTask,
            State::Sub { .. } => Algorithm::SubContract,
        })
    }

    fn require(&self, requested: Algorithm) -> Result<()> {
        match self.mode() {
            None => Err(Error::NotLoaded),
            Some(loaded) if loaded != requested => Err(Error::WrongMode { loaded, requested }),
            Some(_) => Ok(()),
        }
    }
}

impl Engine for ReferenceEngine {
    fn kind(&self) -> EngineKind {
        EngineKind::Reference
    }

    fn load(&mut self, log: &EventLog, algorithm: Algorithm) -> Result<()> {
        self.state = None;
        self.sociogram_cells = None;
        self.recorder.clear();
        let state = self.recorder.record(Phase::Load, || match algorithm {
            Algorithm::SimilarTask => State::Similar {
                matrix: ActorActivityMatrix::from_log(log),
            },
            Algorithm::SubContract => State::Sub {
                traces: log.group_by_case(),
                actor_count: log.actors().len(),
                event_count: log.event_count(),
            },
        });
        self.state = Some(state);
        Ok(())
    }

    fn build_similar_task(&mut self) -> Result<Sociogram> {
        self.require(Algorithm::SimilarTask)?;
        let Some(State::Similar { matrix }) = &self.state else {
            unreachable!()
        };
        let pairs = self
            .recorder
            .record(Phase::ComputeSimilarity, || metrics::pair_similarities(matrix));
        let sociogram = self.recorder.record(Phase::WriteResult, || {
            metrics::fill_symmetric(matrix.actor_count(), &pairs)
        });
        self.sociogram_cells = Some(sociogram.len() * sociogram.len());
        Ok(sociogram)
    }

    fn build_sub_contract(&mut self, params: &SubContractParams) -> Result<Sociogram> {
        self.require(Algorithm::SubContract)?;
        params.validate()?;
        let Some(State::Sub {
            traces,
            actor_count,
            ..
        }) = &self.state
        else {
            unreachable!()
        };
        let actor_count = *actor_count;
        let normal = self
            .recorder
            .record(Phase::UpdateNormal, || metrics::sub_contract_normal(traces, params));
        let detections = self
            .recorder
            .record(Phase::Detection, || metrics::sub_contract_detect(traces, params));
        let raw = self.recorder.record(Phase::UpdateResult, || {
            metrics::sub_contract_accumulate(&detections, actor_count, params)
        });
        let sociogram = self.recorder.record(Phase::Normalize, || {
            metrics::sub_contract_normalize(raw, actor_count, normal)
        });
        self.sociogram_cells = Some(actor_count * actor_count);
        Ok(sociogram)
    }

    fn phase_timings(&self) -> Vec<PhaseTiming> {
        self.recorder.timings().to_vec()
    }

    fn storage_report(&self) -> StorageReport {
        let mut entries: Vec<(&str, u64)> = Vec::new();
        match &self.state {
            None => {}
            Some(State::Similar { matrix }) => {
                entries.push((
                    "actor_activity_matrix",
                    (matrix.actor_count() * matrix.activity_count() * 8) as u64,
                ));
            }
            Some(State::Sub { event_count, .. }) => {
                entries.push(("traces", (event_count * 16) as u64));
            }
        }
        if let Some(cells) = self.sociogram_cells {
            entries.push(("sociogram", (cells * 8) as u64));
        }
        StorageReport::from_entries(entries)
    }
}
