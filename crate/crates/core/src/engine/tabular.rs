//! Row-store engine mirroring a relational implementation.
//!
//! Similar-task mode imports the log into a `dataset` table, scans it with
//! a count-if pass into a wide actor-activity table, computes every
//! distinct-actor pair through an honest nested-loop self-join over that
//! table (the full expression is evaluated per ordered pair), writes the
//! ordered `(source, target, similarity)` triples, and pivots them into a
//! wide result table.
//!
//! Sub-contract mode re-orders `dataset` into `organised` so each case's
//! rows are contiguous (blocks ordered by case id, rows ascending, ids
//! reassigned contiguously), finds bounding pairs per case with a
//! nested-loop self-join on `id gap >= 2` capped by the configured depth,
//! orders detections by gap, collects the strictly intermediate rows, and
//! accumulates weighted contributions into a wide result table before
//! normalizing.

use super::{Algorithm, Engine, EngineKind, StorageReport};
use crate::event_log::EventLog;
use crate::metrics::{
    fall_weight, max_gap, processed_gaps, Sociogram, SociogramKind, SubContractParams,
};
use crate::timing::{Phase, PhaseRecorder, PhaseTiming};
use crate::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Debug)]
struct DataRow {
    id: u64,
    case: String,
    actor: String,
    activity: String,
}

#[derive(Clone, Debug)]
struct AaRow {
    actor: String,
    counts: Vec<u64>,
}

#[derive(Clone, Debug)]
struct SimTriple {
    source: String,
    target: String,
    similarity: f64,
}

#[derive(Clone, Debug)]
struct WideRow {
    actor: String,
    values: Vec<f64>,
}

/// A detected bounding pair: positions are indices into `organised`.
#[derive(Clone, Copy, Debug)]
struct Detection {
    gap: usize,
    start: usize,
    end: usize,
}

#[derive(Default)]
pub struct TabularEngine {
    mode: Option<Algorithm>,
    recorder: PhaseRecorder,
    dense_ids: HashMap<String, u32>,
    actor_count: usize,

    dataset: Vec<DataRow>,
    organised: Vec<DataRow>,

    aa_columns: Vec<String>,
    aa_rows: Vec<AaRow>,
    aa_index: HashMap<String, usize>,

    init_sim: Vec<SimTriple>,
    final_sim: Vec<WideRow>,

    result_actors: Vec<String>,
    result: Vec<WideRow>,
    normalizer: f64,
}

impl TabularEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self) {
        *self = Self::default();
    }

    fn require(&self, requested: Algorithm) -> Result<()> {
        match self.mode {
            None => Err(Error::NotLoaded),
            Some(loaded) if loaded != requested => Err(Error::WrongMode { loaded, requested }),
            Some(_) => Ok(()),
        }
    }

    fn import_dataset(&mut self, log: &EventLog) {
        self.dataset = log
            .events()
            .iter()
            .enumerate()
            .map(|(id, event)| DataRow {
                id: id as u64,
                case: log.cases().name(event.case).to_owned(),
                actor: log.actors().name(event.actor).to_owned(),
                activity: log.activities().name(event.activity).to_owned(),
            })
            .collect();
    }

    fn build_aa_table(&mut self) {
        // Cursor pass: collect the distinct activities and actors in
        // dataset scan order; they become the table schema.
        for row in &self.dataset {
            if !self.aa_columns.contains(&row.activity) {
                self.aa_columns.push(row.activity.clone());
            }
            if !self.aa_index.contains_key(&row.actor) {
                self.aa_index.insert(row.actor.clone(), self.aa_rows.len());
                self.aa_rows.push(AaRow {
                    actor: row.actor.clone(),
                    counts: Vec::new(),
                });
            }
        }
        for aa_row in &mut self.aa_rows {
            aa_row.counts = vec![0; self.aa_columns.len()];
        }
        // Count-if population: one dataset scan, every activity column
        // tested per row.
        for row in &self.dataset {
            let target = self.aa_index[&row.actor];
            for (column, activity) in self.aa_columns.iter().enumerate() {
                if &row.activity == activity {
                    self.aa_rows[target].counts[column] += 1;
                }
            }
        }
    }

    fn organise(&mut self) {
        self.organised = self.dataset.clone();
        self.organised
            .sort_by(|a, b| a.case.cmp(&b.case).then(a.id.cmp(&b.id)));
        for (id, row) in self.organised.iter_mut().enumerate() {
            row.id = id as u64;
        }
    }

    /// Contiguous `[start, end)` runs of equal case in `organised`.
    fn case_blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..=self.organised.len() {
            if i == self.organised.len() || self.organised[i].case != self.organised[start].case {
                blocks.push((start, i));
                start = i;
            }
        }
        blocks
    }

    fn sociogram_from_wide(
        &self,
        kind: SociogramKind,
        actors: &[String],
        rows: &[WideRow],
    ) -> Sociogram {
        let mut sociogram = Sociogram::zero(kind, self.actor_count);
        for row in rows {
            let from = self.dense_ids[&row.actor] as usize;
            for (column, value) in row.values.iter().enumerate() {
                if *value != 0.0 {
                    let to = self.dense_ids[&actors[column]] as usize;
                    sociogram.set(from, to, *value);
                }
            }
        }
        sociogram
    }
}

impl Engine for TabularEngine {
    fn kind(&self) -> EngineKind {
        EngineKind::Tabular
    }

    fn load(&mut self, log: &EventLog, algorithm: Algorithm) -> Result<()> {
        self.reset();
        for (id, name) in log.actors().names().enumerate() {
            self.dense_ids.insert(name.to_owned(), id as u32);
        }
        self.actor_count = log.actors().len();
        let mut recorder = std::mem::take(&mut self.recorder);
        recorder.record(Phase::Load, || {
            self.import_dataset(log);
            match algorithm {
                Algorithm::SimilarTask => self.build_aa_table(),
                Algorithm::SubContract => self.organise(),
            }
        });
        self.recorder = recorder;
        self.mode = Some(algorithm);
        Ok(())
    }

    fn build_similar_task(&mut self) -> Result<Sociogram> {
        self.require(Algorithm::SimilarTask)?;

        let mut recorder = std::mem::take(&mut self.recorder);
        recorder.record(Phase::ComputeSimilarity, || {
            self.init_sim.clear();
            // Nested-loop self-join with the distinct-actor predicate; the
            // cosine expression is evaluated per joined row pair.
            for first in &self.aa_rows {
                for second in &self.aa_rows {
                    if first.actor == second.actor {
                        continue;
                    }
                    let mut dot = 0.0;
                    let mut first_sq = 0.0;
                    let mut second_sq = 0.0;
                    for (a, b) in first.counts.iter().zip(&second.counts) {
                        let (a, b) = (*a as f64, *b as f64);
                        dot += a * b;
                        first_sq += a * a;
                        second_sq += b * b;
                    }
                    let similarity = if first_sq == 0.0 || second_sq == 0.0 {
                        0.0
                    } else {
                        (dot / (first_sq.sqrt() * second_sq.sqrt())).clamp(0.0, 1.0)
                    };
                    self.init_sim.push(SimTriple {
                        source: first.actor.clone(),
                        target: second.actor.clone(),
                        similarity,
                    });
                }
            }
            self.init_sim
                .sort_by(|a, b| a.source.cmp(&b.source).then(a.target.cmp(&b.target)));
        });

        recorder.record(Phase::WriteResult, || {
            self.final_sim = self
                .aa_rows
                .iter()
                .map(|row| WideRow {
                    actor: row.actor.clone(),
                    values: vec![0.0; self.aa_rows.len()],
                })
                .collect();
            for triple in &self.init_sim {
                let row = self.aa_index[&triple.source];
                let column = self.aa_index[&triple.target];
                self.final_sim[row].values[column] = triple.similarity;
            }
        });
        self.recorder = recorder;

        let actors: Vec<String> = self.aa_rows.iter().map(|r| r.actor.clone()).collect();
        Ok(self.sociogram_from_wide(SociogramKind::SimilarTask, &actors, &self.final_sim))
    }

    fn build_sub_contract(&mut self, params: &SubContractParams) -> Result<Sociogram> {
        self.require(Algorithm::SubContract)?;
        params.validate()?;

        let blocks = self.case_blocks();
        let mut recorder = std::mem::take(&mut self.recorder);

        let normal = recorder.record(Phase::UpdateNormal, || {
            let mut normal = 0.0;
            for &(start, end) in &blocks {
                for gap in processed_gaps(end - start, params) {
                    normal += fall_weight(params.beta, gap);
                }
            }
            normal
        });
        self.normalizer = normal;

        let detections: Vec<Vec<Detection>> = recorder.record(Phase::Detection, || {
            blocks
                .iter()
                .map(|&(start, end)| {
                    let size = end - start;
                    let Some(cap) = max_gap(size, params) else {
                        return Vec::new();
                    };
                    let mut found = Vec::new();
                    // Honest per-case self-join: every ordered row pair is
                    // tested against the full predicate.
                    for t1 in start..end {
                        for t2 in start..end {
                            let first = &self.organised[t1];
                            let second = &self.organised[t2];
                            if second.id < first.id + 2 {
                                continue;
                            }
                            let gap = (second.id - first.id) as usize;
                            if gap > cap {
                                continue;
                            }
                            if first.actor != second.actor {
                                continue;
                            }
                            if params.require_distinct_activities
                                && first.activity == second.activity
                            {
                                continue;
                            }
                            found.push(Detection {
                                gap,
                                start: t1,
                                end: t2,
                            });
                        }
                    }
                    found.sort_by_key(|d| d.gap);
                    found
                })
                .collect()
        });

        recorder.record(Phase::UpdateResult, || {
            self.result_actors.clear();
            let mut result_index: HashMap<String, usize> = HashMap::new();
            for row in &self.organised {
                if !result_index.contains_key(&row.actor) {
                    result_index.insert(row.actor.clone(), self.result_actors.len());
                    self.result_actors.push(row.actor.clone());
                }
            }
            self.result = self
                .result_actors
                .iter()
                .map(|actor| WideRow {
                    actor: actor.clone(),
                    values: vec![0.0; self.result_actors.len()],
                })
                .collect();

            for case_detections in &detections {
                let mut cursor = 0;
                while cursor < case_detections.len() {
                    // One run of equal gap = one (case, gap) group.
                    let gap = case_detections[cursor].gap;
                    let mut pairs: Vec<(&str, &str)> = Vec::new();
                    while cursor < case_detections.len() && case_detections[cursor].gap == gap {
                        let detection = case_detections[cursor];
                        let performer = self.organised[detection.start].actor.as_str();
                        for intermediate in detection.start + 1..detection.end {
                            pairs.push((performer, self.organised[intermediate].actor.as_str()));
                        }
                        cursor += 1;
                    }
                    pairs.sort_unstable();
                    pairs.dedup();
                    let weight = fall_weight(params.beta, gap);
                    for (performer, intermediate) in pairs {
                        let row = result_index[performer];
                        let column = result_index[intermediate];
                        self.result[row].values[column] += weight;
                    }
                }
            }
        });

        recorder.record(Phase::Normalize, || {
            if normal > 0.0 {
                for row in &mut self.result {
                    for value in &mut row.values {
                        *value /= normal;
                    }
                }
            }
        });
        self.recorder = recorder;

        let mut sociogram = self.sociogram_from_wide(
            SociogramKind::SubContract,
            &self.result_actors.clone(),
            &self.result,
        );
        sociogram.set_normalizer(normal);
        Ok(sociogram)
    }

    fn phase_timings(&self) -> Vec<PhaseTiming> {
        self.recorder.timings().to_vec()
    }

    /// Byte accounting: string cells cost `len + 1`, numeric cells 8, and
    /// every table pays an 8-byte-per-row index overhead.
    fn storage_report(&self) -> StorageReport {
        fn data_table(rows: &[DataRow]) -> u64 {
            rows.iter()
                .map(|r| {
                    8 + (r.case.len() + 1 + r.actor.len() + 1 + r.activity.len() + 1) as u64 + 8
                })
                .sum()
        }
        fn wide_table(rows: &[WideRow]) -> u64 {
            rows.iter()
                .map(|r| (r.actor.len() + 1 + 8 * r.values.len()) as u64 + 8)
                .sum()
        }

        let mut entries: Vec<(&str, u64)> = Vec::new();
        match self.mode {
            None => {}
            Some(Algorithm::SimilarTask) => {
                entries.push(("dataset", data_table(&self.dataset)));
                entries.push((
                    "aa_matrix",
                    self.aa_rows
                        .iter()
                        .map(|r| (r.actor.len() + 1 + 8 * r.counts.len()) as u64 + 8)
                        .sum(),
                ));
                entries.push((
                    "init_sim",
                    self.init_sim
                        .iter()
                        .map(|t| (t.source.len() + 1 + t.target.len() + 1 + 8) as u64 + 8)
                        .sum(),
                ));
                entries.push(("final_sim", wide_table(&self.final_sim)));
            }
            Some(Algorithm::SubContract) => {
                entries.push(("dataset", data_table(&self.dataset)));
                entries.push(("organised", data_table(&self.organised)));
                entries.push(("result", wide_table(&self.result)));
            }
        }
        StorageReport::from_entries(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::event_log::EventLog;
    use crate::sample::sample_log;

    fn loaded(log: &EventLog, algorithm: Algorithm) -> TabularEngine {
        let mut engine = TabularEngine::new();
        engine.load(log, algorithm).unwrap();
        engine
    }

    #[test]
    fn organised_groups_case_rows_contiguously() {
        let log = sample_log();
        let engine = loaded(&log, Algorithm::SubContract);
        let first_four: Vec<(&str, &str)> = engine.organised[..4]
            .iter()
            .map(|r| (r.activity.as_str(), r.actor.as_str()))
            .collect();
        assert_eq!(
            first_four,
            vec![("A", "Matt"), ("B", "Britney"), ("E", "Matt"), ("D", "George")]
        );
        let ids: Vec<u64> = engine.organised.iter().map(|r| r.id).collect();
        assert_eq!(ids, (0..19).collect::<Vec<u64>>());
        // Permutation of the dataset.
        assert_eq!(engine.organised.len(), engine.dataset.len());
    }

    #[test]
    fn aa_table_matches_known_counts() {
        let log = sample_log();
        let engine = loaded(&log, Algorithm::SimilarTask);
        let row = &engine.aa_rows[engine.aa_index["Matt"]];
        let count = |activity: &str| {
            let column = engine
                .aa_columns
                .iter()
                .position(|c| c == activity)
                .unwrap();
            row.counts[column]
        };
        assert_eq!(count("A"), 2);
        assert_eq!(count("B"), 0);
        assert_eq!(count("E"), 3);
        let total: u64 = engine.aa_rows.iter().flat_map(|r| &r.counts).sum();
        assert_eq!(total, 19);
    }

    #[test]
    fn single_event_log_yields_single_row_tables() {
        let log = EventLog::from_triples([("1", "A", "solo")]);
        let mut engine = loaded(&log, Algorithm::SimilarTask);
        assert_eq!(engine.dataset.len(), 1);
        assert_eq!(engine.aa_rows.len(), 1);
        engine.build_similar_task().unwrap();
        // One actor: the distinct-actor join yields no pairs.
        assert!(engine.init_sim.is_empty());
        assert_eq!(engine.final_sim.len(), 1);
    }

    #[test]
    fn init_sim_is_ordered_by_source_then_target() {
        let log = sample_log();
        let mut engine = loaded(&log, Algorithm::SimilarTask);
        engine.build_similar_task().unwrap();
        assert_eq!(engine.init_sim.len(), 5 * 4);
        let ordered = engine.init_sim.windows(2).all(|w| {
            (w[0].source.as_str(), w[0].target.as_str())
                <= (w[1].source.as_str(), w[1].target.as_str())
        });
        assert!(ordered);
    }

    #[test]
    fn distinct_activity_flag_suppresses_equal_bounds() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "y"), ("1", "A", "x")]);
        let mut engine = loaded(&log, Algorithm::SubContract);
        let mut params = SubContractParams::default();
        params.require_distinct_activities = true;
        let sociogram = engine.build_sub_contract(&params).unwrap();
        assert!(sociogram.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn depth_caps_the_id_gap() {
        // x ... y ... x with gap 3 is only detected when depth allows it.
        let log = EventLog::from_triples([
            ("1", "A", "x"),
            ("1", "B", "y"),
            ("1", "C", "z"),
            ("1", "D", "x"),
        ]);
        let mut engine = loaded(&log, Algorithm::SubContract);
        let shallow = SubContractParams::new(0.5, 1).unwrap();
        let sociogram = engine.build_sub_contract(&shallow).unwrap();
        assert!(sociogram.values().iter().all(|&v| v == 0.0));

        let deep = SubContractParams::new(0.5, 5).unwrap();
        let sociogram = engine.build_sub_contract(&deep).unwrap();
        let x = 0;
        assert!(sociogram.get(x, 1) > 0.0);
        assert!(sociogram.get(x, 2) > 0.0);
    }
}
