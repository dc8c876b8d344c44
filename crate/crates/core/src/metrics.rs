//! Reference implementations of the two sociogram metrics.
//!
//! *Similar-task* relates actors by the activity profiles they execute:
//! the cosine of their actor-activity matrix rows. *Sub-contract* relates
//! actor `i` to actor `j` by how often `j` works strictly between two
//! events of `i` within one case, geometrically discounted by the gap
//! (`beta^(k-2)` for a gap of `k` positions) and normalized by the sum of
//! those discounts over every processed `(case, gap)` pair.
//!
//! These functions are the ground truth the storage engines are checked
//! against. They are pure and deterministic: identical inputs produce
//! bit-identical outputs.

use crate::event_log::{EventLog, Interner, Trace};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Actor x activity frequency counts with label bijections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActorActivityMatrix {
    counts: Vec<u64>,
    actors: Interner,
    activities: Interner,
}

impl ActorActivityMatrix {
    /// Counts every `(actor, activity)` occurrence of `log`.
    pub fn from_log(log: &EventLog) -> Self {
        let actors = log.actors().clone();
        let activities = log.activities().clone();
        let mut counts = vec![0u64; actors.len() * activities.len()];
        for event in log.events() {
            counts[event.actor as usize * activities.len() + event.activity as usize] += 1;
        }
        Self {
            counts,
            actors,
            activities,
        }
    }

    /// Builds a matrix from explicit rows; row order defines actor ids.
    pub fn from_rows(actor_names: &[&str], activity_names: &[&str], rows: &[Vec<u64>]) -> Self {
        assert_eq!(actor_names.len(), rows.len(), "one row per actor");
        let mut actors = Interner::new();
        for name in actor_names {
            actors.intern(name);
        }
        let mut activities = Interner::new();
        for name in activity_names {
            activities.intern(name);
        }
        let mut counts = Vec::with_capacity(actor_names.len() * activity_names.len());
        for row in rows {
            assert_eq!(row.len(), activity_names.len(), "one column per activity");
            counts.extend_from_slice(row);
        }
        Self {
            counts,
            actors,
            activities,
        }
    }

    pub fn actor_count(&self) -> usize {
        self.actors.len()
    }

    pub fn activity_count(&self) -> usize {
        self.activities.len()
    }

    pub fn actors(&self) -> &Interner {
        &self.actors
    }

    pub fn activities(&self) -> &Interner {
        &self.activities
    }

    pub fn count(&self, actor: u32, activity: u32) -> u64 {
        self.counts[actor as usize * self.activities.len() + activity as usize]
    }

    /// Frequency row of one actor, in dense activity order.
    pub fn row(&self, actor: u32) -> &[u64] {
        let width = self.activities.len();
        &self.counts[actor as usize * width..(actor as usize + 1) * width]
    }

    /// Sum of all cells; equals the event count of the source log.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count_by_names(&self, actor: &str, activity: &str) -> Option<u64> {
        Some(self.count(self.actors.id(actor)?, self.activities.id(activity)?))
    }
}

/// Builds the actor-activity matrix of a log.
pub fn build_actor_activity_matrix(log: &EventLog) -> ActorActivityMatrix {
    ActorActivityMatrix::from_log(log)
}

/// Cosine of two equally long non-negative vectors; 0 when either norm is
/// 0 so sociogram entries stay inside `[0, 1]`.
pub fn cosine_similarity(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let mut dot = 0.0;
    let mut p_sq = 0.0;
    let mut q_sq = 0.0;
    for (a, b) in p.iter().zip(q) {
        dot += a * b;
        p_sq += a * a;
        q_sq += b * b;
    }
    if p_sq == 0.0 || q_sq == 0.0 {
        return Ok(0.0);
    }
    // Clamp guards the [0, 1] range against the last-ulp of rounding.
    Ok((dot / (p_sq.sqrt() * q_sq.sqrt())).clamp(0.0, 1.0))
}

/// Which relation a sociogram expresses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SociogramKind {
    /// Symmetric, zero diagonal.
    SimilarTask,
    /// Directed; carries the normalization constant.
    SubContract,
}

/// Dense actor x actor matrix of relation strengths in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sociogram {
    kind: SociogramKind,
    n: usize,
    values: Vec<f64>,
    normalizer: Option<f64>,
}

impl Sociogram {
    pub fn zero(kind: SociogramKind, n: usize) -> Self {
        Self {
            kind,
            n,
            values: vec![0.0; n * n],
            normalizer: match kind {
                SociogramKind::SimilarTask => None,
                SociogramKind::SubContract => Some(0.0),
            },
        }
    }

    pub fn kind(&self) -> SociogramKind {
        self.kind
    }

    /// Number of actors (the matrix is `n x n`).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.values[row * self.n + col] = value;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Sub-contract normalization constant; `None` for similar-task.
    pub fn normalizer(&self) -> Option<f64> {
        self.normalizer
    }

    pub(crate) fn set_normalizer(&mut self, normal: f64) {
        self.normalizer = Some(normal);
    }

    /// Largest elementwise difference; infinite when shapes or kinds differ.
    pub fn max_abs_diff(&self, other: &Sociogram) -> f64 {
        if self.n != other.n || self.kind != other.kind {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Experimental loop-semantics toggles. Not exposed on the CLI; the
/// defaults are the canonical semantics every test pins down.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Experimental {
    /// Treat the gap loop's upper bound as inclusive.
    pub inclusive_k: bool,
    /// Drop the depth cap on the bounding gap (depth behaves as infinite).
    pub unbounded_gap: bool,
}

/// Sub-contract parameters: causality fall factor, indirect-succession
/// depth, and the activity-inequality variant of the bounding predicate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubContractParams {
    /// Causality fall factor in `[0, 1]`; a gap of `k` weighs `beta^(k-2)`.
    pub beta: f64,
    /// Largest indirect-succession gap considered (>= 1; 1 means direct
    /// subcontraction only, i.e. gap 2).
    pub depth: usize,
    /// Also require the two bounding events to carry different activities.
    pub require_distinct_activities: bool,
    #[serde(default)]
    pub experimental: Experimental,
}

impl Default for SubContractParams {
    fn default() -> Self {
        Self {
            beta: 0.5,
            depth: 5,
            require_distinct_activities: false,
            experimental: Experimental::default(),
        }
    }
}

impl SubContractParams {
    pub fn new(beta: f64, depth: usize) -> Result<Self> {
        let params = Self {
            beta,
            depth,
            ..Self::default()
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.beta.is_finite() || !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::InvalidParams(format!(
                "beta must lie in [0, 1], got {}",
                self.beta
            )));
        }
        if self.depth < 1 {
            return Err(Error::InvalidParams("depth must be at least 1".into()));
        }
        Ok(())
    }
}

/// Weight of a bounding pair at gap `k`.
pub(crate) fn fall_weight(beta: f64, gap: usize) -> f64 {
    beta.powi(gap as i32 - 2)
}

/// Gap values processed for a trace of `size` events. Empty for traces
/// shorter than 3. Canonically `2..min_k` with `min_k = size` when
/// `size < depth`, else `depth + 1`, floored at 3; the experimental
/// toggles widen the range.
pub(crate) fn processed_gaps(size: usize, params: &SubContractParams) -> std::ops::Range<usize> {
    if size < 3 {
        return 2..2;
    }
    let depth = if params.experimental.unbounded_gap {
        usize::MAX - 1
    } else {
        params.depth
    };
    let mut min_k = if size < depth {
        size
    } else {
        depth.saturating_add(1)
    };
    if min_k < 3 {
        min_k = 3;
    }
    let end = if params.experimental.inclusive_k {
        min_k.saturating_add(1)
    } else {
        min_k
    };
    2..end
}

/// Largest gap a bounding pair may span in a trace of `size` events, if any.
pub(crate) fn max_gap(size: usize, params: &SubContractParams) -> Option<usize> {
    let gaps = processed_gaps(size, params);
    if gaps.is_empty() {
        None
    } else {
        Some(gaps.end - 1)
    }
}

/// Similarity values for every unordered actor pair `i < j`, in pair order.
pub(crate) fn pair_similarities(matrix: &ActorActivityMatrix) -> Vec<(u32, u32, f64)> {
    let n = matrix.actor_count();
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| matrix.row(i as u32).iter().map(|&c| c as f64).collect())
        .collect();
    let mut pairs = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let value = cosine_similarity(&rows[i], &rows[j])
                .expect("matrix rows share the activity dimension");
            pairs.push((i as u32, j as u32, value));
        }
    }
    pairs
}

/// Writes pair similarities into a symmetric zero-diagonal sociogram.
pub(crate) fn fill_symmetric(n: usize, pairs: &[(u32, u32, f64)]) -> Sociogram {
    let mut sociogram = Sociogram::zero(SociogramKind::SimilarTask, n);
    for &(i, j, value) in pairs {
        sociogram.set(i as usize, j as usize, value);
        sociogram.set(j as usize, i as usize, value);
    }
    sociogram
}

/// Similar-task sociogram of an actor-activity matrix: cosine similarity
/// for every distinct actor pair, symmetric, zero diagonal.
pub fn similar_task(matrix: &ActorActivityMatrix) -> Sociogram {
    fill_symmetric(matrix.actor_count(), &pair_similarities(matrix))
}

/// Sum of `beta^(k-2)` over all processed `(trace, gap)` pairs, in trace
/// order with ascending gaps.
pub(crate) fn sub_contract_normal(traces: &[Trace], params: &SubContractParams) -> f64 {
    let mut normal = 0.0;
    for trace in traces {
        for gap in processed_gaps(trace.len(), params) {
            normal += fall_weight(params.beta, gap);
        }
    }
    normal
}

/// Distinct `(performer, intermediate)` actor pairs detected in one trace,
/// grouped by ascending gap. Within one `(trace, gap)` group a pair counts
/// once, no matter how many bounding windows produced it.
pub(crate) fn detect_trace(
    events: &[crate::event_log::Event],
    params: &SubContractParams,
) -> Vec<(usize, Vec<(u32, u32)>)> {
    let size = events.len();
    let mut groups = Vec::new();
    for gap in processed_gaps(size, params) {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for i in 0..size.saturating_sub(gap) {
            let first = events[i];
            let last = events[i + gap];
            if first.actor != last.actor {
                continue;
            }
            if params.require_distinct_activities && first.activity == last.activity {
                continue;
            }
            for j in (i + 1)..(i + gap) {
                pairs.push((first.actor, events[j].actor));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        groups.push((gap, pairs));
    }
    groups
}

/// Per-trace detections for a whole log, in trace order.
pub(crate) fn sub_contract_detect(
    traces: &[Trace],
    params: &SubContractParams,
) -> Vec<Vec<(usize, Vec<(u32, u32)>)>> {
    traces
        .iter()
        .map(|trace| detect_trace(&trace.events, params))
        .collect()
}

/// Folds detections into the raw (unnormalized) accumulation matrix.
pub(crate) fn sub_contract_accumulate(
    detections: &[Vec<(usize, Vec<(u32, u32)>)>],
    actor_count: usize,
    params: &SubContractParams,
) -> Vec<f64> {
    let mut raw = vec![0.0; actor_count * actor_count];
    for trace_groups in detections {
        for (gap, pairs) in trace_groups {
            let weight = fall_weight(params.beta, *gap);
            for &(performer, intermediate) in pairs {
                raw[performer as usize * actor_count + intermediate as usize] += weight;
            }
        }
    }
    raw
}

/// Divides by the normalization constant; all-zero when `normal` is 0.
pub(crate) fn sub_contract_normalize(raw: Vec<f64>, actor_count: usize, normal: f64) -> Sociogram {
    let mut sociogram = Sociogram::zero(SociogramKind::SubContract, actor_count);
    if normal > 0.0 {
        for (cell, value) in sociogram.values.iter_mut().zip(&raw) {
            *cell = value / normal;
        }
    }
    sociogram.set_normalizer(normal);
    sociogram
}

fn check_actor_ids(traces: &[Trace], actor_count: usize) -> Result<()> {
    for trace in traces {
        for event in &trace.events {
            if event.actor as usize >= actor_count {
                return Err(Error::ActorIdOutOfRange {
                    id: event.actor as usize,
                    count: actor_count,
                });
            }
        }
    }
    Ok(())
}

/// Sub-contract sociogram of a list of traces.
///
/// For every trace of at least 3 events and every processed gap `k`, a
/// bounding pair is two events `k` positions apart performed by the same
/// actor (optionally with different activities); every strictly
/// intermediate event's actor is subcontracted to. Within one
/// `(trace, k)` a pair counts once; contributions weigh `beta^(k-2)`; the
/// accumulated matrix is divided by the sum of weights over all processed
/// `(trace, k)` pairs, and is all-zero when that sum is 0.
pub fn sub_contract(
    traces: &[Trace],
    actor_count: usize,
    params: &SubContractParams,
) -> Result<Sociogram> {
    params.validate()?;
    check_actor_ids(traces, actor_count)?;
    let normal = sub_contract_normal(traces, params);
    let detections = sub_contract_detect(traces, params);
    let raw = sub_contract_accumulate(&detections, actor_count, params);
    Ok(sub_contract_normalize(raw, actor_count, normal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::event_log::EventLog;
    use crate::sample::{sample_log, SAMPLE_NORMAL};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn sample_matrix_counts() {
        let matrix = ActorActivityMatrix::from_log(&sample_log());
        let expect = |actor: &str, activity: &str, count: u64| {
            assert_eq!(
                matrix.count_by_names(actor, activity),
                Some(count),
                "{actor}/{activity}"
            );
        };
        expect("Matt", "A", 2);
        expect("Matt", "B", 0);
        expect("Matt", "E", 3);
        expect("Brad", "A", 4);
        expect("Brad", "B", 1);
        expect("Brad", "E", 1);
        expect("George", "D", 2);
        expect("George", "A", 0);
        assert_eq!(matrix.total(), 19);
    }

    #[test]
    fn single_event_matrix() {
        let log = EventLog::from_triples([("1", "A", "x")]);
        let matrix = ActorActivityMatrix::from_log(&log);
        assert_eq!(matrix.actor_count(), 1);
        assert_eq!(matrix.activity_count(), 1);
        assert_eq!(matrix.count(0, 0), 1);
    }

    #[test]
    fn cosine_known_values() {
        let matt = [2.0, 0.0, 0.0, 0.0, 3.0];
        let brad = [4.0, 1.0, 0.0, 0.0, 1.0];
        let britney = [0.0, 3.0, 0.0, 0.0, 1.0];
        let joan = [0.0, 1.0, 1.0, 0.0, 0.0];
        assert!((cosine_similarity(&matt, &brad).unwrap() - 0.719).abs() < 1e-3);
        assert!((cosine_similarity(&britney, &joan).unwrap() - 0.671).abs() < 1e-3);
        assert!((cosine_similarity(&matt, &britney).unwrap() - 0.263).abs() < 1e-3);
    }

    #[test]
    fn cosine_identity_orthogonal_and_zero() {
        let v = [2.0, 3.0];
        assert!(close(cosine_similarity(&v, &v).unwrap(), 1.0));
        assert!(close(
            cosine_similarity(&[1.0, 0.0], &[0.0, 1.0]).unwrap(),
            0.0
        ));
        assert!(close(cosine_similarity(&[0.0], &[5.0]).unwrap(), 0.0));
        assert!(matches!(
            cosine_similarity(&[1.0], &[1.0, 2.0]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn similar_task_on_sample() {
        let log = sample_log();
        let matrix = ActorActivityMatrix::from_log(&log);
        let sociogram = similar_task(&matrix);
        let id = |name: &str| log.actors().id(name).unwrap() as usize;
        let value = |a: &str, b: &str| sociogram.get(id(a), id(b));
        assert!((value("Matt", "Britney") - 0.263).abs() < 1e-3);
        assert!((value("Brad", "Joan") - 0.167).abs() < 1e-3);
        assert!((value("Matt", "Joan")).abs() < 1e-3);
        for other in ["Matt", "Britney", "Brad", "Joan"] {
            assert!(value("George", other).abs() < 1e-3);
        }
    }

    #[test]
    fn similar_task_single_actor_is_zero() {
        let log = EventLog::from_triples([("1", "A", "solo")]);
        let sociogram = similar_task(&ActorActivityMatrix::from_log(&log));
        assert_eq!(sociogram.len(), 1);
        assert_eq!(sociogram.get(0, 0), 0.0);
    }

    #[test]
    fn identical_rows_have_similarity_one() {
        let matrix = ActorActivityMatrix::from_rows(
            &["p", "q"],
            &["x", "y"],
            &[vec![2, 3], vec![2, 3]],
        );
        let sociogram = similar_task(&matrix);
        assert!(close(sociogram.get(0, 1), 1.0));
    }

    #[test]
    fn gap_range_follows_depth_and_size() {
        let params = SubContractParams::default(); // depth 5
        assert_eq!(processed_gaps(2, &params), 2..2);
        assert_eq!(processed_gaps(3, &params), 2..3);
        assert_eq!(processed_gaps(4, &params), 2..4);
        assert_eq!(processed_gaps(5, &params), 2..6);
        assert_eq!(processed_gaps(10, &params), 2..6);

        let shallow = SubContractParams::new(0.5, 1).unwrap();
        assert_eq!(processed_gaps(10, &shallow), 2..3);

        let inclusive = SubContractParams {
            experimental: Experimental {
                inclusive_k: true,
                unbounded_gap: false,
            },
            ..SubContractParams::default()
        };
        assert_eq!(processed_gaps(3, &inclusive), 2..4);

        let unbounded = SubContractParams {
            experimental: Experimental {
                inclusive_k: false,
                unbounded_gap: true,
            },
            ..SubContractParams::default()
        };
        assert_eq!(processed_gaps(10, &unbounded), 2..10);
    }

    #[test]
    fn short_traces_yield_zero_matrix() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "y"), ("2", "A", "x")]);
        let sociogram = sub_contract(
            &log.group_by_case(),
            log.actors().len(),
            &SubContractParams::default(),
        )
        .unwrap();
        assert!(sociogram.values().iter().all(|&v| v == 0.0));
        assert_eq!(sociogram.normalizer(), Some(0.0));
    }

    #[test]
    fn direct_subcontraction_on_a_three_event_trace() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "y"), ("1", "C", "x")]);
        let params = SubContractParams::new(0.5, 1).unwrap();
        let sociogram = sub_contract(&log.group_by_case(), 2, &params).unwrap();
        assert!(close(sociogram.get(0, 1), 1.0));
        assert!(close(sociogram.normalizer().unwrap(), 1.0));
    }

    #[test]
    fn sample_sub_contract_values() {
        let log = sample_log();
        let sociogram = sub_contract(
            &log.group_by_case(),
            log.actors().len(),
            &SubContractParams::default(),
        )
        .unwrap();
        let id = |name: &str| log.actors().id(name).unwrap() as usize;
        assert!(close(sociogram.normalizer().unwrap(), SAMPLE_NORMAL));
        let expected = 1.0 / SAMPLE_NORMAL;
        assert!(close(sociogram.get(id("Matt"), id("Britney")), expected));
        assert!(close(sociogram.get(id("Brad"), id("Matt")), expected));
        assert!(close(sociogram.get(id("Brad"), id("Joan")), expected));
        let nonzero = sociogram.values().iter().filter(|&&v| v != 0.0).count();
        assert_eq!(nonzero, 3);
    }

    // Variant of the sample with the case-4 closing event performed by
    // Brad instead of Britney: one more bounding pair, one more entry.
    #[test]
    fn sub_contract_with_bounding_pair_in_case_four() {
        let rows = [
            ("1", "A", "Matt"),
            ("2", "A", "Matt"),
            ("1", "B", "Britney"),
            ("1", "E", "Matt"),
            ("2", "E", "Matt"),
            ("2", "B", "Britney"),
            ("3", "A", "Brad"),
            ("3", "E", "Matt"),
            ("4", "A", "Brad"),
            ("5", "A", "Brad"),
            ("3", "B", "Brad"),
            ("4", "B", "Britney"),
            ("4", "E", "Brad"),
            ("6", "A", "Brad"),
            ("5", "B", "Joan"),
            ("6", "C", "Joan"),
            ("5", "E", "Brad"),
            ("1", "D", "George"),
            ("6", "D", "George"),
        ];
        let log = EventLog::from_triples(rows);
        let sociogram = sub_contract(
            &log.group_by_case(),
            log.actors().len(),
            &SubContractParams::default(),
        )
        .unwrap();
        let id = |name: &str| log.actors().id(name).unwrap() as usize;
        let expected = 1.0 / 6.5;
        assert!(close(sociogram.normalizer().unwrap(), 6.5));
        assert!(close(sociogram.get(id("Matt"), id("Britney")), expected));
        assert!(close(sociogram.get(id("Brad"), id("Matt")), expected));
        assert!(close(sociogram.get(id("Brad"), id("Britney")), expected));
        assert!(close(sociogram.get(id("Brad"), id("Joan")), expected));
        let nonzero = sociogram.values().iter().filter(|&&v| v != 0.0).count();
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn distinct_activity_flag_suppresses_equal_bounds() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "y"), ("1", "A", "x")]);
        let mut params = SubContractParams::default();
        params.require_distinct_activities = true;
        let sociogram = sub_contract(&log.group_by_case(), 2, &params).unwrap();
        assert!(sociogram.values().iter().all(|&v| v == 0.0));
        // The (trace, gap) pair is still processed, so normal is 1.
        assert!(close(sociogram.normalizer().unwrap(), 1.0));
    }

    #[test]
    fn self_subcontraction_is_kept_as_computed() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "x"), ("1", "C", "x")]);
        let sociogram =
            sub_contract(&log.group_by_case(), 1, &SubContractParams::default()).unwrap();
        assert!(close(sociogram.get(0, 0), 1.0));
    }

    #[test]
    fn actor_id_out_of_range_is_rejected() {
        let log = EventLog::from_triples([("1", "A", "x"), ("1", "B", "y"), ("1", "C", "x")]);
        let err = sub_contract(&log.group_by_case(), 1, &SubContractParams::default());
        assert!(matches!(err, Err(Error::ActorIdOutOfRange { id: 1, count: 1 })));
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(SubContractParams::new(1.5, 5).is_err());
        assert!(SubContractParams::new(-0.1, 5).is_err());
        assert!(SubContractParams::new(0.5, 0).is_err());
        assert!(SubContractParams::new(0.0, 1).is_ok());
    }
}
