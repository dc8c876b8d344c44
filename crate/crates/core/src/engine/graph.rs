//! Property-graph engine.
//!
//! Similar-task mode keeps one node per unique actor and activity linked
//! by `PERFORMS {times}` edges; similarity is computed by traversing each
//! actor's adjacency, intersecting activities for the dot product, taking
//! the norms over each actor's full `times` list, and merging an
//! undirected `SIMILARITY {similarity}` edge per pair that shares work.
//!
//! Sub-contract mode keeps one `Case` node per case (name plus a running
//! occurrence counter) and one `Person` node per event
//! (`name, occ_id, activity`) under `CONTAINS` edges. Detection walks each
//! case's occurrence list, merging a `RELATED_TO {value, length}` edge
//! from the bounding start occurrence to every strictly intermediate
//! occurrence. The fold materializes `UniqueActor` nodes and accumulates
//! `SUBCONTRACT {strength}` edges, collapsing repeated pairs within one
//! `(case, gap)` group to a single contribution, then divides strengths
//! by the normalization constant.

use super::pgraph::{EdgeType, NodeId, NodeLabel, PropValue, PropertyGraph};
use super::{Algorithm, Engine, EngineKind, StorageReport};
use crate::event_log::EventLog;
use crate::metrics::{
    fall_weight, processed_gaps, Sociogram, SociogramKind, SubContractParams,
};
use crate::timing::{Phase, PhaseRecorder, PhaseTiming};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};

const NODE_BYTES: u64 = 15;
const RELATIONSHIP_BYTES: u64 = 33;
const PROPERTY_BYTES: u64 = 41;

#[derive(Default)]
pub struct GraphEngine {
    store: PropertyGraph,
    mode: Option<Algorithm>,
    recorder: PhaseRecorder,
    /// Dense actor ids of the source log, for sociogram assembly.
    dense_ids: HashMap<String, u32>,
    actor_count: usize,
    /// Actor nodes in creation order (similar mode).
    actor_nodes: Vec<NodeId>,
    actor_lookup: HashMap<String, NodeId>,
    activity_lookup: HashMap<String, NodeId>,
    /// Case nodes in creation order (sub-contract mode).
    case_nodes: Vec<NodeId>,
    case_lookup: HashMap<String, NodeId>,
    unique_actor_lookup: HashMap<String, NodeId>,
    normalizer: f64,
}

impl GraphEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self) {
        self.store.clear();
        self.mode = None;
        self.recorder.clear();
        self.dense_ids.clear();
        self.actor_count = 0;
        self.actor_nodes.clear();
        self.actor_lookup.clear();
        self.activity_lookup.clear();
        self.case_nodes.clear();
        self.case_lookup.clear();
        self.unique_actor_lookup.clear();
        self.normalizer = 0.0;
    }

    fn require(&self, requested: Algorithm) -> Result<()> {
        match self.mode {
            None => Err(Error::NotLoaded),
            Some(loaded) if loaded != requested => Err(Error::WrongMode { loaded, requested }),
            Some(_) => Ok(()),
        }
    }

    fn load_similar(&mut self, log: &EventLog) {
        for event in log.events() {
            let actor_name = log.actors().name(event.actor);
            let activity_name = log.activities().name(event.activity);

            let actor = match self.actor_lookup.get(actor_name) {
                Some(&id) => id,
                None => {
                    let id = self.store.add_node(
                        NodeLabel::Actor,
                        vec![("name", PropValue::Str(actor_name.to_owned()))],
                    );
                    self.actor_lookup.insert(actor_name.to_owned(), id);
                    self.actor_nodes.push(id);
                    id
                }
            };
            let activity = match self.activity_lookup.get(activity_name) {
                Some(&id) => id,
                None => {
                    let id = self.store.add_node(
                        NodeLabel::Activity,
                        vec![("name", PropValue::Str(activity_name.to_owned()))],
                    );
                    self.activity_lookup.insert(activity_name.to_owned(), id);
                    id
                }
            };

            match self
                .store
                .find_out_edge(actor, EdgeType::Performs, |edge| edge.to == activity)
            {
                Some(edge) => {
                    let props = &mut self.store.edge_mut(edge).props;
                    let times = PropertyGraph::prop(props, "times").unwrap().as_int();
                    PropertyGraph::set_prop(props, "times", PropValue::Int(times + 1));
                }
                None => {
                    self.store.add_edge(
                        EdgeType::Performs,
                        actor,
                        activity,
                        vec![("times", PropValue::Int(1))],
                    );
                }
            }
        }
    }

    fn load_sub_contract(&mut self, log: &EventLog) {
        for event in log.events() {
            let case_name = log.cases().name(event.case);
            let case = match self.case_lookup.get(case_name) {
                Some(&id) => id,
                None => {
                    let id = self.store.add_node(
                        NodeLabel::Case,
                        vec![
                            ("name", PropValue::Str(case_name.to_owned())),
                            ("occ_counter", PropValue::Int(0)),
                        ],
                    );
                    self.case_lookup.insert(case_name.to_owned(), id);
                    self.case_nodes.push(id);
                    id
                }
            };

            let occ = {
                let props = &self.store.node(case).props;
                PropertyGraph::prop(props, "occ_counter").unwrap().as_int()
            };
            let person = self.store.add_node(
                NodeLabel::Person,
                vec![
                    (
                        "name",
                        PropValue::Str(log.actors().name(event.actor).to_owned()),
                    ),
                    ("occ_id", PropValue::Int(occ)),
                    (
                        "activity",
                        PropValue::Str(log.activities().name(event.activity).to_owned()),
                    ),
                ],
            );
            self.store
                .add_edge(EdgeType::Contains, case, person, Vec::new());
            PropertyGraph::set_prop(
                &mut self.store.node_mut(case).props,
                "occ_counter",
                PropValue::Int(occ + 1),
            );
        }
    }

    /// Person occurrences of a case, in occurrence order (the `CONTAINS`
    /// adjacency list is built in event order).
    fn occurrences(&self, case: NodeId) -> Vec<NodeId> {
        self.store
            .out_edges(case)
            .filter(|(_, edge)| edge.ty == EdgeType::Contains)
            .map(|(_, edge)| edge.to)
            .collect()
    }

    fn node_name(&self, node: NodeId) -> &str {
        PropertyGraph::prop(&self.store.node(node).props, "name")
            .unwrap()
            .as_str()
    }

    fn person_activity(&self, person: NodeId) -> &str {
        PropertyGraph::prop(&self.store.node(person).props, "activity")
            .unwrap()
            .as_str()
    }

    fn dense_id(&self, name: &str) -> usize {
        self.dense_ids[name] as usize
    }
}

impl Engine for GraphEngine {
    fn kind(&self) -> EngineKind {
        EngineKind::Graph
    }

    fn load(&mut self, log: &EventLog, algorithm: Algorithm) -> Result<()> {
        self.reset();
        for (id, name) in log.actors().names().enumerate() {
            self.dense_ids.insert(name.to_owned(), id as u32);
        }
        self.actor_count = log.actors().len();
        self.recorder.record(Phase::Load, || match algorithm {
            Algorithm::SimilarTask => self.load_similar(log),
            Algorithm::SubContract => self.load_sub_contract(log),
        });
        self.mode = Some(algorithm);
        Ok(())
    }

    fn build_similar_task(&mut self) -> Result<Sociogram> {
        self.require(Algorithm::SimilarTask)?;

        struct PairValue {
            first: NodeId,
            second: NodeId,
            value: f64,
            shares_work: bool,
        }

        let pairs = self.recorder.record(Phase::ComputeSimilarity, || {
            let profiles: Vec<Vec<(NodeId, f64)>> = self
                .actor_nodes
                .iter()
                .map(|&actor| {
                    self.store
                        .out_edges(actor)
                        .filter(|(_, edge)| edge.ty == EdgeType::Performs)
                        .map(|(_, edge)| {
                            let times =
                                PropertyGraph::prop(&edge.props, "times").unwrap().as_int();
                            (edge.to, times as f64)
                        })
                        .collect()
                })
                .collect();
            let norms_sq: Vec<f64> = profiles
                .iter()
                .map(|profile| profile.iter().map(|(_, t)| t * t).sum())
                .collect();

            let mut pairs = Vec::new();
            for i in 0..self.actor_nodes.len() {
                for j in (i + 1)..self.actor_nodes.len() {
                    let second: HashMap<NodeId, f64> = profiles[j].iter().copied().collect();
                    let mut dot = 0.0;
                    for (activity, times) in &profiles[i] {
                        if let Some(other) = second.get(activity) {
                            dot += times * other;
                        }
                    }
                    let value = if norms_sq[i] == 0.0 || norms_sq[j] == 0.0 {
                        0.0
                    } else {
                        (dot / (norms_sq[i].sqrt() * norms_sq[j].sqrt())).clamp(0.0, 1.0)
                    };
                    pairs.push(PairValue {
                        first: self.actor_nodes[i],
                        second: self.actor_nodes[j],
                        value,
                        shares_work: dot > 0.0,
                    });
                }
            }
            pairs
        });

        self.recorder.record(Phase::WriteResult, || {
            for pair in &pairs {
                if !pair.shares_work {
                    continue;
                }
                // Undirected merge: look for the edge from either endpoint.
                let existing = self
                    .store
                    .find_out_edge(pair.first, EdgeType::Similarity, |e| e.to == pair.second)
                    .or_else(|| {
                        self.store
                            .find_out_edge(pair.second, EdgeType::Similarity, |e| {
                                e.to == pair.first
                            })
                    });
                match existing {
                    Some(edge) => PropertyGraph::set_prop(
                        &mut self.store.edge_mut(edge).props,
                        "similarity",
                        PropValue::Float(pair.value),
                    ),
                    None => {
                        self.store.add_edge(
                            EdgeType::Similarity,
                            pair.first,
                            pair.second,
                            vec![("similarity", PropValue::Float(pair.value))],
                        );
                    }
                }
            }
        });

        let mut sociogram = Sociogram::zero(SociogramKind::SimilarTask, self.actor_count);
        for edge in self.store.edges() {
            if edge.ty != EdgeType::Similarity {
                continue;
            }
            let value = PropertyGraph::prop(&edge.props, "similarity")
                .unwrap()
                .as_float();
            let a = self.dense_id(self.node_name(edge.from));
            let b = self.dense_id(self.node_name(edge.to));
            sociogram.set(a, b, value);
            sociogram.set(b, a, value);
        }
        Ok(sociogram)
    }

    fn build_sub_contract(&mut self, params: &SubContractParams) -> Result<Sociogram> {
        self.require(Algorithm::SubContract)?;
        params.validate()?;

        let normal = self.recorder.record(Phase::UpdateNormal, || {
            let mut normal = 0.0;
            for &case in &self.case_nodes {
                let size = self.store.node(case).out.len();
                for gap in processed_gaps(size, params) {
                    normal += fall_weight(params.beta, gap);
                }
            }
            normal
        });
        self.normalizer = normal;

        self.recorder.record(Phase::Detection, || {
            for case_index in 0..self.case_nodes.len() {
                let case = self.case_nodes[case_index];
                let occurrences = self.occurrences(case);
                let size = occurrences.len();
                for gap in processed_gaps(size, params) {
                    for i in 0..size.saturating_sub(gap) {
                        let start = occurrences[i];
                        let end = occurrences[i + gap];
                        if self.node_name(start) != self.node_name(end) {
                            continue;
                        }
                        if params.require_distinct_activities
                            && self.person_activity(start) == self.person_activity(end)
                        {
                            continue;
                        }
                        for j in (i + 1)..(i + gap) {
                            let intermediate = occurrences[j];
                            let exists = self
                                .store
                                .find_out_edge(start, EdgeType::RelatedTo, |e| {
                                    e.to == intermediate
                                        && PropertyGraph::prop(&e.props, "length")
                                            .unwrap()
                                            .as_int()
                                            == gap as i64
                                })
                                .is_some();
                            if !exists {
                                self.store.add_edge(
                                    EdgeType::RelatedTo,
                                    start,
                                    intermediate,
                                    vec![
                                        ("value", PropValue::Int(1)),
                                        ("length", PropValue::Int(gap as i64)),
                                    ],
                                );
                            }
                        }
                    }
                }
            }
        });

        self.recorder.record(Phase::UpdateResult, || {
            // Unique actor nodes for every distinct person name, in first
            // appearance order.
            let person_names: Vec<String> = self
                .store
                .nodes()
                .filter(|(_, node)| node.label == NodeLabel::Person)
                .map(|(_, node)| {
                    PropertyGraph::prop(&node.props, "name")
                        .unwrap()
                        .as_str()
                        .to_owned()
                })
                .collect();
            for name in person_names {
                if !self.unique_actor_lookup.contains_key(&name) {
                    let id = self.store.add_node(
                        NodeLabel::UniqueActor,
                        vec![("name", PropValue::Str(name.clone()))],
                    );
                    self.unique_actor_lookup.insert(name, id);
                }
            }

            // Strengths are recomputed from scratch on every build.
            for edge in self.store.edges_mut() {
                if edge.ty == EdgeType::Subcontract {
                    PropertyGraph::set_prop(&mut edge.props, "strength", PropValue::Float(0.0));
                }
            }

            for case_index in 0..self.case_nodes.len() {
                let case = self.case_nodes[case_index];
                // Pairs grouped by gap; within one (case, gap) group a
                // pair contributes once.
                let mut by_gap: BTreeMap<usize, Vec<(NodeId, NodeId)>> = BTreeMap::new();
                for person in self.occurrences(case) {
                    for (_, edge) in self.store.out_edges(person) {
                        if edge.ty != EdgeType::RelatedTo {
                            continue;
                        }
                        let gap =
                            PropertyGraph::prop(&edge.props, "length").unwrap().as_int() as usize;
                        let from = self.unique_actor_lookup[self.node_name(edge.from)];
                        let to = self.unique_actor_lookup[self.node_name(edge.to)];
                        by_gap.entry(gap).or_default().push((from, to));
                    }
                }
                for (gap, mut pairs) in by_gap {
                    pairs.sort_unstable_by_key(|(a, b)| (a.0, b.0));
                    pairs.dedup();
                    let weight = fall_weight(params.beta, gap);
                    for (from, to) in pairs {
                        match self
                            .store
                            .find_out_edge(from, EdgeType::Subcontract, |e| e.to == to)
                        {
                            Some(edge) => {
                                let props = &mut self.store.edge_mut(edge).props;
                                let strength =
                                    PropertyGraph::prop(props, "strength").unwrap().as_float();
                                PropertyGraph::set_prop(
                                    props,
                                    "strength",
                                    PropValue::Float(strength + weight),
                                );
                            }
                            None => {
                                self.store.add_edge(
                                    EdgeType::Subcontract,
                                    from,
                                    to,
                                    vec![("strength", PropValue::Float(weight))],
                                );
                            }
                        }
                    }
                }
            }
        });

        self.recorder.record(Phase::Normalize, || {
            if normal > 0.0 {
                for edge in self.store.edges_mut() {
                    if edge.ty != EdgeType::Subcontract {
                        continue;
                    }
                    let strength = PropertyGraph::prop(&edge.props, "strength")
                        .unwrap()
                        .as_float();
                    PropertyGraph::set_prop(
                        &mut edge.props,
                        "strength",
                        PropValue::Float(strength / normal),
                    );
                }
            }
        });

        let mut sociogram = Sociogram::zero(SociogramKind::SubContract, self.actor_count);
        for edge in self.store.edges() {
            if edge.ty != EdgeType::Subcontract {
                continue;
            }
            let value = PropertyGraph::prop(&edge.props, "strength")
                .unwrap()
                .as_float();
            let from = self.dense_id(self.node_name(edge.from));
            let to = self.dense_id(self.node_name(edge.to));
            sociogram.set(from, to, value);
        }
        sociogram.set_normalizer(normal);
        Ok(sociogram)
    }

    fn phase_timings(&self) -> Vec<PhaseTiming> {
        self.recorder.timings().to_vec()
    }

    fn storage_report(&self) -> StorageReport {
        StorageReport::from_entries(vec![
            ("nodes", self.store.node_count() as u64 * NODE_BYTES),
            (
                "relationships",
                self.store.edge_count() as u64 * RELATIONSHIP_BYTES,
            ),
            (
                "properties",
                self.store.property_count() as u64 * PROPERTY_BYTES,
            ),
        ])
    }
}
