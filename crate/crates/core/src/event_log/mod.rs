//! Event-log model: events, traces, dense name indexes, grouping, chunking.
//!
//! An event log is an ordered list of `(case, activity, actor)` records.
//! Names are interned to dense integer ids at construction so every
//! downstream matrix is a plain integer-indexed array; the bijections stay
//! available for labeling output. Event order is appearance order in the
//! source (see [`parse`] for the opt-in timestamp sort).

mod parse;

pub use parse::{
    parse_csv, write_csv, ColumnMap, ColumnRef, ParseOptions, ParseOutcome,
};

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Bijection between names and dense ids `0..len`, in first-appearance order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Interner {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl Interner {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `name`, inserting it if unseen.
    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    /// Panics if `id` was never issued.
    pub fn name(&self, id: u32) -> &str {
        &self.names[id as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Names in dense-id order.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.names.clone()
    }
}

/// One audit-trail entry. Fields are dense ids into the owning
/// [`EventLog`]'s interners; `seq` is the 0-based position of the event in
/// the source, unique and strictly increasing in log order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Event {
    pub case: u32,
    pub activity: u32,
    pub actor: u32,
    pub seq: u32,
}

/// All events of one case, in log order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub case: u32,
    pub events: Vec<Event>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

/// Whole-log counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogStats {
    pub event_count: usize,
    pub case_count: usize,
    pub unique_actors: usize,
    pub unique_activities: usize,
}

/// Parsed event log with dense case/actor/activity indexes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EventLog {
    events: Vec<Event>,
    cases: Interner,
    actors: Interner,
    activities: Interner,
}

impl EventLog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a log from `(case, activity, actor)` rows in order.
    /// Tokens are trimmed; empty tokens are not allowed.
    pub fn from_triples<I, S>(rows: I) -> EventLog
    where
        I: IntoIterator<Item = (S, S, S)>,
        S: AsRef<str>,
    {
        let mut log = EventLog::new();
        for (i, (case, activity, actor)) in rows.into_iter().enumerate() {
            log.push(
                case.as_ref().trim(),
                activity.as_ref().trim(),
                actor.as_ref().trim(),
                i as u32,
            );
        }
        log
    }

    pub(crate) fn push(&mut self, case: &str, activity: &str, actor: &str, seq: u32) {
        debug_assert!(!case.is_empty() && !activity.is_empty() && !actor.is_empty());
        let event = Event {
            case: self.cases.intern(case),
            activity: self.activities.intern(activity),
            actor: self.actors.intern(actor),
            seq,
        };
        self.events.push(event);
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn cases(&self) -> &Interner {
        &self.cases
    }

    pub fn actors(&self) -> &Interner {
        &self.actors
    }

    pub fn activities(&self) -> &Interner {
        &self.activities
    }

    /// One trace per distinct case, ordered by first appearance; within a
    /// trace, events keep ascending `seq` (grouping is stable).
    pub fn group_by_case(&self) -> Vec<Trace> {
        let mut buckets: Vec<Vec<Event>> = vec![Vec::new(); self.cases.len()];
        for event in &self.events {
            buckets[event.case as usize].push(*event);
        }
        // Case ids are issued in first-appearance order, so bucket order
        // already is trace order.
        buckets
            .into_iter()
            .enumerate()
            .map(|(case, events)| Trace {
                case: case as u32,
                events,
            })
            .collect()
    }

    /// Prefix chunks of the given (strictly increasing) event counts, each
    /// with freshly rebuilt dense indexes.
    pub fn chunk_prefixes(&self, sizes: &[usize]) -> Result<Vec<EventLog>> {
        let total = self.events.len();
        let mut previous = None;
        for &size in sizes {
            if size == 0 || size > total {
                return Err(Error::SizeOutOfRange {
                    size,
                    events: total,
                });
            }
            if let Some(prev) = previous {
                if size <= prev {
                    return Err(Error::InvalidParams(
                        "chunk sizes must be strictly increasing".into(),
                    ));
                }
            }
            previous = Some(size);
        }
        Ok(sizes.iter().map(|&size| self.prefix(size)).collect())
    }

    fn prefix(&self, size: usize) -> EventLog {
        let mut chunk = EventLog::new();
        for event in &self.events[..size] {
            chunk.push(
                self.cases.name(event.case),
                self.activities.name(event.activity),
                self.actors.name(event.actor),
                event.seq,
            );
        }
        chunk
    }

    pub fn stats(&self) -> LogStats {
        LogStats {
            event_count: self.events.len(),
            case_count: self.cases.len(),
            unique_actors: self.actors.len(),
            unique_activities: self.activities.len(),
        }
    }
}
