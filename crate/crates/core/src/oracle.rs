//! Brute-force validator for the sub-contract metric.
//!
//! Deliberately re-derives the definition from scratch — its own gap-range
//! arithmetic, full-position enumeration, set-based deduplication — so a
//! bug in the incremental implementation cannot hide here too. Use it to
//! cross-check [`crate::metrics::sub_contract`], never in production paths:
//! it refuses inputs over 10,000 events.

use crate::event_log::Trace;
use crate::metrics::{Sociogram, SociogramKind, SubContractParams};
use crate::{Error, Result};
use std::collections::BTreeSet;

const EVENT_LIMIT: usize = 10_000;

fn gaps_for(size: usize, params: &SubContractParams) -> Vec<usize> {
    if size < 3 {
        return Vec::new();
    }
    let depth = if params.experimental.unbounded_gap {
        usize::MAX - 1
    } else {
        params.depth
    };
    let mut min_k = if size < depth { size } else { depth + 1 };
    if min_k < 3 {
        min_k = 3;
    }
    let last = if params.experimental.inclusive_k {
        min_k
    } else {
        min_k - 1
    };
    (2..=last).collect()
}

/// Computes the sub-contract sociogram by explicit enumeration of every
/// `(trace, gap, bounding position, intermediate position)` tuple.
pub fn sub_contract_oracle(
    traces: &[Trace],
    actor_count: usize,
    params: &SubContractParams,
) -> Result<Sociogram> {
    params.validate()?;
    let events: usize = traces.iter().map(Trace::len).sum();
    if events > EVENT_LIMIT {
        return Err(Error::OracleInputTooLarge {
            events,
            limit: EVENT_LIMIT,
        });
    }
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

    let mut normal = 0.0;
    for trace in traces {
        for gap in gaps_for(trace.len(), params) {
            normal += params.beta.powi(gap as i32 - 2);
        }
    }

    let mut raw = vec![0.0; actor_count * actor_count];
    for trace in traces {
        let events = &trace.events;
        let size = events.len();
        for gap in gaps_for(size, params) {
            let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();
            for i in 0..size {
                for j in 0..size {
                    if i + gap >= size || j <= i || j >= i + gap {
                        continue;
                    }
                    let first = events[i];
                    let last = events[i + gap];
                    if first.actor != last.actor {
                        continue;
                    }
                    if params.require_distinct_activities && first.activity == last.activity {
                        continue;
                    }
                    seen.insert((first.actor, events[j].actor));
                }
            }
            let weight = params.beta.powi(gap as i32 - 2);
            for (performer, intermediate) in seen {
                raw[performer as usize * actor_count + intermediate as usize] += weight;
            }
        }
    }

    let mut sociogram = Sociogram::zero(SociogramKind::SubContract, actor_count);
    if normal > 0.0 {
        for (idx, value) in raw.iter().enumerate() {
            sociogram.set(idx / actor_count, idx % actor_count, value / normal);
        }
    }
    sociogram.set_normalizer(normal);
    Ok(sociogram)
}
