//! Seeded synthetic log generation for stress tests and benchmarks.

use crate::event_log::EventLog;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shape of a generated log. Events are assigned uniformly at random to
/// cases, actors, and activities, so average trace length is
/// `events / cases`.
#[derive(Clone, Copy, Debug)]
pub struct SyntheticSpec {
    pub events: usize,
    pub cases: usize,
    pub actors: usize,
    pub activities: usize,
    pub seed: u64,
}

impl SyntheticSpec {
    /// A shape that exercises both metrics: ~5 events per case and enough
    /// actor collisions to produce bounding pairs.
    pub fn sized(events: usize, seed: u64) -> Self {
        Self {
            events,
            cases: (events / 5).max(1),
            actors: 50.min(events.max(1)),
            activities: 20.min(events.max(1)),
            seed,
        }
    }
}

/// Generates a log deterministically from `spec.seed`.
pub fn synthetic_log(spec: &SyntheticSpec) -> EventLog {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let rows = (0..spec.events).map(|_| {
        (
            format!("c{}", rng.gen_range(0..spec.cases)),
            format!("t{}", rng.gen_range(0..spec.activities)),
            format!("p{}", rng.gen_range(0..spec.actors)),
        )
    });
    EventLog::from_triples(rows)
}
