//! A small bundled ticketing log used by the docs, demos, and tests.
//!
//! Six cases, five actors, five activities, nineteen events. Small enough
//! to check every derived number by hand: Matt performs A twice and E
//! three times, George only ever performs D, and the sub-contract
//! normalization constant works out to 6.5 at the default parameters
//! (five 3-event cases contribute 1 each, the 4-event case 1 + 0.5).

use crate::event_log::{parse_csv, ColumnMap, EventLog, ParseOptions};

/// The bundled log as headered CSV.
pub const SAMPLE_LOG_CSV: &str = "\
case,activity,actor
1,A,Matt
2,A,Matt
1,B,Britney
1,E,Matt
2,E,Matt
2,B,Britney
3,A,Brad
3,E,Matt
4,A,Brad
5,A,Brad
3,B,Brad
4,B,Britney
4,E,Britney
6,A,Brad
5,B,Joan
6,C,Joan
5,E,Brad
1,D,George
6,D,George
";

/// Sub-contract normalization constant of the sample at default params.
pub const SAMPLE_NORMAL: f64 = 6.5;

/// Parses [`SAMPLE_LOG_CSV`].
pub fn sample_log() -> EventLog {
    parse_csv(
        SAMPLE_LOG_CSV.as_bytes(),
        &ColumnMap::by_names("case", "activity", "actor"),
        &ParseOptions::default(),
    )
    .expect("bundled sample parses")
    .log
}
