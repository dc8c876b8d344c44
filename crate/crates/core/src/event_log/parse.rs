//! Delimited-text ingestion and serialization.
//!
//! Quoting follows RFC-4180 conventions (handled by the `csv` crate);
//! fields are trimmed after extraction. A malformed row is fatal by
//! default and skippable under lenient mode, which reports how many rows
//! were dropped. The optional timestamp sort re-orders events before ids
//! are assigned, for logs that are not already in execution order.

use super::EventLog;
use crate::{Error, Result};
use std::io::{Read, Write};

/// How to locate a field: by header name or by 0-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnRef {
    Name(String),
    Index(usize),
}

impl ColumnRef {
    fn resolve(&self, header: Option<&csv::StringRecord>) -> Result<usize> {
        match self {
            ColumnRef::Index(i) => Ok(*i),
            ColumnRef::Name(name) => {
                let header = header.ok_or_else(|| {
                    Error::InvalidSchema(format!(
                        "column {name:?} is mapped by name but the input has no header"
                    ))
                })?;
                header
                    .iter()
                    .position(|h| h.trim() == name)
                    .ok_or_else(|| Error::MissingColumn(name.clone()))
            }
        }
    }
}

/// Column mapping for the three log fields plus an optional timestamp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMap {
    pub case: ColumnRef,
    pub activity: ColumnRef,
    pub actor: ColumnRef,
    pub timestamp: Option<ColumnRef>,
}

impl ColumnMap {
    pub fn by_names(case: &str, activity: &str, actor: &str) -> Self {
        Self {
            case: ColumnRef::Name(case.into()),
            activity: ColumnRef::Name(activity.into()),
            actor: ColumnRef::Name(actor.into()),
            timestamp: None,
        }
    }

    pub fn by_indices(case: usize, activity: usize, actor: usize) -> Self {
        Self {
            case: ColumnRef::Index(case),
            activity: ColumnRef::Index(activity),
            actor: ColumnRef::Index(actor),
            timestamp: None,
        }
    }

    /// Mapping for the BPI Challenge 2014 "Detail Incident Activity" file
    /// (`Incident_ID` / `IncidentActivity_Type` / `Assignment_Group`,
    /// semicolon-delimited).
    pub fn bpi2014() -> Self {
        Self::by_names("Incident_ID", "IncidentActivity_Type", "Assignment_Group")
    }
}

/// Parser knobs; the defaults match a headered comma-separated file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub delimiter: u8,
    pub has_header: bool,
    /// Skip malformed rows instead of failing, counting them.
    pub lenient: bool,
    /// Re-order events by the mapped timestamp column before assigning
    /// sequence numbers (stable for ties).
    pub sort_by_timestamp: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            delimiter: b',',
            has_header: true,
            lenient: false,
            sort_by_timestamp: false,
        }
    }
}

/// A parsed log plus the number of rows dropped under lenient mode.
#[derive(Clone, Debug)]
pub struct ParseOutcome {
    pub log: EventLog,
    pub skipped_rows: usize,
}

/// Accepts integer epoch milliseconds, RFC 3339, and two common
/// `datetime` layouts (`2014-01-07 08:17:17`, `07-01-2014 08:17:17`).
fn parse_timestamp(text: &str) -> Option<i64> {
    if let Ok(millis) = text.parse::<i64>() {
        return Some(millis);
    }
    if let Ok(dt) = chrono::DateTime::parse_from_rfc3339(text) {
        return Some(dt.timestamp_millis());
    }
    for format in ["%Y-%m-%d %H:%M:%S%.f", "%d-%m-%Y %H:%M:%S%.f"] {
        if let Ok(naive) = chrono::NaiveDateTime::parse_from_str(text, format) {
            return Some(naive.and_utc().timestamp_millis());
        }
    }
    None
}

/// Parses a delimited event log into an [`EventLog`].
pub fn parse_csv(
    reader: impl Read,
    columns: &ColumnMap,
    options: &ParseOptions,
) -> Result<ParseOutcome> {
    if options.sort_by_timestamp && columns.timestamp.is_none() {
        return Err(Error::InvalidSchema(
            "sort_by_timestamp requires a timestamp column mapping".into(),
        ));
    }

    let mut csv_reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(options.has_header)
        .flexible(true)
        .from_reader(reader);

    let header = if options.has_header {
        let record = csv_reader
            .headers()
            .map_err(|e| Error::InvalidSchema(format!("unreadable header: {e}")))?
            .clone();
        if record.is_empty() || (record.len() == 1 && record[0].trim().is_empty()) {
            return Err(Error::EmptyLog);
        }
        Some(record)
    } else {
        None
    };

    let case_col = columns.case.resolve(header.as_ref())?;
    let activity_col = columns.activity.resolve(header.as_ref())?;
    let actor_col = columns.actor.resolve(header.as_ref())?;
    let timestamp_col = match &columns.timestamp {
        Some(c) if options.sort_by_timestamp => Some(c.resolve(header.as_ref())?),
        _ => None,
    };
    if case_col == activity_col || case_col == actor_col || activity_col == actor_col {
        return Err(Error::InvalidSchema(
            "case, activity, and actor must map to three distinct columns".into(),
        ));
    }

    struct RawRow {
        case: String,
        activity: String,
        actor: String,
        timestamp: i64,
        ordinal: u32,
    }

    let mut rows: Vec<RawRow> = Vec::new();
    let mut skipped = 0usize;
    let mut record = csv::StringRecord::new();
    let mut ordinal: u32 = 0;
    loop {
        let more = csv_reader
            .read_record(&mut record)
            .map_err(|e| malformed(&record, ordinal, e.to_string()))?;
        if !more {
            break;
        }
        let row_ordinal = ordinal;
        ordinal += 1;

        let extract = |col: usize, role: &str| -> Result<String> {
            let raw = record
                .get(col)
                .ok_or_else(|| malformed(&record, row_ordinal, format!("missing {role} field (column {col})")))?;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                return Err(malformed(&record, row_ordinal, format!("empty {role} field")));
            }
            Ok(trimmed.to_owned())
        };

        let parsed = (|| -> Result<RawRow> {
            let case = extract(case_col, "case")?;
            let activity = extract(activity_col, "activity")?;
            let actor = extract(actor_col, "actor")?;
            let timestamp = match timestamp_col {
                None => 0,
                Some(col) => {
                    let text = extract(col, "timestamp")?;
                    parse_timestamp(&text).ok_or_else(|| {
                        malformed(&record, row_ordinal, format!("unparseable timestamp {text:?}"))
                    })?
                }
            };
            Ok(RawRow {
                case,
                activity,
                actor,
                timestamp,
                ordinal: row_ordinal,
            })
        })();

        match parsed {
            Ok(row) => rows.push(row),
            Err(err) if options.lenient => {
                let _ = err;
                skipped += 1;
            }
            Err(err) => return Err(err),
        }
    }

    if rows.is_empty() {
        return Err(Error::EmptyLog);
    }

    if options.sort_by_timestamp {
        rows.sort_by_key(|r| (r.timestamp, r.ordinal));
    }

    let mut log = EventLog::new();
    for (position, row) in rows.iter().enumerate() {
        // After a timestamp sort the sorted order becomes log order, so
        // sequence numbers are reassigned; otherwise the file row ordinal
        // is kept (lenient skips leave gaps).
        let seq = if options.sort_by_timestamp {
            position as u32
        } else {
            row.ordinal
        };
        log.push(&row.case, &row.activity, &row.actor, seq);
    }

    Ok(ParseOutcome {
        log,
        skipped_rows: skipped,
    })
}

fn malformed(record: &csv::StringRecord, ordinal: u32, reason: String) -> Error {
    let line = record
        .position()
        .map(|p| p.line())
        .unwrap_or(ordinal as u64 + 1);
    Error::MalformedRow { line, reason }
}

/// Serializes a log back to delimited text in the same dialect: the three
/// mapped columns, one row per event, in log order.
pub fn write_csv(
    log: &EventLog,
    header: Option<(&str, &str, &str)>,
    delimiter: u8,
    writer: impl Write,
) -> Result<()> {
    let mut out = csv::WriterBuilder::new()
        .delimiter(delimiter)
        .from_writer(writer);
    if let Some((case, activity, actor)) = header {
        out.write_record([case, activity, actor])
            .map_err(|e| Error::InvalidSchema(format!("write failed: {e}")))?;
    }
    for event in log.events() {
        out.write_record([
            log.cases().name(event.case),
            log.activities().name(event.activity),
            log.actors().name(event.actor),
        ])
        .map_err(|e| Error::InvalidSchema(format!("write failed: {e}")))?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::SAMPLE_LOG_CSV;

    fn default_map() -> ColumnMap {
        ColumnMap::by_names("case", "activity", "actor")
    }

    #[test]
    fn parses_the_bundled_sample() {
        let outcome = parse_csv(
            SAMPLE_LOG_CSV.as_bytes(),
            &default_map(),
            &ParseOptions::default(),
        )
        .unwrap();
        assert_eq!(outcome.skipped_rows, 0);
        let stats = outcome.log.stats();
        assert_eq!(stats.event_count, 19);
        assert_eq!(stats.unique_actors, 5);
        assert_eq!(stats.unique_activities, 5);
    }

    #[test]
    fn header_only_input_is_an_empty_log() {
        let err = parse_csv(
            "case,activity,actor\n".as_bytes(),
            &default_map(),
            &ParseOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EmptyLog));
    }

    #[test]
    fn single_row_semicolon_without_header() {
        let options = ParseOptions {
            delimiter: b';',
            has_header: false,
            ..ParseOptions::default()
        };
        let outcome = parse_csv(
            "1;A;Matt\n".as_bytes(),
            &ColumnMap::by_indices(0, 1, 2),
            &options,
        )
        .unwrap();
        assert_eq!(outcome.log.event_count(), 1);
        let event = outcome.log.events()[0];
        assert_eq!(outcome.log.actors().name(event.actor), "Matt");
    }

    #[test]
    fn missing_column_is_reported_by_name() {
        let err = parse_csv(
            "a,b,c\n1,2,3\n".as_bytes(),
            &ColumnMap::by_names("a", "b", "nope"),
            &ParseOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingColumn(name) if name == "nope"));
    }

    #[test]
    fn malformed_rows_fail_or_skip() {
        let input = "case,activity,actor\n1,A,Matt\n2,,Joan\n3,B,Brad\n";
        let strict = parse_csv(input.as_bytes(), &default_map(), &ParseOptions::default());
        assert!(matches!(strict, Err(Error::MalformedRow { line: 3, .. })));

        let lenient = parse_csv(
            input.as_bytes(),
            &default_map(),
            &ParseOptions {
                lenient: true,
                ..ParseOptions::default()
            },
        )
        .unwrap();
        assert_eq!(lenient.skipped_rows, 1);
        assert_eq!(lenient.log.event_count(), 2);
        // Row ordinals are kept, so the skip leaves a gap.
        assert_eq!(lenient.log.events()[1].seq, 2);
    }

    #[test]
    fn duplicate_rows_are_kept() {
        let outcome = parse_csv(
            "case,activity,actor\n1,A,Matt\n1,A,Matt\n".as_bytes(),
            &default_map(),
            &ParseOptions::default(),
        )
        .unwrap();
        assert_eq!(outcome.log.event_count(), 2);
    }

    #[test]
    fn timestamp_sort_reorders_and_reassigns_seq() {
        let mut map = default_map();
        map.timestamp = Some(ColumnRef::Name("ts".into()));
        let input = "case,activity,actor,ts\n1,B,Joan,2014-01-02 00:00:00\n1,A,Matt,2014-01-01 00:00:00\n";
        let outcome = parse_csv(
            input.as_bytes(),
            &map,
            &ParseOptions {
                sort_by_timestamp: true,
                ..ParseOptions::default()
            },
        )
        .unwrap();
        let names: Vec<&str> = outcome
            .log
            .events()
            .iter()
            .map(|e| outcome.log.actors().name(e.actor))
            .collect();
        assert_eq!(names, vec!["Matt", "Joan"]);
        assert_eq!(outcome.log.events()[0].seq, 0);
    }

    #[test]
    fn quoted_fields_are_unescaped() {
        let input = "case,activity,actor\n\"1\",\"open, review\",\"Smith, J\"\n";
        let outcome = parse_csv(input.as_bytes(), &default_map(), &ParseOptions::default()).unwrap();
        let event = outcome.log.events()[0];
        assert_eq!(outcome.log.activities().name(event.activity), "open, review");
        assert_eq!(outcome.log.actors().name(event.actor), "Smith, J");
    }

    #[test]
    fn round_trip_preserves_triples_in_order() {
        let outcome = parse_csv(
            SAMPLE_LOG_CSV.as_bytes(),
            &default_map(),
            &ParseOptions::default(),
        )
        .unwrap();
        let mut buffer = Vec::new();
        write_csv(
            &outcome.log,
            Some(("case", "activity", "actor")),
            b',',
            &mut buffer,
        )
        .unwrap();
        let reparsed = parse_csv(buffer.as_slice(), &default_map(), &ParseOptions::default())
            .unwrap()
            .log;
        assert_eq!(reparsed, outcome.log);
    }
}
