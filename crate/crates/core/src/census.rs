//! Census files: one entry per line, `[id] CODE`, with `#` starting a
//! comment. Entries are processed in parallel and reported in input order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::pairing::{CodeError, PairingScheme};
use crate::report::{RecordError, ReportRecord, Sections, SCHEMA};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CensusEntry {
    pub id: Option<u64>,
    pub code: String,
    /// 1-based source line.
    pub line: usize,
    pub error: Option<CodeError>,
}

/// Lines that are neither blank nor comments but do not have the
/// `[id] CODE` shape are kept, with the offending text as the code, so the
/// parse error lands in the report.
pub fn parse_census(text: &str) -> Vec<CensusEntry> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let (id, code) = match fields.as_slice() {
            [code] => (None, *code),
            [id, code] => match id.parse::<u64>() {
                Ok(n) => (Some(n), *code),
                Err(_) => (None, body),
            },
            _ => (None, body),
        };
        out.push(CensusEntry {
            id,
            code: code.to_string(),
            line: i + 1,
            error: PairingScheme::parse(code).err(),
        });
    }
    out
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CensusSummary {
    pub entries: usize,
    pub valid: usize,
    pub invalid: usize,
    pub parse_errors: usize,
    pub orientable: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: String,
    pub summary: CensusSummary,
    pub records: Vec<ReportRecord>,
}

pub fn run_census(entries: &[CensusEntry], sections: Sections) -> CensusReport {
    let records: Vec<ReportRecord> = entries
        .par_iter()
        .map(|e| {
            let mut r = match &e.error {
                Some(err) => ReportRecord::parse_failure(&e.code, err.clone()),
                None => ReportRecord::from_code(&e.code, sections),
            };
            r.id = e.id;
            r.line = Some(e.line);
            r
        })
        .collect();
    let parse_errors = records
        .iter()
        .filter(|r| matches!(r.error, Some(RecordError::Parse { .. })))
        .count();
    let valid = records.iter().filter(|r| r.is_valid()).count();
    CensusReport {
        schema: SCHEMA.to_string(),
        summary: CensusSummary {
            entries: records.len(),
            valid,
            invalid: records.len() - valid,
            parse_errors,
            orientable: records
                .iter()
                .filter(|r| r.is_valid() && r.orientable == Some(true))
                .count(),
        },
        records,
    }
}
