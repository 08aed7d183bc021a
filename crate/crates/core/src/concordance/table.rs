//! Knot-table ingestion.
//!
//! The format is a plain CSV with the fixed header
//! `name,braid,strands,tau2,s2,g3,g4`. `tau2` and `s2` are doubled values
//! (tau and s/2 stored as twice the half-integer), empty cells mean
//! unknown, and the braid column uses the whitespace-separated signed
//! generator format of [`BraidWord::parse`].

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::concordance::{HalfInt, KnotRecord};

pub const KNOT_TABLE_HEADER: &str = "name,braid,strands,tau2,s2,g3,g4";

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read knot table: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad header: expected `{KNOT_TABLE_HEADER}`, got `{0}`")]
    Header(String),
    #[error("knot table has {} invalid row(s):\n{}", .0.len(), format_rows(.0))]
    Rows(Vec<RowError>),
}

/// One rejected row: 1-based line number plus the violated constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub line: usize,
    pub message: String,
}

fn format_rows(rows: &[RowError]) -> String {
    rows.iter()
        .map(|r| format!("  line {}: {}", r.line, r.message))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn read_knot_table(path: &Path) -> Result<Vec<KnotRecord>, TableError> {
    parse_knot_table(&fs::read_to_string(path)?)
}

/// Parses and validates the whole table, collecting every row error
/// instead of stopping at the first.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>, TableError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, line)) if line.trim().is_empty() => continue,
            Some((_, line)) => break line.trim(),
            None => return Err(TableError::Header(String::new())),
        }
    };
    if header != KNOT_TABLE_HEADER {
        return Err(TableError::Header(header.to_string()));
    }

    let mut records = Vec::new();
    let mut errors = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        match parse_row(line) {
            Ok(record) => match record.validate() {
                Ok(()) => records.push(record),
                Err(e) => errors.push(RowError { line: line_no, message: e.to_string() }),
            },
            Err(message) => errors.push(RowError { line: line_no, message }),
        }
    }
    if errors.is_empty() {
        Ok(records)
    } else {
        Err(TableError::Rows(errors))
    }
}

fn parse_row(line: &str) -> Result<KnotRecord, String> {
    let cells: Vec<&str> = line.split(',').map(str::trim).collect();
    if cells.len() != 7 {
        return Err(format!("expected 7 columns, found {}", cells.len()));
    }
    let name = cells[0].to_string();
    if name.is_empty() {
        return Err("empty name".to_string());
    }

    let braid = match (cells[1].is_empty(), cells[2].is_empty()) {
        (true, true) => None,
        (false, false) => {
            let strands: usize = cells[2]
                .parse()
                .map_err(|_| format!("bad strand count `{}`", cells[2]))?;
            if strands == 0 {
                return Err("strand count must be positive".to_string());
            }
            Some(BraidWord::parse(cells[1], strands).map_err(|e| e.to_string())?)
        }
        _ => return Err("braid and strands must be given together".to_string()),
    };

    let doubled = |cell: &str, col: &str| -> Result<Option<HalfInt>, String> {
        if cell.is_empty() {
            Ok(None)
        } else {
            cell.parse::<i64>()
                .map(|v| Some(HalfInt::from_doubled(v)))
                .map_err(|_| format!("bad {col} value `{cell}`"))
        }
    };
    let genus = |cell: &str, col: &str| -> Result<Option<u32>, String> {
        if cell.is_empty() {
            Ok(None)
        } else {
            cell.parse::<u32>().map(Some).map_err(|_| format!("bad {col} value `{cell}`"))
        }
    };

    let tau = doubled(cells[3], "tau2")?;
    let s_half = doubled(cells[4], "s2")?;
    let genus3 = genus(cells[5], "g3")?;
    let genus4 = genus(cells[6], "g4")?;
    let in_p = match (tau, genus3) {
        (Some(t), Some(g)) => Some(t == HalfInt::from_int(g as i64)),
        _ => None,
    };

    Ok(KnotRecord { name, braid, tau, s_half, genus3, genus4, in_p })
}
