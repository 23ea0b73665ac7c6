//! Line-oriented state snapshots.
//!
//! ```text
//! # uwca snapshot
//! # lattice: square
//! # generation: 2
//! # live: 9
//! 0 - 0,0
//! 1 0,0 -1,0
//! ...
//! ```
//!
//! After the header, one line per live cell: `generation parent cell`, with
//! `-` as the patriarch's parent. Lines are sorted by generation, then cell.

use std::fmt::Write;

use super::{AutomatonState, BirthRecord};
use crate::error::{Error, Result};
use crate::lattice::{Cell, LatticeKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub kind: LatticeKind,
    pub generation: u32,
    /// Sorted by generation, then cell.
    pub records: Vec<(Cell, BirthRecord)>,
}

impl Snapshot {
    pub fn of(state: &AutomatonState) -> Snapshot {
        let mut records = state.sorted_records();
        records.sort_by_key(|&(c, r)| (r.generation, c));
        Snapshot {
            kind: state.kind(),
            generation: state.generation(),
            records,
        }
    }
}

pub fn write_snapshot(state: &AutomatonState) -> String {
    let snap = Snapshot::of(state);
    let mut out = String::with_capacity(snap.records.len() * 16 + 64);
    writeln!(out, "# uwca snapshot").unwrap();
    writeln!(out, "# lattice: {}", snap.kind).unwrap();
    writeln!(out, "# generation: {}", snap.generation).unwrap();
    writeln!(out, "# live: {}", snap.records.len()).unwrap();
    for (cell, rec) in &snap.records {
        match rec.parent {
            Some(p) => writeln!(out, "{} {} {}", rec.generation, p, cell),
            None => writeln!(out, "{} - {}", rec.generation, cell),
        }
        .unwrap();
    }
    out
}

pub fn parse_snapshot(text: &str) -> Result<Snapshot> {
    let mut kind = None;
    let mut generation = None;
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        if let Some(header) = line.strip_prefix('#') {
            if let Some((key, value)) = header.split_once(':') {
                match key.trim() {
                    "lattice" => kind = Some(value.trim().parse::<LatticeKind>().map_err(err)?),
                    "generation" => {
                        generation = Some(
                            value
                                .trim()
                                .parse::<u32>()
                                .map_err(|e| err(e.to_string()))?,
                        )
                    }
                    _ => {}
                }
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let kind = kind.ok_or_else(|| err("record before lattice header".into()))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [g, parent, cell] = fields[..] else {
            return Err(err(format!("expected 3 fields, found {}", fields.len())));
        };
        let generation = g.parse::<u32>().map_err(|e| err(e.to_string()))?;
        let parent = match parent {
            "-" => None,
            p => Some(Cell::parse(kind, p).map_err(err)?),
        };
        records.push((
            Cell::parse(kind, cell).map_err(err)?,
            BirthRecord { generation, parent },
        ));
    }
    let kind = kind.ok_or(Error::Parse {
        line: 0,
        message: "missing lattice header".into(),
    })?;
    let generation = generation.ok_or(Error::Parse {
        line: 0,
        message: "missing generation header".into(),
    })?;
    Ok(Snapshot {
        kind,
        generation,
        records,
    })
}
