//! Interchange formats.
//!
//! The set-system text format is the unit every CLI command reads and
//! writes: line 1 is `m=<int> n=<int>`, followed by n lines each holding
//! the points of one block in ascending order (an empty line is the empty
//! block). A JSON document with fields `m` and `blocks` is accepted
//! interchangeably; files starting with `{` are parsed as JSON.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::setsystem::{Block, SetSystem};

#[derive(Serialize, Deserialize)]
struct SystemJson {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

/// Parse a set system from either the text or the JSON form.
pub fn parse_system(input: &str) -> Result<SetSystem> {
    if input.trim_start().starts_with('{') {
        parse_system_json(input)
    } else {
        parse_system_text(input)
    }
}

pub fn parse_system_json(input: &str) -> Result<SetSystem> {
    let doc: SystemJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let blocks = doc
        .blocks
        .iter()
        .map(|pts| Block::new(doc.m, pts))
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(doc.m, blocks)
}

pub fn parse_system_text(input: &str) -> Result<SetSystem> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let (m, n) = parse_header(header)?;
    let mut blocks = Vec::with_capacity(n);
    for (idx, line) in lines {
        if blocks.len() == n {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("trailing content after {n} blocks"),
                });
            }
            continue;
        }
        let mut points = Vec::new();
        for tok in line.split_whitespace() {
            let p: usize = tok.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid point {tok:?}"),
            })?;
            if let Some(&last) = points.last() {
                if p <= last {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("points must be strictly ascending, got {last} then {p}"),
                    });
                }
            }
            points.push(p);
        }
        let block = Block::new(m, &points).map_err(|e| Error::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        blocks.push(block);
    }
    if blocks.len() != n {
        return Err(Error::Parse {
            line: input.lines().count(),
            msg: format!("expected {n} blocks, found {}", blocks.len()),
        });
    }
    SetSystem::new(m, blocks)
}

fn parse_header(header: &str) -> Result<(usize, usize)> {
    let mut m = None;
    let mut n = None;
    for tok in header.split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("expected `m=<int> n=<int>`, got {header:?}"),
        })?;
        let val: usize = val.parse().map_err(|_| Error::Parse {
            line: 1,
            msg: format!("invalid integer {val:?} for {key}"),
        })?;
        match key {
            "m" => m = Some(val),
            "n" => n = Some(val),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("unknown header key {key:?}"),
                })
            }
        }
    }
    match (m, n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(Error::Parse {
            line: 1,
            msg: format!("header must set both m and n, got {header:?}"),
        }),
    }
}

/// Emit in the text form, preserving block order.
pub fn emit_system(s: &SetSystem) -> String {
    let mut out = format!("m={} n={}\n", s.order(), s.size());
    for b in s.blocks() {
        let pts: Vec<String> = b.points().iter().map(|p| p.to_string()).collect();
        out.push_str(&pts.join(" "));
        out.push('\n');
    }
    out
}

/// Emit in the byte-stable canonical text form: ascending points within a
/// block, blocks sorted lexicographically by their point lists.
pub fn emit_system_canonical(s: &SetSystem) -> String {
    let mut blocks = s.blocks().to_vec();
    blocks.sort_by_key(|b| b.points());
    let canon = SetSystem::new(s.order(), blocks).expect("same ground set");
    emit_system(&canon)
}

/// Emit in the JSON form.
pub fn emit_system_json(s: &SetSystem) -> String {
    let doc = SystemJson {
        m: s.order(),
        blocks: s.blocks().iter().map(|b| b.points()).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// A user-supplied table of best-known A(n, d) code sizes.
///
/// File format: one `n d value` triple per line; `#` starts a comment.
#[derive(Clone, Debug, Default)]
pub struct AndTable {
    entries: HashMap<(usize, usize), u128>,
}

impl AndTable {
    pub fn parse(input: &str) -> Result<AndTable> {
        let mut entries = HashMap::new();
        for (idx, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected `n d value`, got {raw:?}"),
                });
            }
            let parse = |s: &str| -> Result<u128> {
                s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid integer {s:?}"),
                })
            };
            let n = parse(fields[0])? as usize;
            let d = parse(fields[1])? as usize;
            let value = parse(fields[2])?;
            entries.insert((n, d), value);
        }
        Ok(AndTable { entries })
    }

    pub fn get(&self, n: usize, d: usize) -> Option<u128> {
        self.entries.get(&(n, d)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{fano, system};

    #[test]
    fn text_roundtrip() {
        let s = system(4, &[&[1, 2], &[3, 4], &[]]);
        let text = emit_system(&s);
        assert_eq!(text, "m=4 n=3\n1 2\n3 4\n\n");
        assert_eq!(parse_system(&text).unwrap(), s);
    }

    #[test]
    fn json_roundtrip() {
        let s = fano();
        let json = emit_system_json(&s);
        assert_eq!(parse_system(&json).unwrap(), s);
    }

    #[test]
    fn canonical_form_is_stable() {
        let s = system(4, &[&[3, 4], &[1, 2]]);
        let canon = emit_system_canonical(&s);
        assert_eq!(canon, "m=4 n=2\n1 2\n3 4\n");
        assert_eq!(emit_system_canonical(&parse_system(&canon).unwrap()), canon);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_system_text("m=4 n=2\n1 2\n5\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_system_text("m=4 n=2\n2 1\n3 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_system_text("m=4\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_system_text("m=4 n=3\n1 2\n3 4\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn and_table_parse() {
        let table = AndTable::parse("# Brouwer table excerpt\n13 4 256\n14 4 512\n").unwrap();
        assert_eq!(table.get(13, 4), Some(256));
        assert_eq!(table.get(14, 4), Some(512));
        assert_eq!(table.get(12, 4), None);
        assert!(AndTable::parse("13 4\n").is_err());
    }
}
