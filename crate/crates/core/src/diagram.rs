//! Young diagrams stored as their list of row lengths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive row lengths, top row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

/// Validates signed row lengths and builds the diagram.
pub fn make_diagram(rows: &[i64]) -> Result<YoungDiagram> {
    for (index, &value) in rows.iter().enumerate() {
        if value < 1 {
            return Err(Error::NonPositiveRow { index, value });
        }
        if index > 0 && rows[index - 1] < value {
            return Err(Error::NotWeaklyDecreasing {
                index,
                prev: rows[index - 1],
                next: value,
            });
        }
    }
    Ok(YoungDiagram {
        rows: rows.iter().map(|&r| r as usize).collect(),
    })
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        for (index, &value) in rows.iter().enumerate() {
            if value == 0 {
                return Err(Error::NonPositiveRow { index, value: 0 });
            }
            if index > 0 && rows[index - 1] < value {
                return Err(Error::NotWeaklyDecreasing {
                    index,
                    prev: rows[index - 1] as i64,
                    next: value as i64,
                });
            }
        }
        Ok(YoungDiagram { rows })
    }

    /// Sorts arbitrary lengths into a diagram, dropping zeros.
    pub fn from_unsorted(mut rows: Vec<usize>) -> Self {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows }
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// The transpose: row j counts the rows of length greater than j.
    pub fn conjugate(&self) -> YoungDiagram {
        let rows = (0..self.column_count())
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count())
            .collect();
        YoungDiagram { rows }
    }

    /// Box coordinates `(row, col)`, 0-based, in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn render_ascii(&self) -> String {
        if self.is_empty() {
            return "(empty)".to_string();
        }
        self.rows
            .iter()
            .map(|&r| "[ ]".repeat(r))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn conjugate(y: &YoungDiagram) -> YoungDiagram {
    y.conjugate()
}

pub fn render_ascii(y: &YoungDiagram) -> String {
    y.render_ascii()
}

/// All partitions of `n` in decreasing lexicographic order of row lists.
pub fn enumerate_partitions(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, usize::MAX, &mut current, &mut out);
    out
}

/// Partitions of `n` with at most `max_rows` rows, same order as
/// [`enumerate_partitions`].
pub fn enumerate_bounded(n: usize, max_rows: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, max_rows, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    rows_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    if remaining == 0 {
        out.push(YoungDiagram {
            rows: current.clone(),
        });
        return;
    }
    if rows_left == 0 {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, rows_left - 1, current, out);
        current.pop();
    }
}

impl fmt::Display for YoungDiagram {
    /// Comma-separated row lengths; the empty diagram prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| s.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad row length {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        make_diagram(&rows)
    }
}
