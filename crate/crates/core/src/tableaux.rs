//! Tableaux: diagrams filled with `1..n`, and the standard ones among them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};

/// Largest box count accepted by [`enumerate_standard`] and [`count_standard`].
pub const STANDARD_BOX_CAP: usize = 12;

/// A Young diagram packed with `1..n`, one number per box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.box_count();
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!(
                    "tableau entries must be a bijection onto 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Row-major filling: the first row gets `1..=n1`, the next row continues.
    pub fn canonical(shape: &YoungDiagram) -> Self {
        let mut next = 1;
        let rows = shape
            .rows()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.box_count()
    }

    /// Entries of each column, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.column_count())
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect()
    }

    /// Row-major reading word.
    pub fn reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Parses "1 2 / 3".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Tableau::new(Vec::new());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

pub fn canonical_tableau(y: &YoungDiagram) -> Tableau {
    Tableau::canonical(y)
}

pub fn is_standard(t: &Tableau) -> bool {
    t.is_standard()
}

/// All standard tableaux of shape `y`, sorted by row-major reading.
pub fn enumerate_standard(y: &YoungDiagram) -> Result<Vec<Tableau>> {
    let n = y.box_count();
    if n > STANDARD_BOX_CAP {
        return Err(Error::TooManyBoxes {
            boxes: n,
            cap: STANDARD_BOX_CAP,
        });
    }
    let mut filled = vec![0usize; y.row_count()];
    let mut grid: Vec<Vec<usize>> = y.rows().iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    place(y, 1, &mut filled, &mut grid, &mut out);
    out.sort_by(|a: &Tableau, b: &Tableau| a.reading().cmp(&b.reading()));
    Ok(out)
}

// Number k goes into the first empty box of some row, provided the box
// above it is already filled.
fn place(
    shape: &YoungDiagram,
    k: usize,
    filled: &mut [usize],
    grid: &mut [Vec<usize>],
    out: &mut Vec<Tableau>,
) {
    if k > shape.box_count() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: grid.to_vec(),
        });
        return;
    }
    for i in 0..shape.row_count() {
        let j = filled[i];
        if j >= shape.row_len(i) {
            continue;
        }
        if i > 0 && filled[i - 1] <= j {
            continue;
        }
        grid[i][j] = k;
        filled[i] += 1;
        place(shape, k + 1, filled, grid, out);
        filled[i] -= 1;
        grid[i][j] = 0;
    }
}

pub fn count_standard(y: &YoungDiagram) -> Result<usize> {
    Ok(enumerate_standard(y)?.len())
}

/// `n!` over the product of hook lengths. No size cap.
pub fn hook_length_count(y: &YoungDiagram) -> BigUint {
    let conj = y.conjugate();
    let mut hooks = BigUint::one();
    for (i, j) in y.boxes() {
        let arm = y.row_len(i) - j - 1;
        let leg = conj.row_len(j) - i - 1;
        hooks *= BigUint::from(arm + leg + 1);
    }
    let mut factorial = BigUint::one();
    for k in 2..=y.box_count() {
        factorial *= BigUint::from(k);
    }
    factorial / hooks
}
