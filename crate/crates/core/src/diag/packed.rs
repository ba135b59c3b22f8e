use std::collections::BTreeSet;
use std::fmt;

use crate::partitions::PartitionType;
use crate::{Error, Result};

/// Nonnegative integer matrix without zero rows or columns, i.e. a labelled
/// diagram: row `i` is the `i`-th white spot, column `j` the `j`-th black
/// spot, entry `aᵢⱼ` the number of edges between them. The `0×0` matrix is
/// the empty diagram and the unit of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Drops zero rows and zero columns, keeping the order of the others.
pub fn pack(raw: &[Vec<i64>]) -> Result<PackedMatrix> {
    let width = raw.first().map_or(0, Vec::len);
    if let Some(bad) = raw.iter().position(|r| r.len() != width) {
        return Err(Error::Precondition(format!(
            "row {bad} has {} entries, expected {width}",
            raw[bad].len()
        )));
    }
    if let Some(v) = raw.iter().flatten().find(|v| **v < 0) {
        return Err(Error::Precondition(format!("negative entry {v}")));
    }
    if let Some(v) = raw.iter().flatten().find(|v| **v > u32::MAX as i64) {
        return Err(Error::Precondition(format!("entry {v} is too large")));
    }
    let keep_rows: Vec<usize> = (0..raw.len())
        .filter(|&i| raw[i].iter().any(|v| *v != 0))
        .collect();
    let keep_cols: Vec<usize> = (0..width)
        .filter(|&j| raw.iter().any(|r| r[j] != 0))
        .collect();
    let entries = keep_rows
        .iter()
        .flat_map(|&i| keep_cols.iter().map(move |&j| raw[i][j] as u32))
        .collect();
    Ok(PackedMatrix {
        rows: keep_rows.len(),
        cols: keep_cols.len(),
        entries,
    })
}

/// Parses `"2 0;0 2;1 1"` (optionally wrapped in `[...]`) into raw rows.
/// An empty body is the `0×0` matrix.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (body, offset) = match trimmed.strip_prefix('[') {
        Some(rest) => match rest.strip_suffix(']') {
            Some(body) => (body, offset + 1),
            None => return Err(Error::parse("matrix", text.len(), "missing ']'")),
        },
        None => (trimmed, offset),
    };
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut rows = Vec::new();
    let mut pos = offset;
    for row_text in body.split(';') {
        let mut row = Vec::new();
        for tok in row_text.split_whitespace() {
            let at = pos + (tok.as_ptr() as usize - row_text.as_ptr() as usize);
            let v = tok
                .parse::<i64>()
                .map_err(|_| Error::parse("matrix", at, format!("invalid entry {tok:?}")))?;
            row.push(v);
        }
        if row.is_empty() {
            return Err(Error::parse("matrix", pos, "empty row"));
        }
        if let Some(first) = rows.first() {
            let first: &Vec<i64> = first;
            if first.len() != row.len() {
                return Err(Error::parse(
                    "matrix",
                    pos,
                    format!("row has {} entries, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
        pos += row_text.len() + 1;
    }
    Ok(rows)
}

impl PackedMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let m = PackedMatrix {
            rows,
            cols,
            entries,
        };
        if let Some(i) = m.row_sums().iter().position(|s| *s == 0) {
            return Err(Error::Precondition(format!(
                "row {} is zero; the matrix is not packed",
                i + 1
            )));
        }
        if let Some(j) = m.col_sums().iter().position(|s| *s == 0) {
            return Err(Error::Precondition(format!(
                "column {} is zero; the matrix is not packed",
                j + 1
            )));
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Precondition("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// Parses the text format and insists the matrix is already packed.
    pub fn parse(text: &str) -> Result<Self> {
        let raw = parse_matrix(text)?;
        let packed = pack(&raw).map_err(|e| Error::parse("matrix", 0, e.to_string()))?;
        let raw_cols = raw.first().map_or(0, Vec::len);
        if packed.rows != raw.len() || packed.cols != raw_cols {
            return Err(Error::parse(
                "matrix",
                0,
                "matrix has a zero row or column; it is not packed",
            ));
        }
        Ok(packed)
    }

    pub fn empty() -> Self {
        PackedMatrix {
            rows: 0,
            cols: 0,
            entries: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Total number of edges `|d|`.
    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn transpose(&self) -> PackedMatrix {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| self.get(i, j)))
            .collect();
        PackedMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// `[[self, 0], [0, other]]`.
    pub fn block_diagonal(&self, other: &PackedMatrix) -> PackedMatrix {
        let (rows, cols) = (self.rows + other.rows, self.cols + other.cols);
        let mut entries = vec![0u32; rows * cols];
        for i in 0..self.rows {
            entries[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            let start = (self.rows + i) * cols + self.cols;
            entries[start..start + other.cols].copy_from_slice(other.row(i));
        }
        PackedMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// `pack(M[X, all columns])` for a set of row indices.
    pub fn restrict_rows(&self, rows: &[usize]) -> PackedMatrix {
        let keep_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| rows.iter().any(|&i| self.get(i, j) != 0))
            .collect();
        let entries = rows
            .iter()
            .flat_map(|&i| keep_cols.iter().map(move |&j| self.get(i, j)))
            .collect();
        PackedMatrix {
            rows: rows.len(),
            cols: keep_cols.len(),
            entries,
        }
    }

    /// `pack(M[all rows, Y])` for a set of column indices.
    pub fn restrict_cols(&self, cols: &[usize]) -> PackedMatrix {
        self.transpose().restrict_rows(cols).transpose()
    }

    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> PackedMatrix {
        let entries = row_perm
            .iter()
            .flat_map(|&i| col_perm.iter().map(move |&j| self.get(i, j)))
            .collect();
        PackedMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// All matrices obtained by permuting rows and columns.
    pub fn orbit(&self) -> BTreeSet<PackedMatrix> {
        let mut row_arrangements = BTreeSet::new();
        let mut rows = self.to_rows();
        rows.sort();
        loop {
            row_arrangements.insert(rows.clone());
            if !crate::partitions::next_permutation(&mut rows) {
                break;
            }
        }
        let mut out = BTreeSet::new();
        for arrangement in row_arrangements {
            let m = PackedMatrix {
                rows: self.rows,
                cols: self.cols,
                entries: arrangement.concat(),
            };
            let mut cols = m.transpose().to_rows();
            cols.sort();
            loop {
                out.insert(
                    PackedMatrix {
                        rows: self.cols,
                        cols: self.rows,
                        entries: cols.concat(),
                    }
                    .transpose(),
                );
                if !crate::partitions::next_permutation(&mut cols) {
                    break;
                }
            }
        }
        out
    }

    /// `(α, β)`: `αⱼ` rows and `βⱼ` columns with sum `j`.
    pub fn bitype(&self) -> (PartitionType, PartitionType) {
        (
            PartitionType::from_sizes(self.row_sums().into_iter().map(|s| s as usize)),
            PartitionType::from_sizes(self.col_sums().into_iter().map(|s| s as usize)),
        )
    }

    /// `"2 0;0 2;1 1"`; the empty matrix renders as the empty string.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for PackedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

/// Every packed matrix of total weight `w`, sorted.
pub fn packed_matrices_of_weight(w: u32) -> BTreeSet<PackedMatrix> {
    fn fill(cells: &mut Vec<u32>, remaining: u32, len: usize, out: &mut Vec<Vec<u32>>) {
        if cells.len() == len {
            if remaining == 0 {
                out.push(cells.clone());
            }
            return;
        }
        for v in 0..=remaining {
            cells.push(v);
            fill(cells, remaining - v, len, out);
            cells.pop();
        }
    }
    let mut out = BTreeSet::new();
    if w == 0 {
        out.insert(PackedMatrix::empty());
        return out;
    }
    for rows in 1..=w as usize {
        for cols in 1..=w as usize {
            if rows.max(cols) > w as usize {
                continue;
            }
            let mut raw = Vec::new();
            fill(&mut Vec::new(), w, rows * cols, &mut raw);
            for entries in raw {
                if let Ok(m) = PackedMatrix::new(rows, cols, entries) {
                    out.insert(m);
                }
            }
        }
    }
    out
}
