use std::fmt;

use crate::error::{Error, Result};

/// Prescribed row sums `R` (length `m`) and column sums `S` (length `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumVectors {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl SumVectors {
    /// Checks `0 <= r_i <= n` and `0 <= s_j <= m`. Equal totals are not
    /// required here; see [`SumVectors::is_compatible`].
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let (m, n) = (rows.len(), cols.len());
        if m == 0 || n == 0 {
            return Err(Error::invalid("row and column sum vectors must be nonempty"));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, &r)| r > n) {
            return Err(Error::Incompatible(format!(
                "row sum r_{} = {r} exceeds the number of columns {n}",
                i + 1
            )));
        }
        if let Some((j, s)) = cols.iter().enumerate().find(|(_, &s)| s > m) {
            return Err(Error::Incompatible(format!(
                "column sum s_{} = {s} exceeds the number of rows {m}",
                j + 1
            )));
        }
        Ok(SumVectors { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols.len()
    }

    pub fn row_total(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn col_total(&self) -> usize {
        self.cols.iter().sum()
    }

    pub fn is_compatible(&self) -> bool {
        self.row_total() == self.col_total()
    }

    pub(crate) fn require_compatible(&self) -> Result<()> {
        if self.is_compatible() {
            Ok(())
        } else {
            Err(Error::Incompatible(format!(
                "row sums total {} but column sums total {}",
                self.row_total(),
                self.col_total()
            )))
        }
    }
}

/// An `m × n` 0/1 matrix with cached row and column sums.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    m: usize,
    n: usize,
    cells: Vec<bool>,
    row_sums: Vec<usize>,
    col_sums: Vec<usize>,
}

impl BinaryMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        BinaryMatrix {
            m,
            n,
            cells: vec![false; m * n],
            row_sums: vec![0; m],
            col_sums: vec![0; n],
        }
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::invalid("matrix has no rows"));
        }
        let n = rows[0].as_ref().len();
        let mut a = BinaryMatrix::zeros(m, n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => a.set(i, j, true),
                    _ => return Err(Error::invalid(format!("entry ({}, {}) is {v}", i + 1, j + 1))),
                }
            }
        }
        Ok(a)
    }

    /// Row-major bit mask, bit `i * n + j` for entry `(i, j)`.
    pub fn from_mask(m: usize, n: usize, mask: u64) -> Self {
        let mut a = BinaryMatrix::zeros(m, n);
        for k in 0..m * n {
            if mask >> k & 1 == 1 {
                a.set(k / n, k % n, true);
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let cell = &mut self.cells[i * self.n + j];
        if *cell != value {
            *cell = value;
            if value {
                self.row_sums[i] += 1;
                self.col_sums[j] += 1;
            } else {
                self.row_sums[i] -= 1;
                self.col_sums[j] -= 1;
            }
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        let v = self.get(i, j);
        self.set(i, j, !v);
    }

    pub fn row_sums(&self) -> &[usize] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[usize] {
        &self.col_sums
    }

    pub fn ones(&self) -> usize {
        self.row_sums.iter().sum()
    }

    /// Recomputes the marginals and compares them with the cached ones.
    pub fn sums_consistent(&self) -> bool {
        let rows: Vec<usize> = (0..self.m)
            .map(|i| (0..self.n).filter(|&j| self.get(i, j)).count())
            .collect();
        let cols: Vec<usize> = (0..self.n)
            .map(|j| (0..self.m).filter(|&i| self.get(i, j)).count())
            .collect();
        rows == self.row_sums && cols == self.col_sums
    }

    pub fn has_marginals(&self, sums: &SumVectors) -> bool {
        self.row_sums == sums.rows() && self.col_sums == sums.cols()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.m)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.m, self.n)?;
        write!(f, "{self}")
    }
}

/// Space-separated `0`/`1`, one row per line.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
