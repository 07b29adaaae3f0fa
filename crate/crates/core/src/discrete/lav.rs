//! Initial filling by the least average value (LAV) principle.
//!
//! Entries are tried in increasing order of the taxicab distance sum of the
//! unknown set at the corresponding lattice point, which is computable from
//! the prescribed sums alone. Two accelerations mark whole rows or columns:
//!
//! 1. a line whose sum has reached its prescription has all its unvisited
//!    entries marked visited (left at zero);
//! 2. a line whose missing count equals its number of unvisited entries has
//!    those entries switched to one, wherever the crossing line's
//!    prescription still allows it, and then marked visited.
//!
//! After every visit the accelerations are applied until nothing changes.
//! Each application handles a single line; saturated rows come first, then
//! saturated columns, then forced rows, then forced columns, and the scan
//! restarts from the top after every application.

use std::fmt;

use crate::error::Result;

use super::matrix::{BinaryMatrix, SumVectors};

/// `m_kl = Σ_j s_j |l - j| + Σ_i r_i |k - i|`: the distance sum of any set
/// with these X-rays at the lattice point of entry `(k, l)`.
pub fn distance_sum_matrix(sums: &SumVectors) -> Result<Vec<Vec<i64>>> {
    sums.require_compatible()?;
    let (m, n) = (sums.m(), sums.n());
    let col_part: Vec<i64> = (0..n)
        .map(|l| {
            sums.cols()
                .iter()
                .enumerate()
                .map(|(j, &s)| s as i64 * (l as i64 - j as i64).abs())
                .sum()
        })
        .collect();
    let row_part: Vec<i64> = (0..m)
        .map(|k| {
            sums.rows()
                .iter()
                .enumerate()
                .map(|(i, &r)| r as i64 * (k as i64 - i as i64).abs())
                .sum()
        })
        .collect();
    Ok((0..m)
        .map(|k| (0..n).map(|l| row_part[k] + col_part[l]).collect())
        .collect())
}

/// Entries sorted by `(distance sum, row, column)`.
pub fn preference_list(sums: &SumVectors) -> Result<Vec<(usize, usize)>> {
    let values = distance_sum_matrix(sums)?;
    let mut list: Vec<(i64, usize, usize)> = values
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (v, i, j)))
        .collect();
    list.sort_unstable();
    Ok(list.into_iter().map(|(_, i, j)| (i, j)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LavRule {
    Start,
    /// An entry from the preference list switched to one (0-based).
    Switch { row: usize, col: usize },
    SaturatedRow(usize),
    SaturatedColumn(usize),
    ForcedRow(usize),
    ForcedColumn(usize),
}

impl fmt::Display for LavRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LavRule::Start => write!(f, "start"),
            LavRule::Switch { row, col } => write!(f, "switch entry ({}, {})", row + 1, col + 1),
            LavRule::SaturatedRow(i) => write!(f, "row {} saturated: mark visited", i + 1),
            LavRule::SaturatedColumn(j) => write!(f, "column {} saturated: mark visited", j + 1),
            LavRule::ForcedRow(i) => write!(f, "row {} forced: fill unvisited entries", i + 1),
            LavRule::ForcedColumn(j) => write!(f, "column {} forced: fill unvisited entries", j + 1),
        }
    }
}

/// Matrix and visited flags right after a rule fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LavEvent {
    pub rule: LavRule,
    pub matrix: BinaryMatrix,
    pub visited: Vec<bool>,
}

impl LavEvent {
    pub fn is_visited(&self, i: usize, j: usize) -> bool {
        self.visited[i * self.matrix.cols() + j]
    }
}

/// Visited entries carry a trailing `*`.
impl fmt::Display for LavEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.rule)?;
        for i in 0..self.matrix.rows() {
            let line: Vec<String> = (0..self.matrix.cols())
                .map(|j| {
                    let v = if self.matrix.get(i, j) { '1' } else { '0' };
                    if self.is_visited(i, j) {
                        format!("{v}*")
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct LavOutcome {
    pub matrix: BinaryMatrix,
    pub visited: Vec<bool>,
    pub trace: Vec<LavEvent>,
}

impl LavOutcome {
    pub fn all_visited(&self) -> bool {
        self.visited.iter().all(|&v| v)
    }

    pub fn trace_text(&self) -> String {
        self.trace
            .iter()
            .enumerate()
            .map(|(k, e)| format!("## step {k}\n{e}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

struct Filler<'a> {
    sums: &'a SumVectors,
    a: BinaryMatrix,
    visited: Vec<bool>,
    trace: Vec<LavEvent>,
}

impl Filler<'_> {
    fn n(&self) -> usize {
        self.sums.n()
    }

    fn m(&self) -> usize {
        self.sums.m()
    }

    fn is_visited(&self, i: usize, j: usize) -> bool {
        self.visited[i * self.n() + j]
    }

    fn visit(&mut self, i: usize, j: usize) {
        let n = self.n();
        self.visited[i * n + j] = true;
    }

    fn fits(&self, i: usize, j: usize) -> bool {
        self.a.row_sums()[i] < self.sums.rows()[i] && self.a.col_sums()[j] < self.sums.cols()[j]
    }

    fn record(&mut self, rule: LavRule) {
        self.trace.push(LavEvent {
            rule,
            matrix: self.a.clone(),
            visited: self.visited.clone(),
        });
    }

    fn unvisited_in_row(&self, i: usize) -> usize {
        (0..self.n()).filter(|&j| !self.is_visited(i, j)).count()
    }

    fn unvisited_in_col(&self, j: usize) -> usize {
        (0..self.m()).filter(|&i| !self.is_visited(i, j)).count()
    }

    fn next_rule(&self) -> Option<LavRule> {
        let (m, n) = (self.m(), self.n());
        let (r, s) = (self.sums.rows(), self.sums.cols());
        if let Some(i) = (0..m).find(|&i| self.a.row_sums()[i] == r[i] && self.unvisited_in_row(i) > 0) {
            return Some(LavRule::SaturatedRow(i));
        }
        if let Some(j) = (0..n).find(|&j| self.a.col_sums()[j] == s[j] && self.unvisited_in_col(j) > 0) {
            return Some(LavRule::SaturatedColumn(j));
        }
        if let Some(i) = (0..m).find(|&i| {
            let free = self.unvisited_in_row(i);
            free > 0 && r[i] - self.a.row_sums()[i] == free
        }) {
            return Some(LavRule::ForcedRow(i));
        }
        (0..n)
            .find(|&j| {
                let free = self.unvisited_in_col(j);
                free > 0 && s[j] - self.a.col_sums()[j] == free
            })
            .map(LavRule::ForcedColumn)
    }

    fn apply(&mut self, rule: LavRule) {
        match rule {
            LavRule::SaturatedRow(i) => {
                for j in 0..self.n() {
                    self.visit(i, j);
                }
            }
            LavRule::SaturatedColumn(j) => {
                for i in 0..self.m() {
                    self.visit(i, j);
                }
            }
            LavRule::ForcedRow(i) => {
                for j in 0..self.n() {
                    if !self.is_visited(i, j) {
                        if self.fits(i, j) {
                            self.a.set(i, j, true);
                        }
                        self.visit(i, j);
                    }
                }
            }
            LavRule::ForcedColumn(j) => {
                for i in 0..self.m() {
                    if !self.is_visited(i, j) {
                        if self.fits(i, j) {
                            self.a.set(i, j, true);
                        }
                        self.visit(i, j);
                    }
                }
            }
            LavRule::Start | LavRule::Switch { .. } => unreachable!("not an acceleration"),
        }
        self.record(rule);
    }

    fn accelerate(&mut self) {
        while let Some(rule) = self.next_rule() {
            self.apply(rule);
        }
    }
}

/// Builds a partial solution that never exceeds any prescribed sum. It may
/// fall short of `(R, S)`; augmentation completes it.
pub fn lav_fill(sums: &SumVectors) -> Result<LavOutcome> {
    let order = preference_list(sums)?;
    let (m, n) = (sums.m(), sums.n());
    let mut filler = Filler {
        sums,
        a: BinaryMatrix::zeros(m, n),
        visited: vec![false; m * n],
        trace: Vec::new(),
    };
    filler.record(LavRule::Start);
    filler.accelerate();
    for (i, j) in order {
        if filler.is_visited(i, j) {
            continue;
        }
        filler.visit(i, j);
        if filler.fits(i, j) {
            filler.a.set(i, j, true);
            filler.record(LavRule::Switch { row: i, col: j });
        }
        filler.accelerate();
    }
    Ok(LavOutcome {
        matrix: filler.a,
        visited: filler.visited,
        trace: filler.trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_sums() -> SumVectors {
        SumVectors::new(vec![3, 1, 4, 4, 2], vec![4, 3, 1, 4, 2]).unwrap()
    }

    #[test]
    fn distance_sum_matrix_of_worked_example() {
        let m = distance_sum_matrix(&worked_sums()).unwrap();
        assert_eq!(
            m,
            vec![
                vec![54, 48, 48, 50, 60],
                vec![46, 40, 40, 42, 52],
                vec![40, 34, 34, 36, 46],
                vec![42, 36, 36, 38, 48],
                vec![52, 46, 46, 48, 58],
            ]
        );
    }

    #[test]
    fn small_distance_sum_matrices() {
        let z = SumVectors::new(vec![0, 0, 0], vec![0, 0]).unwrap();
        assert_eq!(distance_sum_matrix(&z).unwrap(), vec![vec![0, 0]; 3]);
        let one = SumVectors::new(vec![1], vec![1]).unwrap();
        assert_eq!(distance_sum_matrix(&one).unwrap(), vec![vec![0]]);
        let bad = SumVectors::new(vec![1], vec![0]).unwrap();
        assert!(distance_sum_matrix(&bad).is_err());
    }

    #[test]
    fn preference_ties_are_row_major() {
        let list = preference_list(&worked_sums()).unwrap();
        assert_eq!(&list[..5], &[(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]);
    }

    #[test]
    fn worked_example_final_matrix() {
        let out = lav_fill(&worked_sums()).unwrap();
        let expect = BinaryMatrix::from_rows(&[
            [1, 0, 0, 1, 1],
            [0, 1, 0, 0, 0],
            [1, 1, 1, 1, 0],
            [1, 1, 0, 1, 1],
            [1, 0, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(out.matrix, expect);
        assert!(out.all_visited());
        assert!(out.matrix.has_marginals(&worked_sums()));
    }

    #[test]
    fn degenerate_instances() {
        let z = SumVectors::new(vec![0, 0], vec![0, 0]).unwrap();
        let out = lav_fill(&z).unwrap();
        assert_eq!(out.matrix, BinaryMatrix::zeros(2, 2));
        assert!(out.all_visited());

        let full = SumVectors::new(vec![2, 2], vec![2, 2]).unwrap();
        let out = lav_fill(&full).unwrap();
        assert_eq!(out.matrix, BinaryMatrix::from_rows(&[[1, 1], [1, 1]]).unwrap());
    }

    #[test]
    fn trace_format_marks_visited() {
        let one = SumVectors::new(vec![1], vec![1]).unwrap();
        let out = lav_fill(&one).unwrap();
        let text = out.trace_text();
        assert!(text.contains("# start\n0"));
        assert!(text.contains("1*"));
    }
}
