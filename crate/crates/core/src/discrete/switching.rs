//! Switching chains: alternating row/column cycles of matrix entries whose
//! simultaneous flip preserves all row and column sums.
//!
//! A chain `(i_0, j_0), ..., (i_l, j_l)` starting at a one-entry `(i, j)`
//! corresponds to a flow-augmenting path through `v_i` and `w_j`. The search
//! is a breadth-first labeling: `(i, j)` gets label 0, zeros in rows of the
//! current highest (even) label get the next label, ones in columns of the
//! current highest (odd) label get the next, until a labeled zero shows up in
//! column `j`.

use crate::error::{Error, Result};

use super::matrix::BinaryMatrix;

/// Matrix positions `(row, column)`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingChain {
    pub pairs: Vec<(usize, usize)>,
}

impl SwitchingChain {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks every defining condition against `a`; the first failure is
    /// reported.
    pub fn validate(&self, a: &BinaryMatrix) -> std::result::Result<(), String> {
        self.check_shape(a)?;
        for (k, &(i, j)) in self.pairs.iter().enumerate().skip(1) {
            let want = k % 2 == 0;
            if a.get(i, j) != want {
                return Err(format!(
                    "entry ({}, {}) at position {k} should be {}",
                    i + 1,
                    j + 1,
                    want as u8
                ));
            }
        }
        Ok(())
    }

    /// Structural conditions: odd last index, alternating row and column
    /// moves, return to the starting column in a different row, bounds, and
    /// no repeated entry.
    fn check_shape(&self, a: &BinaryMatrix) -> std::result::Result<(), String> {
        let p = &self.pairs;
        if p.len() < 4 {
            return Err(format!("chain has {} entries, at least 4 needed", p.len()));
        }
        let l = p.len() - 1;
        if l % 2 == 0 {
            return Err(format!("last index {l} is even"));
        }
        if let Some(&(i, j)) = p.iter().find(|&&(i, j)| i >= a.rows() || j >= a.cols()) {
            return Err(format!("entry ({}, {}) is out of bounds", i + 1, j + 1));
        }
        for k in 0..l {
            let (a0, b0) = p[k];
            let (a1, b1) = p[k + 1];
            if k % 2 == 0 {
                if a0 != a1 || b0 == b1 {
                    return Err(format!("step {k} must move within row {}", a0 + 1));
                }
            } else if b0 != b1 || a0 == a1 {
                return Err(format!("step {k} must move within column {}", b0 + 1));
            }
        }
        if p[l].1 != p[0].1 || p[l].0 == p[0].0 {
            return Err("chain does not close in the starting column".into());
        }
        let mut seen = std::collections::HashSet::new();
        if !p.iter().all(|e| seen.insert(*e)) {
            return Err("chain repeats an entry".into());
        }
        Ok(())
    }
}

/// Shortest switching chain through the one-entry `(i, j)`, or `None` when
/// no labeled zero reaches column `j` (or when `a_ij` is zero).
///
/// Ties: rows are scanned top to bottom and columns left to right; the
/// endpoint in column `j` and every backtracking predecessor is the one with
/// the smallest index.
pub fn find_switching_chain(a: &BinaryMatrix, i: usize, j: usize) -> Option<SwitchingChain> {
    let (m, n) = (a.rows(), a.cols());
    if i >= m || j >= n || !a.get(i, j) {
        return None;
    }
    let mut label: Vec<Option<usize>> = vec![None; m * n];
    label[i * n + j] = Some(0);
    let mut frontier = vec![(i, j)];
    let mut k = 0;
    let end = loop {
        let mut next = Vec::new();
        if k % 2 == 0 {
            let mut rows: Vec<usize> = frontier.iter().map(|&(r, _)| r).collect();
            rows.sort_unstable();
            rows.dedup();
            for r in rows {
                for c in 0..n {
                    if label[r * n + c].is_none() && !a.get(r, c) {
                        label[r * n + c] = Some(k + 1);
                        next.push((r, c));
                    }
                }
            }
        } else {
            let mut cols: Vec<usize> = frontier.iter().map(|&(_, c)| c).collect();
            cols.sort_unstable();
            cols.dedup();
            for c in cols {
                for r in 0..m {
                    if label[r * n + c].is_none() && a.get(r, c) {
                        label[r * n + c] = Some(k + 1);
                        next.push((r, c));
                    }
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        k += 1;
        if k % 2 == 1 {
            if let Some(&hit) = next.iter().filter(|&&(_, c)| c == j).min() {
                break hit;
            }
        }
        frontier = next;
    };

    let mut chain = vec![end];
    let (mut r, mut c) = end;
    for s in (1..=k).rev() {
        let want = Some(s - 1);
        (r, c) = if s % 2 == 1 {
            // a zero reached along its row
            let pc = (0..n).find(|&pc| label[r * n + pc] == want).expect("row predecessor");
            (r, pc)
        } else {
            let pr = (0..m).find(|&pr| label[pr * n + c] == want).expect("column predecessor");
            (pr, c)
        };
        chain.push((r, c));
    }
    chain.reverse();
    debug_assert_eq!(chain[0], (i, j));
    Some(SwitchingChain { pairs: chain })
}

/// Flips every entry of the chain. The chain must be structurally valid and
/// its entries must alternate between one and zero, so that row and column
/// sums are unchanged; applying the result of a flip again restores `a`.
pub fn apply_switching_chain(a: &BinaryMatrix, chain: &SwitchingChain) -> Result<BinaryMatrix> {
    chain.check_shape(a).map_err(Error::InvalidInput)?;
    let first = a.get(chain.pairs[0].0, chain.pairs[0].1);
    for (k, &(i, j)) in chain.pairs.iter().enumerate() {
        if a.get(i, j) != (first == (k % 2 == 0)) {
            return Err(Error::invalid(format!(
                "entries do not alternate at position {k} ({}, {})",
                i + 1,
                j + 1
            )));
        }
    }
    let mut out = a.clone();
    for &(i, j) in &chain.pairs {
        out.flip(i, j);
    }
    Ok(out)
}
