//! Slow, independent checks used to cross-validate the flow method.

use crate::error::{Error, Result};

use super::matrix::{BinaryMatrix, SumVectors};

/// Every binary matrix with marginals `sums`, in increasing mask order.
/// Limited to `m * n <= 16`.
pub fn brute_force_solutions(sums: &SumVectors) -> Result<Vec<BinaryMatrix>> {
    let (m, n) = (sums.m(), sums.n());
    if m * n > 16 {
        return Err(Error::invalid(format!(
            "brute force is limited to 16 entries, got {m}x{n}"
        )));
    }
    if !sums.is_compatible() {
        return Ok(Vec::new());
    }
    Ok((0u64..1 << (m * n))
        .filter(|&mask| mask.count_ones() as usize == sums.row_total())
        .map(|mask| BinaryMatrix::from_mask(m, n, mask))
        .filter(|a| a.has_marginals(sums))
        .collect())
}

/// Checks `|I| |J| >= Σ_{i∈I} r_i - Σ_{j∉J} s_j` for all subsets `I` of rows
/// and `J` of columns. Incompatible sums are infeasible. Limited to
/// `m, n <= 12`.
pub fn mirsky_feasible(sums: &SumVectors) -> Result<bool> {
    let (m, n) = (sums.m(), sums.n());
    if m > 12 || n > 12 {
        return Err(Error::invalid(format!(
            "subset enumeration is limited to 12 rows and columns, got {m}x{n}"
        )));
    }
    if !sums.is_compatible() {
        return Ok(false);
    }
    let subset_sum = |values: &[usize], mask: u32| -> i64 {
        values
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v as i64)
            .sum()
    };
    // (|J|, Σ_{j∉J} s_j) for each column subset
    let full = (1u32 << n) - 1;
    let cols: Vec<(i64, i64)> = (0..=full)
        .map(|jm| (jm.count_ones() as i64, subset_sum(sums.cols(), full & !jm)))
        .collect();
    for im in 0u32..1 << m {
        let size_i = im.count_ones() as i64;
        let r = subset_sum(sums.rows(), im);
        if cols.iter().any(|&(size_j, s_out)| size_i * size_j < r - s_out) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sums(r: &[usize], s: &[usize]) -> SumVectors {
        SumVectors::new(r.to_vec(), s.to_vec()).unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(brute_force_solutions(&sums(&[1, 1], &[1, 1])).unwrap().len(), 2);
        assert_eq!(brute_force_solutions(&sums(&[2, 2], &[2, 2])).unwrap().len(), 1);
        assert!(brute_force_solutions(&sums(&[2, 0], &[2, 0])).unwrap().is_empty());
        assert!(brute_force_solutions(&sums(&[0; 5], &[0; 4])).is_err());
    }

    #[test]
    fn subset_inequality() {
        assert!(mirsky_feasible(&sums(&[3, 1, 4, 4, 2], &[4, 3, 1, 4, 2])).unwrap());
        assert!(!mirsky_feasible(&sums(&[2, 0], &[2, 0])).unwrap());
        assert!(mirsky_feasible(&sums(&[0], &[0])).unwrap());
        assert!(!mirsky_feasible(&sums(&[1, 0], &[0, 0])).unwrap());
    }
}
