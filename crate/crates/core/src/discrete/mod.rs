//! Discrete tomography on the integer lattice: distance sums of finite sets
//! and reconstruction of binary matrices from their row and column sums.
//!
//! The solver seeds a flow network with a least-average-value filling and
//! then augments along shortest paths; the instance is solvable exactly when
//! the maximum flow saturates every row.

mod lattice;
mod lav;
mod matrix;
mod network;
mod oracle;
mod switching;

pub use lattice::{
    discrete_distance_sum, discrete_distance_sum_at, discrete_xrays, distance_sum_via_xrays,
    lattice_to_matrix, matrix_to_lattice, one_sided_partials, DiscreteXRay, LatticePoint,
    LatticeSet,
};
pub use lav::{distance_sum_matrix, lav_fill, preference_list, LavEvent, LavOutcome, LavRule};
pub use matrix::{BinaryMatrix, SumVectors};
pub use network::{build_network, max_flow, Edge, FlowNetwork, PathStep};
pub use oracle::{brute_force_solutions, mirsky_feasible};
pub use switching::{apply_switching_chain, find_switching_chain, SwitchingChain};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Solved {
        matrix: BinaryMatrix,
        /// Ones placed by the initial filling.
        seeded: usize,
        /// `Σ r_i - size` after each augmentation.
        deficiency_history: Vec<u64>,
    },
    Infeasible {
        max_flow: u64,
        required: u64,
    },
}

impl Reconstruction {
    pub fn matrix(&self) -> Option<&BinaryMatrix> {
        match self {
            Reconstruction::Solved { matrix, .. } => Some(matrix),
            Reconstruction::Infeasible { .. } => None,
        }
    }

    pub fn is_solved(&self) -> bool {
        self.matrix().is_some()
    }

    pub fn augmentations(&self) -> usize {
        match self {
            Reconstruction::Solved {
                deficiency_history, ..
            } => deficiency_history.len(),
            Reconstruction::Infeasible { .. } => 0,
        }
    }
}

/// Solves for a binary matrix with marginals `sums`. Incompatible totals are
/// an error; an instance whose maximum flow falls short is `Infeasible`.
pub fn reconstruct(sums: &SumVectors) -> Result<Reconstruction> {
    sums.require_compatible()?;
    let seed = lav_fill(sums)?;
    reconstruct_from(sums, &seed.matrix)
}

/// Like [`reconstruct`], starting from any matrix that does not exceed the
/// prescribed sums.
pub fn reconstruct_from(sums: &SumVectors, start: &BinaryMatrix) -> Result<Reconstruction> {
    sums.require_compatible()?;
    let mut net = build_network(sums);
    net.seed_from_matrix(start)?;
    let deficiency_history = net.augment_to_max();
    let required = net.source_capacity();
    if net.size() < required {
        return Ok(Reconstruction::Infeasible {
            max_flow: net.size(),
            required,
        });
    }
    Ok(Reconstruction::Solved {
        matrix: net.to_matrix(),
        seeded: start.ones(),
        deficiency_history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sums(r: &[usize], s: &[usize]) -> SumVectors {
        SumVectors::new(r.to_vec(), s.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_needs_no_augmentation() {
        let out = reconstruct(&sums(&[3, 1, 4, 4, 2], &[4, 3, 1, 4, 2])).unwrap();
        assert_eq!(out.augmentations(), 0);
        assert_eq!(
            out.matrix().unwrap().to_string(),
            "1 0 0 1 1\n0 1 0 0 0\n1 1 1 1 0\n1 1 0 1 1\n1 0 0 1 0\n"
        );
    }

    #[test]
    fn forced_and_infeasible() {
        let out = reconstruct(&sums(&[1, 1], &[2, 0])).unwrap();
        assert_eq!(out.matrix().unwrap(), &BinaryMatrix::from_rows(&[[1, 0], [1, 0]]).unwrap());
        let out = reconstruct(&sums(&[2, 0], &[2, 0])).unwrap();
        assert_eq!(
            out,
            Reconstruction::Infeasible {
                max_flow: 1,
                required: 2
            }
        );
        assert!(reconstruct(&sums(&[1, 1], &[1, 0])).is_err());
    }

    #[test]
    fn zero_start_augments() {
        let s = sums(&[2, 1], &[2, 1]);
        let out = reconstruct_from(&s, &BinaryMatrix::zeros(2, 2)).unwrap();
        assert!(out.matrix().unwrap().has_marginals(&s));
        assert_eq!(out.augmentations(), 3);
    }
}
