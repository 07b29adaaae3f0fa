//! Reconstruction by maximum flow from an empty start, and an infeasible
//! instance.

use taxicab_tomo::discrete::{
    build_network, mirsky_feasible, reconstruct, reconstruct_from, BinaryMatrix, Reconstruction, SumVectors,
};

fn main() -> taxicab_tomo::Result<()> {
    let sums = SumVectors::new(vec![3, 1, 4, 4, 2], vec![4, 3, 1, 4, 2])?;
    let net = build_network(&sums);
    println!("network: {} vertices, {} edges", net.vertex_count(), net.edges().len());

    let from_zero = reconstruct_from(&sums, &BinaryMatrix::zeros(5, 5))?;
    let from_lav = reconstruct(&sums)?;
    if let Reconstruction::Solved { matrix, deficiency_history, .. } = &from_zero {
        println!("from the zero matrix: {} augmentations, deficiency {:?}", deficiency_history.len(), deficiency_history);
        print!("{matrix}");
    }
    println!("from the least-average-value filling: {} augmentations", from_lav.augmentations());

    let bad = SumVectors::new(vec![2, 0], vec![2, 0])?;
    match reconstruct(&bad)? {
        Reconstruction::Infeasible { max_flow, required } => {
            println!("R = (2, 0), S = (2, 0): maximum flow {max_flow} < {required}, no matrix exists");
        }
        Reconstruction::Solved { .. } => unreachable!(),
    }
    println!("subset inequality agrees: feasible = {}", mirsky_feasible(&bad)?);
    Ok(())
}
