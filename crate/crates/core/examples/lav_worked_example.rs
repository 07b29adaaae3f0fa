//! Least-average-value filling of a 5 x 5 instance, step by step.

use taxicab_tomo::discrete::{distance_sum_matrix, lav_fill, preference_list, reconstruct, SumVectors};

fn main() -> taxicab_tomo::Result<()> {
    let sums = SumVectors::new(vec![3, 1, 4, 4, 2], vec![4, 3, 1, 4, 2])?;

    println!("distance sums at the lattice points:");
    for row in distance_sum_matrix(&sums)? {
        println!("  {}", row.iter().map(|v| format!("{v:>3}")).collect::<String>());
    }
    let order: Vec<String> = preference_list(&sums)?
        .iter()
        .take(8)
        .map(|(i, j)| format!("({}, {})", i + 1, j + 1))
        .collect();
    println!("preference list starts {} ...\n", order.join(" "));

    let fill = lav_fill(&sums)?;
    println!("{}", fill.trace_text());

    let solved = reconstruct(&sums)?;
    println!("augmentations needed after the filling: {}", solved.augmentations());
    print!("{}", solved.matrix().expect("instance is solvable"));
    Ok(())
}
