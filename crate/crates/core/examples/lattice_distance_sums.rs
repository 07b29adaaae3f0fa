//! Distance sums of a lattice set and what the X-rays tell about them.

use taxicab_tomo::discrete::{
    discrete_distance_sum, discrete_xrays, distance_sum_via_xrays, one_sided_partials, LatticeSet,
};
use taxicab_tomo::Axis;

fn main() -> taxicab_tomo::Result<()> {
    let f = LatticeSet::new([(1, 1), (2, 1), (3, 1), (2, 2), (2, 3), (3, 3)])?;
    let xr = discrete_xrays(&f);
    println!("X1: {:?}", xr.0.iter().collect::<Vec<_>>());
    println!("X2: {:?}", xr.1.iter().collect::<Vec<_>>());

    println!("distance sums on [0, 4]^2 (top row y = 4):");
    for y in (0..=4).rev() {
        let row: String = (0..=4)
            .map(|x| {
                debug_assert_eq!(discrete_distance_sum(&f, (x, y)), distance_sum_via_xrays(&xr, (x, y)));
                format!("{:>4}", discrete_distance_sum(&f, (x, y)))
            })
            .collect();
        println!("  {row}");
    }

    for x in 0..=4 {
        let (dp, dm) = one_sided_partials(&f, (x, 2), Axis::X);
        println!("x = {x}: D+ = {dp:>2}, D- = {dm:>2}, points on the line x = {x}: {}", (dp - dm) / 2);
    }
    Ok(())
}
