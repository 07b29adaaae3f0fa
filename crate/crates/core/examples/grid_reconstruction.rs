//! Grid reconstruction of hv-convex sets from two step X-rays.

use taxicab_tomo::gridrecon::{reconstruct_grid, ControlGrid, GridSet, Mode, Rect};

fn main() -> taxicab_tomo::Result<()> {
    let unit = Rect { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 };
    let shapes = [
        ("L", GridSet::from_rows(&[[1, 0], [1, 1]])?),
        ("staircase", GridSet::from_rows(&[[1, 0, 0], [1, 1, 0], [1, 1, 1]])?),
        ("thin L", GridSet::from_rows(&[[1, 0, 0], [1, 0, 0], [1, 1, 1]])?),
        ("diamond", GridSet::from_rows(&[[0, 1, 1, 0], [1, 1, 1, 1], [1, 1, 1, 1], [0, 1, 1, 0]])?),
    ];
    for (name, shape) in &shapes {
        let n = shape.n();
        let (x1, x2) = shape.xrays(&ControlGrid::new(unit, n)?);
        println!("{name}, n = {n}: X1 = {:?}, X2 = {:?}", x1.values(), x2.values());
        for mode in [Mode::Greedy, Mode::Antigreedy] {
            let run = reconstruct_grid(&x1, &x2, n, mode)?;
            let verdict = if &run.set == shape { "recovered" } else { "differs" };
            println!(
                "  {mode:<10} {verdict}, {} deletions, final objective {:.5}",
                run.deletions.len(),
                run.objective.last().unwrap()
            );
            for line in run.set.to_string().lines() {
                println!("    {line}");
            }
        }
    }
    Ok(())
}
