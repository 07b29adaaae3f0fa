//! Stochastic bisection against the exact bisecting point.
//!
//! `cargo run --release --example bisection`

use taxicab_tomo::bisect::{bisect_exact, bisect_stochastic, coordinatewise_median, StepSchedule};
use taxicab_tomo::{Point, Polygon, SeededRng};

fn main() -> taxicab_tomo::Result<()> {
    let shapes = [
        ("square", Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])?),
        ("triangle", Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])?),
        (
            "L-shape",
            Polygon::from_coords(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])?,
        ),
    ];
    let schedules = [
        ("t_k = 1/k", StepSchedule::harmonic()),
        ("t_k = 1/k^0.75", StepSchedule::power(1.0, 0.75)?),
    ];
    for (name, p) in &shapes {
        let exact = bisect_exact(p, 1e-12)?;
        println!("{name}: exact bisecting point ({:.6}, {:.6})", exact.x, exact.y);
        for (label, schedule) in &schedules {
            for iterations in [1_000, 10_000, 100_000] {
                let finals: Vec<Point> = (1..=10)
                    .map(|seed| {
                        let mut rng = SeededRng::new(seed);
                        bisect_stochastic(p, iterations, &mut rng, schedule).map(|r| r.final_point())
                    })
                    .collect::<Result<_, _>>()?;
                let worst = finals
                    .iter()
                    .map(|q| (q.x - exact.x).hypot(q.y - exact.y))
                    .fold(0.0f64, f64::max);
                let med = coordinatewise_median(&finals).unwrap();
                println!(
                    "  {label:<15} N = {iterations:>6}: median ({:.4}, {:.4}), worst of 10 runs off by {worst:.4}",
                    med.x, med.y
                );
            }
        }
    }
    Ok(())
}
