//! Uniform points in an L-shaped polygon.
//!
//! `cargo run --example sampling [out.svg]`

use taxicab_tomo::geometry::{sample_uniform, triangulate};
use taxicab_tomo::{render, Polygon, SeededRng};

fn main() -> taxicab_tomo::Result<()> {
    let l = Polygon::from_coords(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])?;
    let tri = triangulate(&l)?;
    println!("L-shape: area {}, {} triangles", l.area(), tri.len());
    for (t, a) in tri.triangles.iter().zip(tri.areas(&l)) {
        println!("  triangle {t:?} area {a}");
    }

    let mut rng = SeededRng::new(2024);
    let points = sample_uniform(&l, 20_000, &mut rng)?;
    // The top arm [0,1] x [1,2] holds a third of the area.
    let top = points.iter().filter(|p| p.y > 1.0).count() as f64 / points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), p| (a + p.x, b + p.y));
    let n = points.len() as f64;
    println!("fraction in the top arm: {top:.4} (expected {:.4})", 1.0 / 3.0);
    println!("sample mean: ({:.4}, {:.4}), centroid (0.8333, 0.8333)", sx / n, sy / n);

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, render::points_svg(&l, &points[..2000]))?;
        println!("wrote {path}");
    }
    Ok(())
}
