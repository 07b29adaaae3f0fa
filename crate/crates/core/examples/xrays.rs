//! Coordinate X-rays of polygons and the distance mean built from them.

use taxicab_tomo::distmean::{coordinate_xray, DistanceMean};
use taxicab_tomo::{Axis, Point, Polygon};

fn main() -> taxicab_tomo::Result<()> {
    let triangle = Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])?;
    let l = Polygon::from_coords(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])?;
    let pentagon = Polygon::from_coords(&[(0.0, 0.0), (3.0, 0.5), (4.0, 2.0), (1.5, 3.5), (-0.5, 2.0)])?;

    for (name, p) in [("triangle", &triangle), ("L-shape", &l), ("pentagon", &pentagon)] {
        println!("{name} (area {}):", p.area());
        for axis in Axis::BOTH {
            let x = coordinate_xray(p, axis);
            let knots: Vec<String> = x.knots().iter().map(|(t, v)| format!("({t}, {v:.3})")).collect();
            println!("  X{}: {}", axis.number(), knots.join(" "));
        }
        let f = DistanceMean::of_polygon(p);
        for q in [Point::new(0.0, 0.0), Point::new(0.5, 0.5), Point::new(1.0, 1.0)] {
            let g = f.gradient(q);
            println!("  f({}, {}) = {:.6}, gradient ({:.4}, {:.4})", q.x, q.y, f.eval(q), g[0], g[1]);
        }
    }

    // Inside the unit square f(x) = (x1 - 1/2)^2 + (x2 - 1/2)^2 + 1/2.
    let square = DistanceMean::of_polygon(&Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])?);
    for q in [Point::new(0.25, 0.75), Point::new(0.0, 0.0), Point::new(0.9, 0.1)] {
        let closed = (q.x - 0.5).powi(2) + (q.y - 0.5).powi(2) + 0.5;
        println!("square: f({}, {}) = {} (closed form {closed})", q.x, q.y, square.eval(q));
    }
    Ok(())
}
