//! Simple polygons: validation, area, ear-clipping triangulation and uniform
//! sampling.

use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Below this the polygon is treated as degenerate.
pub const MIN_AREA: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn coord(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
        }
    }

    pub fn with_coord(mut self, axis: Axis, value: f64) -> Self {
        match axis {
            Axis::X => self.x = value,
            Axis::Y => self.y = value,
        }
        self
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// Coordinate axis of the plane. `X` is the first coordinate (abscissa).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub const BOTH: [Axis; 2] = [Axis::X, Axis::Y];

    /// One-based index, 1 for the abscissa and 2 for the ordinate.
    pub fn number(self) -> usize {
        match self {
            Axis::X => 1,
            Axis::Y => 2,
        }
    }

    pub fn from_number(n: usize) -> Option<Axis> {
        match n {
            1 => Some(Axis::X),
            2 => Some(Axis::Y),
            _ => None,
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed segment intersection test; touching endpoints count.
fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(p1, q1, q2))
        || (d2 == 0.0 && on_segment(p2, q1, q2))
        || (d3 == 0.0 && on_segment(q1, p1, p2))
        || (d4 == 0.0 && on_segment(q2, p1, p2))
}

fn shoelace(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    twice / 2.0
}

/// A simple polygon with counterclockwise vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
    area: f64,
}

impl Polygon {
    /// Validates and builds a polygon. Clockwise input is rejected, not
    /// reoriented.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::invalid(format!(
                "polygon needs at least 3 vertices, got {n}"
            )));
        }
        if let Some(v) = vertices.iter().find(|v| !v.x.is_finite() || !v.y.is_finite()) {
            return Err(Error::invalid(format!("non-finite vertex ({}, {})", v.x, v.y)));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::invalid(format!(
                    "consecutive vertices {} and {} coincide",
                    i,
                    (i + 1) % n
                )));
            }
        }
        check_simple(&vertices)?;
        let area = shoelace(&vertices);
        if area.abs() <= MIN_AREA {
            return Err(Error::invalid("degenerate polygon (zero area)"));
        }
        if area < 0.0 {
            return Err(Error::invalid(
                "vertices are in clockwise order; counterclockwise is required",
            ));
        }
        Ok(Polygon { vertices, area })
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self> {
        Polygon::new(coords.iter().map(|&c| c.into()).collect())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace area; always positive for a constructed polygon.
    pub fn area(&self) -> f64 {
        self.area
    }

    /// Edges as `(start, end)` pairs in boundary order.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// `(min, max)` corners of the axis-parallel bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices[1..] {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Closed point-in-polygon test: boundary points are inside.
    pub fn contains(&self, p: Point) -> bool {
        point_in_polygon(self, p)
    }
}

fn check_simple(vertices: &[Point]) -> Result<()> {
    let n = vertices.len();
    let edge = |i: usize| (vertices[i], vertices[(i + 1) % n]);
    for i in 0..n {
        let (a1, a2) = edge(i);
        for j in (i + 1)..n {
            let (b1, b2) = edge(j);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Shared vertex is expected; a fold-back along the same line is not.
                let (shared, p, q) = if j == i + 1 { (a2, a1, b2) } else { (a1, a2, b1) };
                if cross(shared, p, q) == 0.0 {
                    let dp = (p.x - shared.x, p.y - shared.y);
                    let dq = (q.x - shared.x, q.y - shared.y);
                    if dp.0 * dq.0 + dp.1 * dq.1 > 0.0 {
                        return Err(Error::invalid(format!(
                            "edges {i} and {j} overlap (polygon folds back on itself)"
                        )));
                    }
                }
                continue;
            }
            if segments_intersect(a1, a2, b1, b2) {
                return Err(Error::invalid(format!(
                    "polygon is not simple: edges {i} and {j} intersect"
                )));
            }
        }
    }
    Ok(())
}

/// Triangles of a polygon, as vertex-index triples into the parent polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn areas(&self, polygon: &Polygon) -> Vec<f64> {
        let v = polygon.vertices();
        self.triangles
            .iter()
            .map(|&[a, b, c]| cross(v[a], v[b], v[c]) / 2.0)
            .collect()
    }
}

pub fn polygon_area(p: &Polygon) -> f64 {
    p.area()
}

fn in_triangle_closed(p: Point, a: Point, b: Point, c: Point) -> bool {
    cross(a, b, p) >= 0.0 && cross(b, c, p) >= 0.0 && cross(c, a, p) >= 0.0
}

/// Ear clipping, O(n²). Collinear vertices are dropped from the working chain
/// without emitting a zero-area triangle.
pub fn triangulate(p: &Polygon) -> Result<Triangulation> {
    let v = p.vertices();
    let mut chain: Vec<usize> = (0..v.len()).collect();
    let mut triangles = Vec::with_capacity(v.len().saturating_sub(2));

    while chain.len() > 3 {
        let m = chain.len();
        let mut clipped = false;
        for k in 0..m {
            let ia = chain[(k + m - 1) % m];
            let ib = chain[k];
            let ic = chain[(k + 1) % m];
            let (a, b, c) = (v[ia], v[ib], v[ic]);
            let turn = cross(a, b, c);
            if turn == 0.0 {
                chain.remove(k);
                clipped = true;
                break;
            }
            if turn < 0.0 {
                continue;
            }
            let blocked = chain.iter().any(|&j| {
                j != ia
                    && j != ib
                    && j != ic
                    && v[j] != a
                    && v[j] != b
                    && v[j] != c
                    && in_triangle_closed(v[j], a, b, c)
            });
            if !blocked {
                triangles.push([ia, ib, ic]);
                chain.remove(k);
                clipped = true;
                break;
            }
        }
        if !clipped {
            return Err(Error::invalid(
                "ear clipping found no ear; polygon is not simple",
            ));
        }
    }
    if chain.len() == 3 && cross(v[chain[0]], v[chain[1]], v[chain[2]]) > 0.0 {
        triangles.push([chain[0], chain[1], chain[2]]);
    }
    Ok(Triangulation { triangles })
}

/// Draws uniformly distributed points from a polygon by choosing a triangle
/// with probability proportional to its area and then a uniform point inside.
#[derive(Debug, Clone)]
pub struct UniformSampler {
    corners: Vec<[Point; 3]>,
    cumulative: Vec<f64>,
    total: f64,
}

impl UniformSampler {
    pub fn new(p: &Polygon) -> Result<Self> {
        let tri = triangulate(p)?;
        let areas = tri.areas(p);
        let v = p.vertices();
        let corners = tri
            .triangles
            .iter()
            .map(|&[a, b, c]| [v[a], v[b], v[c]])
            .collect();
        let mut cumulative = Vec::with_capacity(areas.len());
        let mut acc = 0.0;
        for a in &areas {
            acc += a;
            cumulative.push(acc);
        }
        Ok(UniformSampler {
            corners,
            cumulative,
            total: acc,
        })
    }

    pub fn total_area(&self) -> f64 {
        self.total
    }

    pub fn sample(&mut self, rng: &mut SeededRng) -> Point {
        let x = rng.next_f64() * self.total;
        // smallest k with x <= A_1 + ... + A_k
        let k = self
            .cumulative
            .iter()
            .position(|&c| x <= c)
            .unwrap_or(self.cumulative.len() - 1);
        let [p, q, r] = self.corners[k];
        let mut u = rng.next_f64();
        let mut w = rng.next_f64();
        if u + w > 1.0 {
            u = 1.0 - u;
            w = 1.0 - w;
        }
        Point::new(
            p.x + u * (q.x - p.x) + w * (r.x - p.x),
            p.y + u * (q.y - p.y) + w * (r.y - p.y),
        )
    }
}

/// `count` uniform points from `p`, drawn in sequence from `rng`.
pub fn sample_uniform(p: &Polygon, count: usize, rng: &mut SeededRng) -> Result<Vec<Point>> {
    if count == 0 {
        return Err(Error::invalid("sample count must be at least 1"));
    }
    let mut sampler = UniformSampler::new(p)?;
    Ok((0..count).map(|_| sampler.sample(rng)).collect())
}

fn point_on_segment(x: Point, a: Point, b: Point) -> bool {
    let len = ((b.x - a.x).powi(2) + (b.y - a.y).powi(2)).sqrt();
    let scale = len.max(a.x.abs().max(a.y.abs())).max(1.0);
    cross(a, b, x).abs() <= 1e-12 * scale * len && on_segment(x, a, b)
}

/// Closed containment test: boundary points count as inside.
pub fn point_in_polygon(p: &Polygon, x: Point) -> bool {
    if p.edges().any(|(a, b)| point_on_segment(x, a, b)) {
        return true;
    }
    let mut inside = false;
    for (a, b) in p.edges() {
        if (a.y > x.y) != (b.y > x.y) {
            let at = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if x.x < at {
                inside = !inside;
            }
        }
    }
    inside
}

/// Which side of an axis-parallel line to keep when clipping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Coordinate `<= t`.
    Below,
    /// Coordinate `>= t`.
    Above,
}

/// Area of the part of `p` on one side of the line `coord(axis) = t`,
/// by Sutherland-Hodgman clipping against that half-plane.
pub fn clipped_area(p: &Polygon, axis: Axis, t: f64, side: Side) -> f64 {
    let keep = |q: Point| match side {
        Side::Below => q.coord(axis) <= t,
        Side::Above => q.coord(axis) >= t,
    };
    let mut out: Vec<Point> = Vec::with_capacity(p.len() + 2);
    for (a, b) in p.edges() {
        let (ka, kb) = (keep(a), keep(b));
        if ka {
            out.push(a);
        }
        if ka != kb {
            let (ca, cb) = (a.coord(axis), b.coord(axis));
            let s = (t - ca) / (cb - ca);
            let other = axis.other();
            let o = a.coord(other) + s * (b.coord(other) - a.coord(other));
            out.push(Point::default().with_coord(axis, t).with_coord(other, o));
        }
    }
    if out.len() < 3 {
        0.0
    } else {
        shoelace(&out).abs()
    }
}
