//! Coordinate X-rays of polygons and the taxicab distance mean function.
//!
//! For a body `K` in the plane,
//!
//! ```text
//! f_K(x) = ∫_K |x¹ - y¹| + |x² - y²| dy = Σ_i ∫ |xⁱ - t| X_iK(t) dt
//! ```
//!
//! where `X_iK(t)` is the length of the slice of `K` by the line `yⁱ = t`.
//! For a polygon each X-ray is piecewise linear, so `f_K` and its gradient
//! are computed exactly from the two profiles. Areas are not normalised:
//! `f_K` scales linearly with the area of `K`.

use crate::error::{Error, Result};
use crate::geometry::{Axis, Point, Polygon};

/// A nonnegative piecewise-linear function with compact support.
///
/// Stored as knots `(t, value)` with nondecreasing `t`. Between two knots with
/// distinct abscissae the function is linear; two knots sharing the same `t`
/// encode a jump. The function is zero outside `[first t, last t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearProfile {
    knots: Vec<(f64, f64)>,
}

impl PiecewiseLinearProfile {
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::invalid("profile needs at least two knots"));
        }
        for (i, &(t, v)) in knots.iter().enumerate() {
            if !t.is_finite() || !v.is_finite() {
                return Err(Error::invalid(format!("knot {i} is not finite")));
            }
            if v < 0.0 {
                return Err(Error::invalid(format!("knot {i} has negative value {v}")));
            }
        }
        for (i, w) in knots.windows(2).enumerate() {
            if w[1].0 < w[0].0 {
                return Err(Error::invalid(format!(
                    "knots {i} and {} are out of order",
                    i + 1
                )));
            }
        }
        for (i, w) in knots.windows(3).enumerate() {
            if w[0].0 == w[2].0 {
                return Err(Error::invalid(format!(
                    "more than two knots at t = {} (index {i})",
                    w[0].0
                )));
            }
        }
        if knots[0].0 == knots[knots.len() - 1].0 {
            return Err(Error::invalid("profile support has zero length"));
        }
        Ok(PiecewiseLinearProfile { knots })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    /// Distinct knot abscissae in increasing order.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.knots.iter().map(|k| k.0).collect();
        out.dedup();
        out
    }

    pub fn support(&self) -> (f64, f64) {
        (self.knots[0].0, self.knots[self.knots.len() - 1].0)
    }

    /// Linear pieces `(t0, v0, t1, v1)` with `t0 < t1`.
    pub fn segments(&self) -> impl Iterator<Item = (f64, f64, f64, f64)> + '_ {
        self.knots
            .windows(2)
            .filter(|w| w[0].0 < w[1].0)
            .map(|w| (w[0].0, w[0].1, w[1].0, w[1].1))
    }

    /// Value at `t`, taking the right limit at jumps.
    pub fn value_at(&self, t: f64) -> f64 {
        for (t0, v0, t1, v1) in self.segments() {
            if t0 <= t && t < t1 {
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
            }
        }
        let last = self.knots[self.knots.len() - 1];
        if t == last.0 {
            last.1
        } else {
            0.0
        }
    }

    /// Integral over the whole line.
    pub fn total(&self) -> f64 {
        self.segments()
            .map(|(t0, v0, t1, v1)| (t1 - t0) * (v0 + v1) / 2.0)
            .sum()
    }

    /// Integral of the profile over `(-∞, t]`.
    pub fn cumulative(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for (t0, v0, t1, v1) in self.segments() {
            if t <= t0 {
                break;
            }
            if t >= t1 {
                acc += (t1 - t0) * (v0 + v1) / 2.0;
            } else {
                let vt = v0 + (v1 - v0) * (t - t0) / (t1 - t0);
                acc += (t - t0) * (v0 + vt) / 2.0;
                break;
            }
        }
        acc
    }

    /// `∫ |c - t| X(t) dt`, exactly.
    ///
    /// Each linear piece is split at `c`; on every sub-piece the integrand is
    /// a quadratic polynomial, for which the three-point Simpson rule is exact.
    pub fn abs_moment(&self, c: f64) -> f64 {
        let mut acc = 0.0;
        for (t0, v0, t1, v1) in self.segments() {
            let g = |t: f64| v0 + (v1 - v0) * (t - t0) / (t1 - t0);
            let h = |t: f64| (c - t).abs() * g(t);
            let simpson = |p: f64, q: f64| (q - p) / 6.0 * (h(p) + 4.0 * h((p + q) / 2.0) + h(q));
            if c > t0 && c < t1 {
                acc += simpson(t0, c) + simpson(c, t1);
            } else {
                acc += simpson(t0, t1);
            }
        }
        acc
    }
}

/// Slice length of `p` along `axis` as an exact piecewise-linear profile.
///
/// The breakpoints are the distinct vertex coordinates along `axis`. On each
/// open interval between them the same set of edges crosses the slicing line,
/// and the slice length is the signed sum of their crossing coordinates
/// (upper/right boundary edges count positively for a counterclockwise
/// polygon), hence linear.
pub fn coordinate_xray(p: &Polygon, axis: Axis) -> PiecewiseLinearProfile {
    let other = axis.other();
    let mut coords: Vec<f64> = p.vertices().iter().map(|v| v.coord(axis)).collect();
    coords.sort_by(|a, b| a.partial_cmp(b).unwrap());
    coords.dedup();

    let orientation = match axis {
        Axis::X => -1.0,
        Axis::Y => 1.0,
    };
    let slice_at = |a: f64, b: f64, t: f64| -> f64 {
        let mut len = 0.0;
        for (s, e) in p.edges() {
            let (u0, u1) = (s.coord(axis), e.coord(axis));
            if u0 == u1 || u0.min(u1) > a || u0.max(u1) < b {
                continue;
            }
            let w = s.coord(other) + (t - u0) * (e.coord(other) - s.coord(other)) / (u1 - u0);
            len += orientation * (u1 - u0).signum() * w;
        }
        len.max(0.0)
    };

    let mut knots: Vec<(f64, f64)> = Vec::with_capacity(2 * coords.len());
    for w in coords.windows(2) {
        let (a, b) = (w[0], w[1]);
        let va = slice_at(a, b, a);
        let vb = slice_at(a, b, b);
        match knots.last() {
            Some(&(t, v)) if t == a && (v - va).abs() <= 1e-12 * (1.0 + v.abs()) => {}
            _ => knots.push((a, va)),
        }
        knots.push((b, vb));
    }
    PiecewiseLinearProfile::new(knots).expect("polygon slices form a valid profile")
}

/// Both coordinate X-rays of a body, which determine `f_K` completely.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMean {
    pub x1ray: PiecewiseLinearProfile,
    pub x2ray: PiecewiseLinearProfile,
}

impl DistanceMean {
    pub fn new(x1ray: PiecewiseLinearProfile, x2ray: PiecewiseLinearProfile) -> Self {
        DistanceMean { x1ray, x2ray }
    }

    pub fn of_polygon(p: &Polygon) -> Self {
        DistanceMean {
            x1ray: coordinate_xray(p, Axis::X),
            x2ray: coordinate_xray(p, Axis::Y),
        }
    }

    pub fn profile(&self, axis: Axis) -> &PiecewiseLinearProfile {
        match axis {
            Axis::X => &self.x1ray,
            Axis::Y => &self.x2ray,
        }
    }

    /// Area of the body, read off the first X-ray.
    pub fn area(&self) -> f64 {
        self.x1ray.total()
    }

    pub fn eval(&self, x: Point) -> f64 {
        distmean_eval(&self.x1ray, &self.x2ray, x)
    }

    pub fn gradient(&self, x: Point) -> [f64; 2] {
        distmean_gradient(&self.x1ray, &self.x2ray, x)
    }
}

pub fn distmean_eval(x1ray: &PiecewiseLinearProfile, x2ray: &PiecewiseLinearProfile, x: Point) -> f64 {
    x1ray.abs_moment(x.x) + x2ray.abs_moment(x.y)
}

pub fn cumulative_area(profile: &PiecewiseLinearProfile, t: f64) -> f64 {
    profile.cumulative(t)
}

/// `D_i f_K(x) = μ(K ≤_i xⁱ) - μ(xⁱ ≤_i K)`; the slice itself has measure zero.
pub fn distmean_gradient(
    x1ray: &PiecewiseLinearProfile,
    x2ray: &PiecewiseLinearProfile,
    x: Point,
) -> [f64; 2] {
    let part = |p: &PiecewiseLinearProfile, t: f64| 2.0 * p.cumulative(t) - p.total();
    [part(x1ray, x.x), part(x2ray, x.y)]
}
