//! The bisecting point of a planar body: the minimizer of `f_K`, where each
//! axis-parallel line splits the area in half.
//!
//! [`bisect_stochastic`] runs the stochastic gradient recursion
//! `X_{k+1} = X_k - t_{k+1} Q_{k+1}` with `Q_{k+1} = sgn(X_k - P_{k+1})` for
//! uniform samples `P_k` of the body. Since `E(Q | X) = grad f_K(X) / area`,
//! this is a Robbins-Monro scheme. [`bisect_exact`] finds the same point by
//! root finding on the cumulative area along each axis.

use crate::distmean::{DistanceMean, PiecewiseLinearProfile};
use crate::error::{Error, Result};
use crate::geometry::{Axis, Point, Polygon, UniformSampler};
use crate::rng::SeededRng;

pub const DEFAULT_EXACT_TOL: f64 = 1e-10;

/// Componentwise signum of `x - p`, with `sgn(0) = 0`.
pub fn sign_step(x: Point, p: Point) -> [i8; 2] {
    let sgn = |d: f64| {
        if d > 0.0 {
            1
        } else if d < 0.0 {
            -1
        } else {
            0
        }
    };
    [sgn(x.x - p.x), sgn(x.y - p.y)]
}

/// Step sizes `t_k = scale / k^exponent` for `k >= 1`.
///
/// Any exponent in `(1/2, 1]` gives `Σ t_k = ∞` and `Σ t_k² < ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSchedule {
    scale: f64,
    exponent: f64,
}

impl Default for StepSchedule {
    fn default() -> Self {
        StepSchedule::harmonic()
    }
}

impl StepSchedule {
    /// `t_k = 1/k`.
    pub fn harmonic() -> Self {
        StepSchedule {
            scale: 1.0,
            exponent: 1.0,
        }
    }

    pub fn power(scale: f64, exponent: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::invalid(format!("step scale must be positive, got {scale}")));
        }
        if !(exponent > 0.5 && exponent <= 1.0) {
            return Err(Error::invalid(format!(
                "step exponent must lie in (0.5, 1], got {exponent}"
            )));
        }
        Ok(StepSchedule { scale, exponent })
    }

    /// `t_k`, for `k >= 1`.
    pub fn step(&self, k: usize) -> f64 {
        debug_assert!(k >= 1);
        if self.exponent == 1.0 {
            self.scale / k as f64
        } else {
            self.scale / (k as f64).powf(self.exponent)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BisectionRun {
    /// `X_0, ..., X_N`.
    pub trajectory: Vec<Point>,
    pub seed: u64,
    pub iterations: usize,
}

impl BisectionRun {
    pub fn final_point(&self) -> Point {
        *self.trajectory.last().expect("trajectory is never empty")
    }
}

/// Runs the recursion for `iterations` steps starting from the first uniform
/// sample, as in the reference listing.
pub fn bisect_stochastic(
    p: &Polygon,
    iterations: usize,
    rng: &mut SeededRng,
    schedule: &StepSchedule,
) -> Result<BisectionRun> {
    bisect_stochastic_from(p, None, iterations, rng, schedule)
}

/// Like [`bisect_stochastic`]; a given `start` replaces the first sample as
/// `X_0` (no sample is consumed for it). Iterates are not projected back
/// onto the body.
pub fn bisect_stochastic_from(
    p: &Polygon,
    start: Option<Point>,
    iterations: usize,
    rng: &mut SeededRng,
    schedule: &StepSchedule,
) -> Result<BisectionRun> {
    if iterations == 0 {
        return Err(Error::invalid("iterations must be at least 1"));
    }
    let seed = rng.seed();
    let mut sampler = UniformSampler::new(p)?;
    let mut x = match start {
        Some(s) => s,
        None => sampler.sample(rng),
    };
    let mut trajectory = Vec::with_capacity(iterations + 1);
    trajectory.push(x);
    for k in 1..=iterations {
        let sample = sampler.sample(rng);
        let q = sign_step(x, sample);
        let t = schedule.step(k);
        x = Point::new(x.x - t * q[0] as f64, x.y - t * q[1] as f64);
        trajectory.push(x);
    }
    Ok(BisectionRun {
        trajectory,
        seed,
        iterations,
    })
}

/// Median of the cumulative-area function of one profile, by bisection.
pub fn profile_median(profile: &PiecewiseLinearProfile, tol: f64) -> f64 {
    let total = profile.total();
    let half = total / 2.0;
    let (mut lo, mut hi) = profile.support();
    let mut mid = (lo + hi) / 2.0;
    for _ in 0..200 {
        mid = (lo + hi) / 2.0;
        let c = profile.cumulative(mid);
        if (c - half).abs() <= tol * total {
            break;
        }
        if c < half {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * (lo.abs() + hi.abs()) {
            break;
        }
    }
    mid
}

/// The exact minimizer of `f_K`: on each axis, the coordinate where the
/// cumulative area reaches half of the total, within `tol * area`.
pub fn bisect_exact(p: &Polygon, tol: f64) -> Result<Point> {
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tol}")));
    }
    let f = DistanceMean::of_polygon(p);
    Ok(Point::new(
        profile_median(f.profile(Axis::X), tol),
        profile_median(f.profile(Axis::Y), tol),
    ))
}

/// Coordinatewise median, used to summarise repeated stochastic runs.
pub fn coordinatewise_median(points: &[Point]) -> Option<Point> {
    if points.is_empty() {
        return None;
    }
    let med = |mut v: Vec<f64>| {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            (v[n / 2 - 1] + v[n / 2]) / 2.0
        }
    };
    Some(Point::new(
        med(points.iter().map(|p| p.x).collect()),
        med(points.iter().map(|p| p.y).collect()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::sample_uniform;

    fn square() -> Polygon {
        Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(sign_step(Point::new(1.0, 1.0), Point::new(0.0, 0.0)), [1, 1]);
        assert_eq!(sign_step(Point::new(0.0, 2.0), Point::new(1.0, 2.0)), [-1, 0]);
        let p = Point::new(0.3, 0.7);
        assert_eq!(sign_step(p, p), [0, 0]);
    }

    #[test]
    fn schedule() {
        let s = StepSchedule::harmonic();
        assert_eq!(s.step(1), 1.0);
        assert_eq!(s.step(4), 0.25);
        let prefix: Vec<f64> = (1..100).map(|k| s.step(k)).collect();
        assert!(prefix.windows(2).all(|w| w[1] < w[0] && w[1] > 0.0));
        assert!(StepSchedule::power(1.0, 0.5).is_err());
        assert!(StepSchedule::power(0.0, 1.0).is_err());
        let p = StepSchedule::power(2.0, 0.75).unwrap();
        assert!((p.step(16) - 2.0 / 8.0).abs() < 1e-15);
    }

    #[test]
    fn one_iteration_unrolled() {
        let sq = square();
        let run = bisect_stochastic(&sq, 1, &mut SeededRng::new(5), &StepSchedule::harmonic()).unwrap();
        let samples = sample_uniform(&sq, 2, &mut SeededRng::new(5)).unwrap();
        assert_eq!(run.trajectory.len(), 2);
        assert_eq!(run.trajectory[0], samples[0]);
        let q = sign_step(samples[0], samples[1]);
        let expect = Point::new(samples[0].x - q[0] as f64, samples[0].y - q[1] as f64);
        assert_eq!(run.final_point(), expect);
        let again = bisect_stochastic(&sq, 1, &mut SeededRng::new(5), &StepSchedule::harmonic()).unwrap();
        assert_eq!(run, again);
    }

    #[test]
    fn trajectory_steps_are_signed_multiples() {
        let s = StepSchedule::harmonic();
        let run = bisect_stochastic(&square(), 200, &mut SeededRng::new(9), &s).unwrap();
        assert_eq!(run.trajectory.len(), 201);
        for (k, w) in run.trajectory.windows(2).enumerate() {
            let t = s.step(k + 1);
            for d in [(w[0].x - w[1].x) / t, (w[0].y - w[1].y) / t] {
                assert!([-1.0, 0.0, 1.0].iter().any(|q| (d - q).abs() < 1e-9), "{d}");
            }
        }
    }

    #[test]
    fn explicit_start() {
        let start = Point::new(3.0, -2.0);
        let run = bisect_stochastic_from(
            &square(),
            Some(start),
            3,
            &mut SeededRng::new(1),
            &StepSchedule::harmonic(),
        )
        .unwrap();
        assert_eq!(run.trajectory[0], start);
        // every sample lies left of and above the start, so the first step is (-1, +1)
        assert_eq!(run.trajectory[1], Point::new(2.0, -1.0));
    }

    #[test]
    fn exact_minimizers() {
        assert_eq!(bisect_exact(&square(), DEFAULT_EXACT_TOL).unwrap(), Point::new(0.5, 0.5));
        let rect = Polygon::from_coords(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]).unwrap();
        assert_eq!(bisect_exact(&rect, DEFAULT_EXACT_TOL).unwrap(), Point::new(1.0, 0.5));
        let l = Polygon::from_coords(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ])
        .unwrap();
        assert_eq!(bisect_exact(&l, DEFAULT_EXACT_TOL).unwrap(), Point::new(0.75, 0.75));
        assert!(bisect_exact(&l, 0.0).is_err());
    }

    #[test]
    fn median_helper() {
        let pts = [Point::new(1.0, 5.0), Point::new(3.0, 1.0), Point::new(2.0, 2.0)];
        assert_eq!(coordinatewise_median(&pts), Some(Point::new(2.0, 2.0)));
        assert_eq!(coordinatewise_median(&[]), None);
    }
}
