//! Finite lattice sets, their coordinate X-rays and taxicab distance sums.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geometry::{Axis, Point};

use super::matrix::BinaryMatrix;

pub type LatticePoint = (i64, i64);

fn coord(p: LatticePoint, axis: Axis) -> i64 {
    match axis {
        Axis::X => p.0,
        Axis::Y => p.1,
    }
}

/// Position `(row, col)` (0-based) of an `m`-row matrix as a lattice point.
///
/// Row `i` (1-based) is the horizontal line at ordinate `m - i + 1` and
/// column `j` is the vertical line at abscissa `j`. This is the only place
/// the convention is spelled out.
pub fn matrix_to_lattice(row: usize, col: usize, m: usize) -> LatticePoint {
    debug_assert!(row < m);
    ((col + 1) as i64, (m - row) as i64)
}

/// Inverse of [`matrix_to_lattice`]; `None` outside the `m × n` picture.
pub fn lattice_to_matrix(p: LatticePoint, m: usize, n: usize) -> Option<(usize, usize)> {
    let (x, y) = p;
    if x < 1 || x > n as i64 || y < 1 || y > m as i64 {
        return None;
    }
    Some((m - y as usize, x as usize - 1))
}

/// A finite set of distinct lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSet {
    points: BTreeSet<LatticePoint>,
}

impl LatticeSet {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if !set.insert(p) {
                return Err(Error::invalid(format!("duplicate lattice point {p:?}")));
            }
        }
        Ok(LatticeSet { points: set })
    }

    /// The ones of `a`, placed by [`matrix_to_lattice`].
    pub fn from_matrix(a: &BinaryMatrix) -> Self {
        let m = a.rows();
        let points = (0..m)
            .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j))
            .map(|(i, j)| matrix_to_lattice(i, j, m))
            .collect();
        LatticeSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.points.iter().copied()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.points.contains(&p)
    }
}

/// Counts of a lattice set on the lines `coord = t`; zero off the support.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiscreteXRay {
    counts: BTreeMap<i64, u64>,
}

impl DiscreteXRay {
    pub fn from_counts(counts: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (t, c) in counts {
            if c > 0 {
                *map.entry(t).or_insert(0) += c;
            }
        }
        DiscreteXRay { counts: map }
    }

    pub fn get(&self, t: i64) -> u64 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&t, &c)| (t, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ_t X(t) |c - t|`.
    pub fn abs_moment(&self, c: i64) -> i64 {
        self.iter().map(|(t, n)| n as i64 * (c - t).abs()).sum()
    }
}

/// `f(x) = Σ_{p ∈ F} |x¹ - p¹| + |x² - p²|`, exact on lattice points.
pub fn discrete_distance_sum(f: &LatticeSet, x: LatticePoint) -> i64 {
    f.iter().map(|p| (x.0 - p.0).abs() + (x.1 - p.1).abs()).sum()
}

/// Real-argument version of [`discrete_distance_sum`].
pub fn discrete_distance_sum_at(f: &LatticeSet, x: Point) -> f64 {
    f.iter()
        .map(|p| (x.x - p.0 as f64).abs() + (x.y - p.1 as f64).abs())
        .sum()
}

/// X-rays along the first (vertical lines) and second (horizontal lines) axis.
pub fn discrete_xrays(f: &LatticeSet) -> (DiscreteXRay, DiscreteXRay) {
    let along = |axis| DiscreteXRay::from_counts(f.iter().map(|p| (coord(p, axis), 1)));
    (along(Axis::X), along(Axis::Y))
}

pub fn distance_sum_via_xrays(xrays: &(DiscreteXRay, DiscreteXRay), x: LatticePoint) -> i64 {
    xrays.0.abs_moment(x.0) + xrays.1.abs_moment(x.1)
}

/// One-sided partial derivatives `(D⁺, D⁻)` of the distance sum along `axis`:
/// `D⁺ = |F ≤ x| - |F > x|`, `D⁻ = |F < x| - |F ≥ x|`.
pub fn one_sided_partials(f: &LatticeSet, x: LatticePoint, axis: Axis) -> (i64, i64) {
    let c = coord(x, axis);
    let (mut below, mut on, mut above) = (0i64, 0i64, 0i64);
    for p in f.iter() {
        match coord(p, axis).cmp(&c) {
            std::cmp::Ordering::Less => below += 1,
            std::cmp::Ordering::Equal => on += 1,
            std::cmp::Ordering::Greater => above += 1,
        }
    }
    (below + on - above, below - (on + above))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pts: &[LatticePoint]) -> LatticeSet {
        LatticeSet::new(pts.iter().copied()).unwrap()
    }

    #[test]
    fn distance_sums() {
        assert_eq!(discrete_distance_sum(&set(&[(0, 0)]), (3, 4)), 7);
        assert_eq!(discrete_distance_sum(&set(&[(0, 0), (2, 0)]), (1, 0)), 2);
        let f = set(&[(0, 0), (2, 0)]);
        assert_eq!(distance_sum_via_xrays(&discrete_xrays(&f), (1, 0)), 2);
        assert_eq!(discrete_distance_sum_at(&f, Point::new(1.5, 0.5)), 3.0);
    }

    #[test]
    fn xrays() {
        let (x1, x2) = discrete_xrays(&set(&[(1, 1), (1, 2)]));
        assert_eq!(x1.iter().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(x2.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        let (x1, x2) = discrete_xrays(&set(&[(1, 1), (1, 2), (2, 1), (2, 2)]));
        assert_eq!(x1.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 2)]);
        assert_eq!(x1, x2);
    }

    #[test]
    fn partials() {
        assert_eq!(one_sided_partials(&set(&[(0, 0)]), (0, 5), Axis::X), (1, -1));
        assert_eq!(one_sided_partials(&set(&[(0, 0), (2, 0)]), (1, 0), Axis::X), (0, 0));
        let f = set(&[(0, 0), (1, 0), (2, 0)]);
        let (dp, dm) = one_sided_partials(&f, (1, 0), Axis::X);
        assert_eq!((dp, dm), (1, -1));
        assert_eq!((dp - dm) / 2, 1);
    }

    #[test]
    fn duplicates_rejected() {
        assert!(LatticeSet::new([(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn coordinate_convention_roundtrips() {
        let (m, n) = (4, 3);
        for i in 0..m {
            for j in 0..n {
                let p = matrix_to_lattice(i, j, m);
                assert_eq!(lattice_to_matrix(p, m, n), Some((i, j)));
            }
        }
        assert_eq!(matrix_to_lattice(0, 0, 5), (1, 5));
        assert_eq!(lattice_to_matrix((0, 1), m, n), None);
    }
}
