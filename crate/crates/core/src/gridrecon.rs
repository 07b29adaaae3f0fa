//! Reconstruction of an hv-convex planar set from its two coordinate X-rays
//! at grid resolution.
//!
//! The bounding box `B = supp X_1K × supp X_2K` is cut into `n × n` cells.
//! Starting from the full box, cells are deleted one at a time as long as the
//! remaining union `L` stays hv-convex, 4-connected and satisfies
//! `f_L >= f_K` at every cell centre. The greedy mode deletes the cell with
//! the largest drop of `Σ f_L` over the centres, the antigreedy mode the one
//! with the smallest drop.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point;

/// `∫_a^b |c - s| ds` for `a <= b`.
fn abs_integral(c: f64, a: f64, b: f64) -> f64 {
    if c <= a {
        ((b - c) * (b - c) - (a - c) * (a - c)) / 2.0
    } else if c >= b {
        ((c - a) * (c - a) - (c - b) * (c - b)) / 2.0
    } else {
        ((c - a) * (c - a) + (b - c) * (b - c)) / 2.0
    }
}

/// A nonnegative step function: `values[k]` on `[breakpoints[k], breakpoints[k + 1]]`,
/// zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct StepXRay {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl StepXRay {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breakpoints.len() < 2 || values.len() + 1 != breakpoints.len() {
            return Err(Error::invalid(format!(
                "{} breakpoints need {} values, got {}",
                breakpoints.len(),
                breakpoints.len().saturating_sub(1),
                values.len()
            )));
        }
        if breakpoints.iter().chain(&values).any(|v| !v.is_finite()) {
            return Err(Error::invalid("step X-ray has a non-finite entry"));
        }
        if let Some(w) = breakpoints.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::invalid(format!(
                "breakpoints must increase strictly, got {} then {}",
                w[0], w[1]
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v < 0.0) {
            return Err(Error::invalid(format!("negative X-ray value {v}")));
        }
        Ok(StepXRay {
            breakpoints,
            values,
        })
    }

    /// Builds from `(t_start, t_end, value)` intervals given in increasing,
    /// non-overlapping order. Gaps are filled with zero.
    pub fn from_intervals(intervals: &[(f64, f64, f64)]) -> Result<Self> {
        let Some(&(first, _, _)) = intervals.first() else {
            return Err(Error::invalid("step X-ray has no intervals"));
        };
        let mut breakpoints = vec![first];
        let mut values = Vec::new();
        for (k, &(a, b, v)) in intervals.iter().enumerate() {
            if b <= a {
                return Err(Error::invalid(format!("interval {} is empty: [{a}, {b}]", k + 1)));
            }
            let last = *breakpoints.last().unwrap();
            if a < last {
                return Err(Error::invalid(format!("interval {} overlaps its predecessor", k + 1)));
            }
            if a > last {
                breakpoints.push(a);
                values.push(0.0);
            }
            breakpoints.push(b);
            values.push(v);
        }
        StepXRay::new(breakpoints, values)
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (w[0], w[1], v))
    }

    /// Closure of `{t : X(t) > 0}`, or `None` for the zero function.
    pub fn support(&self) -> Option<(f64, f64)> {
        let mut pos = self.intervals().filter(|&(_, _, v)| v > 0.0);
        let (a, mut b, _) = pos.next()?;
        for (_, hi, _) in pos {
            b = hi;
        }
        Some((a, b))
    }

    pub fn total(&self) -> f64 {
        self.intervals().map(|(a, b, v)| v * (b - a)).sum()
    }

    /// `∫_lo^hi X(t) dt`.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        self.intervals()
            .map(|(a, b, v)| v * (b.min(hi) - a.max(lo)).max(0.0))
            .sum()
    }

    /// `∫ |c - t| X(t) dt`.
    pub fn abs_moment(&self, c: f64) -> f64 {
        self.intervals()
            .filter(|&(_, _, v)| v != 0.0)
            .map(|(a, b, v)| v * abs_integral(c, a, b))
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

/// `supp X_1 × supp X_2`.
pub fn bounding_box(x1: &StepXRay, x2: &StepXRay) -> Result<Rect> {
    let (Some((x0, xe)), Some((y0, ye))) = (x1.support(), x2.support()) else {
        return Err(Error::invalid("X-ray with empty support"));
    };
    Ok(Rect {
        x0,
        x1: xe,
        y0,
        y1: ye,
    })
}

/// `n × n` cells of a box. Row `r` counts from the top, column `c` from the
/// left; control points are the cell centres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlGrid {
    pub bbox: Rect,
    pub n: usize,
}

impl ControlGrid {
    pub fn new(bbox: Rect, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("resolution must be at least 1"));
        }
        if !(bbox.width() > 0.0 && bbox.height() > 0.0) {
            return Err(Error::invalid("box has zero width or height"));
        }
        Ok(ControlGrid { bbox, n })
    }

    pub fn cell_width(&self) -> f64 {
        self.bbox.width() / self.n as f64
    }

    pub fn cell_height(&self) -> f64 {
        self.bbox.height() / self.n as f64
    }

    /// `t¹_i = a + i (b - a) / n` for `i = 0..=n`.
    pub fn x_node(&self, i: usize) -> f64 {
        self.bbox.x0 + i as f64 * self.bbox.width() / self.n as f64
    }

    /// `t²_j = d - j (d - c) / n` for `j = 0..=n`, decreasing.
    pub fn y_node(&self, j: usize) -> f64 {
        self.bbox.y1 - j as f64 * self.bbox.height() / self.n as f64
    }

    /// `[x_node(c), x_node(c + 1)]`.
    pub fn col_interval(&self, c: usize) -> (f64, f64) {
        (self.x_node(c), self.x_node(c + 1))
    }

    /// `[y_node(r + 1), y_node(r)]`.
    pub fn row_interval(&self, r: usize) -> (f64, f64) {
        (self.y_node(r + 1), self.y_node(r))
    }

    pub fn center(&self, row: usize, col: usize) -> Point {
        let (a, b) = self.col_interval(col);
        let (c, d) = self.row_interval(row);
        Point::new((a + b) / 2.0, (c + d) / 2.0)
    }

    pub fn cell(&self, row: usize, col: usize) -> Rect {
        let (x0, x1) = self.col_interval(col);
        let (y0, y1) = self.row_interval(row);
        Rect { x0, x1, y0, y1 }
    }
}

/// Occupancy of the `n × n` cells, row-major with row 0 at the top.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridSet {
    n: usize,
    cells: Vec<bool>,
}

impl GridSet {
    pub fn full(n: usize) -> Self {
        GridSet {
            n,
            cells: vec![true; n * n],
        }
    }

    pub fn empty(n: usize) -> Self {
        GridSet {
            n,
            cells: vec![false; n * n],
        }
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut set = GridSet::empty(n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "grid row {} has {} cells, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => set.set(r, c, true),
                    _ => return Err(Error::invalid(format!("cell ({}, {}) is {v}", r + 1, c + 1))),
                }
            }
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cells[row * self.n + col] = value;
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn occupied(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).filter(move |&k| self.cells[k]).map(move |k| (k / n, k % n))
    }

    pub fn row_counts(&self) -> Vec<usize> {
        (0..self.n)
            .map(|r| (0..self.n).filter(|&c| self.get(r, c)).count())
            .collect()
    }

    pub fn col_counts(&self) -> Vec<usize> {
        (0..self.n)
            .map(|c| (0..self.n).filter(|&r| self.get(r, c)).count())
            .collect()
    }

    /// Every row and every column is a single contiguous run or empty.
    pub fn is_hv_convex(&self) -> bool {
        let n = self.n;
        let contiguous = |line: &mut dyn Iterator<Item = bool>| {
            let mut runs = 0;
            let mut prev = false;
            for v in line {
                if v && !prev {
                    runs += 1;
                }
                prev = v;
            }
            runs <= 1
        };
        (0..n).all(|r| contiguous(&mut (0..n).map(|c| self.get(r, c))))
            && (0..n).all(|c| contiguous(&mut (0..n).map(|r| self.get(r, c))))
    }

    /// One 4-connected component. The empty set is not connected.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.occupied().next() else {
            return false;
        };
        let n = self.n;
        let mut seen = vec![false; n * n];
        seen[start.0 * n + start.1] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some((r, c)) = stack.pop() {
            let nbrs = [
                (r.wrapping_sub(1), c),
                (r + 1, c),
                (r, c.wrapping_sub(1)),
                (r, c + 1),
            ];
            for (rr, cc) in nbrs {
                if rr < n && cc < n && self.get(rr, cc) && !seen[rr * n + cc] {
                    seen[rr * n + cc] = true;
                    reached += 1;
                    stack.push((rr, cc));
                }
            }
        }
        reached == self.count()
    }

    /// Coordinate X-rays of the union of occupied cells.
    pub fn xrays(&self, grid: &ControlGrid) -> (StepXRay, StepXRay) {
        let n = self.n;
        let (w, h) = (grid.cell_width(), grid.cell_height());
        let xs: Vec<f64> = (0..=n).map(|i| grid.x_node(i)).collect();
        let ys: Vec<f64> = (0..=n).rev().map(|j| grid.y_node(j)).collect();
        let cols = self.col_counts().iter().map(|&k| k as f64 * h).collect();
        let rows = self.row_counts().iter().rev().map(|&k| k as f64 * w).collect();
        (
            StepXRay::new(xs, cols).expect("grid nodes increase"),
            StepXRay::new(ys, rows).expect("grid nodes increase"),
        )
    }
}

impl fmt::Debug for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GridSet {}x{}", self.n, self.n)?;
        write!(f, "{self}")
    }
}

/// Space-separated `0`/`1`, top row first.
impl fmt::Display for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|c| if self.get(r, c) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `f_K` at every control point, indexed `[row][col]`.
pub fn target_values(x1: &StepXRay, x2: &StepXRay, grid: &ControlGrid) -> Vec<Vec<f64>> {
    (0..grid.n)
        .map(|r| {
            (0..grid.n)
                .map(|c| {
                    let y = grid.center(r, c);
                    x1.abs_moment(y.x) + x2.abs_moment(y.y)
                })
                .collect()
        })
        .collect()
}

/// Exact taxicab distance mean of the union of occupied cells at `x`.
pub fn gridset_distmean(set: &GridSet, grid: &ControlGrid, x: Point) -> f64 {
    let (w, h) = (grid.cell_width(), grid.cell_height());
    set.occupied()
        .map(|(r, c)| {
            let (a, b) = grid.col_interval(c);
            let (lo, hi) = grid.row_interval(r);
            h * abs_integral(x.x, a, b) + w * abs_integral(x.y, lo, hi)
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Greedy,
    Antigreedy,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Mode::Greedy),
            "antigreedy" => Ok(Mode::Antigreedy),
            _ => Err(Error::invalid(format!("unknown mode {s:?}, expected greedy or antigreedy"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Greedy => "greedy",
            Mode::Antigreedy => "antigreedy",
        })
    }
}

/// Result of [`reconstruct_grid`].
#[derive(Debug, Clone)]
pub struct GridRun {
    pub grid: ControlGrid,
    pub set: GridSet,
    /// Deleted cells `(row, col)` in order.
    pub deletions: Vec<(usize, usize)>,
    /// `Σ (f_L - f_K) / n²` over the control points, before the first
    /// deletion and after each one.
    pub objective: Vec<f64>,
    pub targets: Vec<Vec<f64>>,
    /// `f_L` of the final set at every control point.
    pub values: Vec<Vec<f64>>,
}

impl GridRun {
    /// Smallest `f_L - f_K` over the control points.
    pub fn min_slack(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .zip(self.targets.iter().flatten())
            .map(|(l, k)| l - k)
            .fold(f64::INFINITY, f64::min)
    }
}

const SLACK_TOL: f64 = 1e-9;
const TIE_TOL: f64 = 1e-9;

/// Runs the deletion procedure and returns only the final set.
pub fn greedy_reconstruct(x1: &StepXRay, x2: &StepXRay, n: usize, mode: Mode) -> Result<GridSet> {
    reconstruct_grid(x1, x2, n, mode).map(|run| run.set)
}

/// Runs the deletion procedure and records its history.
///
/// Equal drops (within a relative `1e-9`) are resolved in favour of the
/// deletion that leaves the larger minimum slack `f_L - f_K`, then by
/// `(row, col)`. Without the slack rule an early deletion of an outer cell
/// can block the cells that actually lie outside `K`.
pub fn reconstruct_grid(x1: &StepXRay, x2: &StepXRay, n: usize, mode: Mode) -> Result<GridRun> {
    let bbox = bounding_box(x1, x2)?;
    let grid = ControlGrid::new(bbox, n)?;
    let (t1, t2) = (x1.total(), x2.total());
    if (t1 - t2).abs() > 1e-9 * t1.max(t2) {
        return Err(Error::invalid(format!(
            "X-rays enclose different areas: {t1} and {t2}"
        )));
    }
    let (w, h) = (grid.cell_width(), grid.cell_height());
    let centres_x: Vec<f64> = (0..n).map(|c| grid.center(0, c).x).collect();
    let centres_y: Vec<f64> = (0..n).map(|r| grid.center(r, 0).y).collect();
    // Contribution of column c (resp. row r) of a cell to f at a control
    // abscissa (resp. ordinate): a cell (r, c) adds cx[i][c] + ry[j][r] at
    // control point (j, i).
    let cx: Vec<Vec<f64>> = centres_x
        .iter()
        .map(|&x| (0..n).map(|c| {
            let (a, b) = grid.col_interval(c);
            h * abs_integral(x, a, b)
        }).collect())
        .collect();
    let ry: Vec<Vec<f64>> = centres_y
        .iter()
        .map(|&y| (0..n).map(|r| {
            let (a, b) = grid.row_interval(r);
            w * abs_integral(y, a, b)
        }).collect())
        .collect();
    let col_drop: Vec<f64> = (0..n).map(|c| (0..n).map(|i| cx[i][c]).sum()).collect();
    let row_drop: Vec<f64> = (0..n).map(|r| (0..n).map(|j| ry[j][r]).sum()).collect();

    let targets = target_values(x1, x2, &grid);
    let mut set = GridSet::full(n);
    let mut values: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| (0..n).map(|c| cx[i][c]).sum::<f64>() * n as f64 + (0..n).map(|r| ry[j][r]).sum::<f64>() * n as f64)
                .collect()
        })
        .collect();
    let scale = targets.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = SLACK_TOL * scale;
    let norm = (n * n) as f64;
    let objective_of = |values: &[Vec<f64>]| -> f64 {
        values
            .iter()
            .flatten()
            .zip(targets.iter().flatten())
            .map(|(l, k)| l - k)
            .sum::<f64>()
            / norm
    };
    let mut objective = vec![objective_of(&values)];
    let mut deletions = Vec::new();

    loop {
        // (drop, min slack, row, col)
        let mut best: Option<(f64, f64, usize, usize)> = None;
        for (r, c) in set.occupied().collect::<Vec<_>>() {
            if !is_run_end(&set, r, c) {
                continue;
            }
            let mut slack = f64::INFINITY;
            'check: for j in 0..n {
                for i in 0..n {
                    let s = values[j][i] - cx[i][c] - ry[j][r] - targets[j][i];
                    if s < -tol {
                        slack = f64::NEG_INFINITY;
                        break 'check;
                    }
                    slack = slack.min(s);
                }
            }
            if slack == f64::NEG_INFINITY {
                continue;
            }
            set.set(r, c, false);
            let connected = set.is_connected();
            set.set(r, c, true);
            if !connected {
                continue;
            }
            let drop = n as f64 * (col_drop[c] + row_drop[r]);
            let better = match best {
                None => true,
                Some((bd, bs, _, _)) => {
                    let tie = (drop - bd).abs() <= TIE_TOL * drop.abs().max(bd.abs());
                    if tie {
                        slack > bs
                    } else {
                        match mode {
                            Mode::Greedy => drop > bd,
                            Mode::Antigreedy => drop < bd,
                        }
                    }
                }
            };
            if better {
                best = Some((drop, slack, r, c));
            }
        }
        let Some((_, _, r, c)) = best else { break };
        set.set(r, c, false);
        for (j, row) in values.iter_mut().enumerate() {
            for (i, v) in row.iter_mut().enumerate() {
                *v -= cx[i][c] + ry[j][r];
            }
        }
        deletions.push((r, c));
        objective.push(objective_of(&values));
    }

    Ok(GridRun {
        grid,
        set,
        deletions,
        objective,
        targets,
        values,
    })
}

/// An occupied cell at an end of its row run and of its column run, so that
/// removing it keeps the set hv-convex.
fn is_run_end(set: &GridSet, r: usize, c: usize) -> bool {
    let n = set.n();
    let row_end = c == 0 || !set.get(r, c - 1) || c + 1 == n || !set.get(r, c + 1);
    let col_end = r == 0 || !set.get(r - 1, c) || r + 1 == n || !set.get(r + 1, c);
    row_end && col_end
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> StepXRay {
        StepXRay::new(vec![0.0, 1.0], vec![1.0]).unwrap()
    }

    #[test]
    fn step_xray_basics() {
        let x = StepXRay::from_intervals(&[(0.0, 1.0, 2.0), (1.0, 2.0, 1.0)]).unwrap();
        assert_eq!(x.support(), Some((0.0, 2.0)));
        assert_eq!(x.total(), 3.0);
        assert_eq!(x.integral(0.5, 1.5), 1.5);
        let gap = StepXRay::from_intervals(&[(0.0, 1.0, 0.0), (2.0, 3.0, 1.0)]).unwrap();
        assert_eq!(gap.breakpoints(), &[0.0, 1.0, 2.0, 3.0]);
        assert_eq!(gap.support(), Some((2.0, 3.0)));
        assert!(StepXRay::from_intervals(&[]).is_err());
        assert!(StepXRay::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(StepXRay::new(vec![0.0, 1.0], vec![-1.0]).is_err());
        let zero = StepXRay::new(vec![0.0, 1.0], vec![0.0]).unwrap();
        assert!(bounding_box(&zero, &unit()).is_err());
    }

    #[test]
    fn boxes() {
        let tall = StepXRay::new(vec![0.0, 2.0], vec![1.0]).unwrap();
        let b = bounding_box(&unit(), &tall).unwrap();
        assert_eq!((b.x0, b.x1, b.y0, b.y1), (0.0, 1.0, 0.0, 2.0));
    }

    #[test]
    fn targets_of_unit_square() {
        let b = bounding_box(&unit(), &unit()).unwrap();
        let g1 = ControlGrid::new(b, 1).unwrap();
        assert!((target_values(&unit(), &unit(), &g1)[0][0] - 0.5).abs() < 1e-15);
        let g2 = ControlGrid::new(b, 2).unwrap();
        assert_eq!(g2.center(0, 0), Point::new(0.25, 0.75));
        assert!((target_values(&unit(), &unit(), &g2)[0][0] - 0.625).abs() < 1e-15);
    }

    #[test]
    fn gridset_distmean_values() {
        let b = bounding_box(&unit(), &unit()).unwrap();
        let g = ControlGrid::new(b, 1).unwrap();
        assert!((gridset_distmean(&GridSet::full(1), &g, Point::new(0.5, 0.5)) - 0.5).abs() < 1e-15);
        assert_eq!(gridset_distmean(&GridSet::empty(3), &g, Point::new(0.5, 0.5)), 0.0);

        let tall = Rect { x0: 0.0, x1: 1.0, y0: 0.0, y1: 2.0 };
        let g = ControlGrid::new(tall, 2).unwrap();
        let column = GridSet::from_rows(&[[1, 0], [1, 0]]).unwrap();
        // cells [0, 0.5] x [0, 1] and [0, 0.5] x [1, 2]
        let v = gridset_distmean(&column, &g, Point::new(0.25, 1.0));
        assert!((v - (2.0 * 0.0625 + 0.5 * 1.0)).abs() < 1e-15);
    }

    #[test]
    fn predicates() {
        assert!(GridSet::full(3).is_hv_convex());
        assert!(GridSet::full(3).is_connected());
        let diag = GridSet::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert!(diag.is_hv_convex());
        assert!(!diag.is_connected());
        let gap = GridSet::from_rows(&[[1, 0, 1], [0, 0, 0], [0, 0, 0]]).unwrap();
        assert!(!gap.is_hv_convex());
        assert!(!GridSet::empty(2).is_connected());
    }

    #[test]
    fn own_xrays_at_resolution_one() {
        let set = greedy_reconstruct(&unit(), &unit(), 1, Mode::Greedy).unwrap();
        assert_eq!(set, GridSet::full(1));
    }

    #[test]
    fn box_is_its_own_reconstruction() {
        for n in [1, 2, 3, 5] {
            for mode in [Mode::Greedy, Mode::Antigreedy] {
                let run = reconstruct_grid(&unit(), &unit(), n, mode).unwrap();
                assert_eq!(run.set, GridSet::full(n));
                assert!(run.deletions.is_empty());
            }
        }
    }

    #[test]
    fn left_half_fills_its_own_box() {
        // The box is the support product [0, 0.5] x [0, 1], which the left
        // half fills completely.
        let x1 = StepXRay::new(vec![0.0, 0.5], vec![1.0]).unwrap();
        let x2 = StepXRay::new(vec![0.0, 1.0], vec![0.5]).unwrap();
        let run = reconstruct_grid(&x1, &x2, 2, Mode::Greedy).unwrap();
        assert_eq!(run.grid.bbox.x1, 0.5);
        assert_eq!(run.set, GridSet::full(2));
    }

    #[test]
    fn l_shape_at_native_resolution() {
        let target = GridSet::from_rows(&[[1, 0], [1, 1]]).unwrap();
        let b = Rect { x0: 0.0, x1: 2.0, y0: 0.0, y1: 2.0 };
        let g = ControlGrid::new(b, 2).unwrap();
        let (x1, x2) = target.xrays(&g);
        assert_eq!(x1.values(), &[2.0, 1.0]);
        assert_eq!(x2.values(), &[2.0, 1.0]);
        for mode in [Mode::Greedy, Mode::Antigreedy] {
            let run = reconstruct_grid(&x1, &x2, 2, mode).unwrap();
            assert_eq!(run.set, target);
            assert!(run.min_slack() >= -1e-9);
            assert!(run.objective.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn mismatched_totals_rejected() {
        let x2 = StepXRay::new(vec![0.0, 1.0], vec![2.0]).unwrap();
        assert!(reconstruct_grid(&unit(), &x2, 2, Mode::Greedy).is_err());
        assert!(reconstruct_grid(&unit(), &unit(), 0, Mode::Greedy).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("antigreedy".parse::<Mode>().unwrap(), Mode::Antigreedy);
        assert!("best".parse::<Mode>().is_err());
        assert_eq!(Mode::Greedy.to_string(), "greedy");
    }
}
