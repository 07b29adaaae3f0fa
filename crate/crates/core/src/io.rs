//! Plain-text file formats.
//!
//! | data | format |
//! |------|--------|
//! | polygon | one `x y` vertex per line, counterclockwise, `#` comments |
//! | profile | CSV `t,value`, one row per knot (a repeated `t` is a jump) |
//! | points | CSV `x,y` |
//! | trajectory | CSV `k,x,y` |
//! | sums | `R: 3 1 4 4 2` and `S: 4 3 1 4 2` |
//! | matrix, grid set | rows of space-separated `0`/`1` |
//! | step X-ray | CSV `t_start,t_end,value`, header optional |

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::discrete::{BinaryMatrix, SumVectors};
use crate::distmean::PiecewiseLinearProfile;
use crate::error::{Error, Result};
use crate::geometry::{Point, Polygon};
use crate::gridrecon::{GridSet, StepXRay};

fn parse_f64(s: &str, line: usize, what: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} {s:?} is not a number")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("{what} {s:?} is not finite")));
    }
    Ok(v)
}

/// Lines with `#` comments removed, paired with 1-based line numbers, blank
/// lines skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

pub fn parse_polygon(text: &str) -> Result<Polygon> {
    let mut vertices = Vec::new();
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                line,
                format!("expected `x y`, found {} fields", fields.len()),
            ));
        }
        let x = parse_f64(fields[0], line, "abscissa")?;
        let y = parse_f64(fields[1], line, "ordinate")?;
        vertices.push(Point::new(x, y));
    }
    Polygon::new(vertices)
}

pub fn read_polygon(path: impl AsRef<Path>) -> Result<Polygon> {
    parse_polygon(&fs::read_to_string(path)?)
}

pub fn format_polygon(p: &Polygon) -> String {
    p.vertices().iter().map(|v| format!("{} {}\n", v.x, v.y)).collect()
}

pub fn write_points_csv<W: Write>(out: W, points: &[Point]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y"])?;
    for p in points {
        w.write_record([p.x.to_string(), p.y.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// `k,x,y` with `k = 0` for the starting point.
pub fn write_trajectory_csv<W: Write>(out: W, trajectory: &[Point]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["k", "x", "y"])?;
    for (k, p) in trajectory.iter().enumerate() {
        w.write_record([k.to_string(), p.x.to_string(), p.y.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_profile_csv<W: Write>(out: W, profile: &PiecewiseLinearProfile) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "value"])?;
    for &(t, v) in profile.knots() {
        w.write_record([t.to_string(), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_profile_csv(text: &str) -> Result<PiecewiseLinearProfile> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = r.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["t", "value"] {
        return Err(Error::parse(1, "expected header `t,value`"));
    }
    let mut knots = Vec::new();
    for record in r.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != 2 {
            return Err(Error::parse(line, format!("expected 2 fields, found {}", record.len())));
        }
        knots.push((
            parse_f64(&record[0], line, "t")?,
            parse_f64(&record[1], line, "value")?,
        ));
    }
    PiecewiseLinearProfile::new(knots)
}

pub fn read_profile_csv(path: impl AsRef<Path>) -> Result<PiecewiseLinearProfile> {
    parse_profile_csv(&fs::read_to_string(path)?)
}

/// Reads `R: ...` and `S: ...` lines, in either order.
pub fn parse_sums(text: &str) -> Result<SumVectors> {
    let mut rows = None;
    let mut cols = None;
    for (line, content) in content_lines(text) {
        let Some((key, rest)) = content.split_once(':') else {
            return Err(Error::parse(line, "expected `R: ...` or `S: ...`"));
        };
        let values = rest
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("{s:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let slot = match key.trim() {
            "R" => &mut rows,
            "S" => &mut cols,
            other => return Err(Error::parse(line, format!("unknown key {other:?}"))),
        };
        if slot.replace(values).is_some() {
            return Err(Error::parse(line, format!("{} given twice", key.trim())));
        }
    }
    match (rows, cols) {
        (Some(r), Some(s)) => SumVectors::new(r, s),
        (None, _) => Err(Error::invalid("missing `R:` line")),
        (_, None) => Err(Error::invalid("missing `S:` line")),
    }
}

pub fn read_sums(path: impl AsRef<Path>) -> Result<SumVectors> {
    parse_sums(&fs::read_to_string(path)?)
}

pub fn format_sums(sums: &SumVectors) -> String {
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    format!("R: {}\nS: {}\n", join(sums.rows()), join(sums.cols()))
}

/// Rows of `0`/`1` separated by whitespace.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut rows = Vec::new();
    for (line, content) in content_lines(text) {
        let row = content
            .split_whitespace()
            .map(|s| match s {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                _ => Err(Error::parse(line, format!("entry {s:?} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    BinaryMatrix::from_rows(&rows)
}

/// Plain PGM (P2), ones black on white.
pub fn matrix_to_pgm(a: &BinaryMatrix) -> String {
    let mut s = format!("P2\n{} {}\n1\n", a.cols(), a.rows());
    for row in a.to_rows() {
        let line: Vec<&str> = row.iter().map(|&v| if v == 1 { "0" } else { "1" }).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_gridset(text: &str) -> Result<GridSet> {
    let a = parse_matrix(text)?;
    if a.rows() != a.cols() {
        return Err(Error::invalid(format!("grid set must be square, got {}x{}", a.rows(), a.cols())));
    }
    GridSet::from_rows(&a.to_rows())
}

pub fn parse_step_xray_csv(text: &str) -> Result<StepXRay> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut intervals = Vec::new();
    for (k, record) in r.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if k == 0 && record.get(0) == Some("t_start") {
            continue;
        }
        if record.len() != 3 {
            return Err(Error::parse(line, format!("expected 3 fields, found {}", record.len())));
        }
        intervals.push((
            parse_f64(&record[0], line, "t_start")?,
            parse_f64(&record[1], line, "t_end")?,
            parse_f64(&record[2], line, "value")?,
        ));
    }
    if intervals.is_empty() {
        return Err(Error::invalid("step X-ray file has no intervals"));
    }
    StepXRay::from_intervals(&intervals)
}

pub fn read_step_xray_csv(path: impl AsRef<Path>) -> Result<StepXRay> {
    parse_step_xray_csv(&fs::read_to_string(path)?)
}

pub fn write_step_xray_csv<W: Write>(out: W, x: &StepXRay) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t_start", "t_end", "value"])?;
    for (a, b, v) in x.intervals() {
        w.write_record([a.to_string(), b.to_string(), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
