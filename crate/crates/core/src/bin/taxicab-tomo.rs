use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use taxicab_tomo::bisect::{bisect_exact, bisect_stochastic_from, StepSchedule, DEFAULT_EXACT_TOL};
use taxicab_tomo::discrete::{lav_fill, reconstruct, Reconstruction};
use taxicab_tomo::distmean::coordinate_xray;
use taxicab_tomo::geometry::sample_uniform;
use taxicab_tomo::gridrecon::{reconstruct_grid, Mode};
use taxicab_tomo::{io, render, Axis, Error, Point, SeededRng};

#[derive(Parser)]
#[command(name = "taxicab-tomo", version, about = "Taxicab distance means and coordinate X-ray tomography")]
struct Cli {
    /// Write results and a manifest.json here instead of printing them.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Uniform random points in a polygon.
    Sample {
        polygon: PathBuf,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bisecting point of a polygon.
    Bisect {
        polygon: PathBuf,
        /// Solve for the point exactly instead of running the stochastic recursion.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 100_000)]
        iterations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Starting point `x,y`; defaults to the first sample.
        #[arg(long, value_parser = parse_point)]
        start: Option<Point>,
    },
    /// Binary matrix from row and column sums.
    ReconDiscrete {
        sums: PathBuf,
        /// Also emit every matrix of the initial filling.
        #[arg(long)]
        trace: bool,
    },
    /// hv-convex grid set from two step X-rays.
    ReconGrid {
        x1: PathBuf,
        x2: PathBuf,
        #[arg(long, short = 'n', default_value_t = 8)]
        resolution: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Greedy)]
        mode: ModeArg,
    },
    /// Coordinate X-rays of a polygon.
    Xray { polygon: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Greedy,
    Antigreedy,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Greedy => Mode::Greedy,
            ModeArg::Antigreedy => Mode::Antigreedy,
        }
    }
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let x: f64 = x.trim().parse().map_err(|_| format!("bad abscissa {x:?}"))?;
    let y: f64 = y.trim().parse().map_err(|_| format!("bad ordinate {y:?}"))?;
    Ok(Point::new(x, y))
}

#[derive(Serialize)]
struct Manifest {
    command: &'static str,
    version: &'static str,
    inputs: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    outputs: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    summary: serde_json::Value,
}

/// Collects output files, or prints the primary output when no directory is
/// given.
struct Sink {
    dir: Option<PathBuf>,
    written: Vec<String>,
}

impl Sink {
    fn new(dir: Option<PathBuf>) -> Result<Self, Error> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(Sink {
            dir,
            written: Vec::new(),
        })
    }

    /// Writes `name` into the output directory; prints it when `primary` and
    /// there is no directory.
    fn emit(&mut self, name: &str, contents: &[u8], primary: bool) -> Result<(), Error> {
        match &self.dir {
            Some(d) => {
                fs::write(d.join(name), contents)?;
                self.written.push(name.to_string());
            }
            None if primary => print!("{}", String::from_utf8_lossy(contents)),
            None => {}
        }
        Ok(())
    }

    fn finish(mut self, mut manifest: Manifest) -> Result<(), Error> {
        if let Some(d) = &self.dir {
            manifest.outputs = std::mem::take(&mut self.written);
            let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
            fs::write(d.join("manifest.json"), text + "\n")?;
        }
        Ok(())
    }
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

enum Outcome {
    Done,
    Infeasible,
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let mut sink = Sink::new(cli.out_dir)?;
    let version = env!("CARGO_PKG_VERSION");
    match cli.command {
        Command::Sample { polygon, count, seed } => {
            let p = io::read_polygon(&polygon)?;
            let mut rng = SeededRng::new(seed);
            let points = sample_uniform(&p, count, &mut rng)?;
            let mut csv = Vec::new();
            io::write_points_csv(&mut csv, &points)?;
            sink.emit("points.csv", &csv, true)?;
            sink.emit("points.svg", render::points_svg(&p, &points).as_bytes(), false)?;
            sink.finish(Manifest {
                command: "sample",
                version,
                inputs: serde_json::json!({ "polygon": path_str(&polygon), "count": count }),
                seed: Some(seed),
                outputs: Vec::new(),
                summary: serde_json::Value::Null,
            })?;
        }
        Command::Bisect {
            polygon,
            exact,
            iterations,
            seed,
            start,
        } => {
            let p = io::read_polygon(&polygon)?;
            let target = bisect_exact(&p, DEFAULT_EXACT_TOL)?;
            let (point, seed) = if exact {
                (target, None)
            } else {
                let mut rng = SeededRng::new(seed);
                let run = bisect_stochastic_from(&p, start, iterations, &mut rng, &StepSchedule::harmonic())?;
                let mut csv = Vec::new();
                io::write_trajectory_csv(&mut csv, &run.trajectory)?;
                sink.emit("trajectory.csv", &csv, false)?;
                let svg = render::trajectory_svg(&p, &run.trajectory, Some(target));
                sink.emit("trajectory.svg", svg.as_bytes(), false)?;
                (run.final_point(), Some(seed))
            };
            sink.emit("point.txt", format!("{} {}\n", point.x, point.y).as_bytes(), true)?;
            sink.finish(Manifest {
                command: "bisect",
                version,
                inputs: serde_json::json!({
                    "polygon": path_str(&polygon),
                    "exact": exact,
                    "iterations": (!exact).then_some(iterations),
                    "start": start.map(|s| [s.x, s.y]),
                }),
                seed,
                outputs: Vec::new(),
                summary: serde_json::json!({ "point": [point.x, point.y], "exact": [target.x, target.y] }),
            })?;
        }
        Command::ReconDiscrete { sums: path, trace } => {
            let sums = io::read_sums(&path)?;
            let result = reconstruct(&sums)?;
            if trace {
                let fill = lav_fill(&sums)?;
                sink.emit("trace.txt", (fill.trace_text() + "\n").as_bytes(), true)?;
            }
            let summary = match &result {
                Reconstruction::Solved {
                    matrix,
                    seeded,
                    deficiency_history,
                } => {
                    if trace && sink.dir.is_none() {
                        println!("## result");
                    }
                    sink.emit("matrix.txt", matrix.to_string().as_bytes(), true)?;
                    sink.emit("matrix.pgm", io::matrix_to_pgm(matrix).as_bytes(), false)?;
                    serde_json::json!({
                        "verdict": "solved",
                        "seeded_ones": seeded,
                        "augmentations": deficiency_history.len(),
                    })
                }
                Reconstruction::Infeasible { max_flow, required } => {
                    let msg = format!("infeasible: maximum flow {max_flow} < required {required}\n");
                    sink.emit("verdict.txt", msg.as_bytes(), false)?;
                    print!("{msg}");
                    serde_json::json!({ "verdict": "infeasible", "max_flow": max_flow, "required": required })
                }
            };
            sink.finish(Manifest {
                command: "recon-discrete",
                version,
                inputs: serde_json::json!({ "sums": path_str(&path), "trace": trace }),
                seed: None,
                outputs: Vec::new(),
                summary,
            })?;
            if !result.is_solved() {
                return Ok(Outcome::Infeasible);
            }
        }
        Command::ReconGrid {
            x1,
            x2,
            resolution,
            mode,
        } => {
            let a = io::read_step_xray_csv(&x1)?;
            let b = io::read_step_xray_csv(&x2)?;
            let run = reconstruct_grid(&a, &b, resolution, mode.into())?;
            sink.emit("gridset.txt", run.set.to_string().as_bytes(), true)?;
            sink.emit("gridset.svg", render::gridset_svg(&run.set, &run.grid).as_bytes(), false)?;
            let bb = run.grid.bbox;
            sink.finish(Manifest {
                command: "recon-grid",
                version,
                inputs: serde_json::json!({
                    "x1": path_str(&x1),
                    "x2": path_str(&x2),
                    "resolution": resolution,
                    "mode": Mode::from(mode).to_string(),
                }),
                seed: None,
                outputs: Vec::new(),
                summary: serde_json::json!({
                    "box": [bb.x0, bb.x1, bb.y0, bb.y1],
                    "cells": run.set.count(),
                    "deletions": run.deletions.len(),
                    "objective": run.objective.last(),
                }),
            })?;
        }
        Command::Xray { polygon } => {
            let p = io::read_polygon(&polygon)?;
            for axis in Axis::BOTH {
                let mut csv = Vec::new();
                io::write_profile_csv(&mut csv, &coordinate_xray(&p, axis))?;
                let name = format!("xray{}.csv", axis.number());
                if sink.dir.is_none() {
                    println!("# axis {}", axis.number());
                }
                sink.emit(&name, &csv, true)?;
            }
            sink.finish(Manifest {
                command: "xray",
                version,
                inputs: serde_json::json!({ "polygon": path_str(&polygon) }),
                seed: None,
                outputs: Vec::new(),
                summary: serde_json::json!({ "area": p.area() }),
            })?;
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Infeasible) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
