use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const SQUARE: &str = "0 0\n1 0\n1 1\n0 1\n";
const TRIANGLE: &str = "0 0\n1 0\n0 1\n";
const L_SHAPE: &str = "# L\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";
const WORKED_SUMS: &str = "R: 3 1 4 4 2\nS: 4 3 1 4 2\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_taxicab-tomo"))
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn run(args: &[&str], paths: &[&Path]) -> Output {
    bin().args(args).args(paths).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sample_writes_points_inside() {
    let dir = TempDir::new().unwrap();
    let poly = write(&dir, "square.txt", SQUARE);
    let o = run(&["sample", "--count", "5", "--seed", "7"], &[&poly]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let (x, y) = l.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|&(x, y)| (0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y)));
}

#[test]
fn same_seed_gives_identical_files() {
    let dir = TempDir::new().unwrap();
    let poly = write(&dir, "square.txt", SQUARE);
    let outs: Vec<PathBuf> = ["a", "b"].iter().map(|d| dir.path().join(d)).collect();
    for out in &outs {
        let o = bin()
            .args(["sample", "--count", "50", "--seed", "7", "--out-dir"])
            .arg(out)
            .arg(&poly)
            .output()
            .unwrap();
        assert!(o.status.success());
    }
    for name in ["points.csv", "points.svg", "manifest.json"] {
        assert_eq!(
            fs::read(outs[0].join(name)).unwrap(),
            fs::read(outs[1].join(name)).unwrap(),
            "{name}"
        );
    }
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(outs[0].join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["seed"], 7);
    assert_eq!(manifest["command"], "sample");
}

#[test]
fn malformed_polygon_names_the_line() {
    let dir = TempDir::new().unwrap();
    let poly = write(&dir, "bad.txt", "0 0\n1 0\n1 one\n0 1\n");
    let o = run(&["sample"], &[&poly]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn clockwise_polygon_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let poly = write(&dir, "cw.txt", "0 0\n0 1\n1 1\n1 0\n");
    let o = run(&["bisect", "--exact"], &[&poly]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("clockwise"));
}

#[test]
fn exact_bisection() {
    let dir = TempDir::new().unwrap();
    let sq = write(&dir, "square.txt", SQUARE);
    assert_eq!(stdout(&run(&["bisect", "--exact"], &[&sq])), "0.5 0.5\n");
    let l = write(&dir, "l.txt", L_SHAPE);
    let text = stdout(&run(&["bisect", "--exact"], &[&l]));
    let x: f64 = text.split_whitespace().next().unwrap().parse().unwrap();
    assert!((x - 0.75).abs() < 1e-9);
}

#[test]
fn stochastic_bisection_lands_near_centre() {
    let dir = TempDir::new().unwrap();
    let sq = write(&dir, "square.txt", SQUARE);
    let out = dir.path().join("run");
    let o = bin()
        .args(["bisect", "--iterations", "100000", "--seed", "1", "--out-dir"])
        .arg(&out)
        .arg(&sq)
        .output()
        .unwrap();
    assert!(o.status.success());
    let point = fs::read_to_string(out.join("point.txt")).unwrap();
    let v: Vec<f64> = point.split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert!((v[0] - 0.5).hypot(v[1] - 0.5) < 0.1);
    let traj = fs::read_to_string(out.join("trajectory.csv")).unwrap();
    assert!(traj.starts_with("k,x,y\n0,"));
    assert_eq!(traj.lines().count(), 100_002);
    assert!(fs::read_to_string(out.join("trajectory.svg")).unwrap().contains("<svg"));
}

#[test]
fn explicit_start_is_first_iterate() {
    let dir = TempDir::new().unwrap();
    let sq = write(&dir, "square.txt", SQUARE);
    let out = dir.path().join("run");
    let o = bin()
        .args(["bisect", "--iterations", "3", "--start", "3,-2", "--out-dir"])
        .arg(&out)
        .arg(&sq)
        .output()
        .unwrap();
    assert!(o.status.success());
    let traj = fs::read_to_string(out.join("trajectory.csv")).unwrap();
    assert_eq!(traj.lines().nth(1), Some("0,3,-2"));
    assert_eq!(traj.lines().nth(2), Some("1,2,-1"));
}

#[test]
fn discrete_worked_example() {
    let dir = TempDir::new().unwrap();
    let sums = write(&dir, "sums.txt", WORKED_SUMS);
    let out = dir.path().join("run");
    let o = bin()
        .args(["recon-discrete", "--trace", "--out-dir"])
        .arg(&out)
        .arg(&sums)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(
        fs::read_to_string(out.join("matrix.txt")).unwrap(),
        "1 0 0 1 1\n0 1 0 0 0\n1 1 1 1 0\n1 1 0 1 1\n1 0 0 1 0\n"
    );
    assert!(fs::read_to_string(out.join("matrix.pgm")).unwrap().starts_with("P2\n5 5\n1\n"));
    let trace = fs::read_to_string(out.join("trace.txt")).unwrap();
    assert!(trace.starts_with("## step 0\n# start\n"));
    assert!(trace.contains("# column 3 saturated"));
    assert!(trace.contains("# row 4 forced"));
}

#[test]
fn infeasible_and_incompatible_sums() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "R: 2 0\nS: 2 0\n");
    let o = run(&["recon-discrete"], &[&bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("infeasible"));

    let inc = write(&dir, "inc.txt", "R: 1 1\nS: 1 0\n");
    let o = run(&["recon-discrete"], &[&inc]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn grid_reconstruction_of_rectangle() {
    let dir = TempDir::new().unwrap();
    let x1 = write(&dir, "x1.csv", "t_start,t_end,value\n0,2,1\n");
    let x2 = write(&dir, "x2.csv", "0,1,2\n");
    let greedy = run(&["recon-grid", "--resolution", "4"], &[&x1, &x2]);
    assert!(greedy.status.success());
    assert_eq!(stdout(&greedy), "1 1 1 1\n".repeat(4));
    let anti = run(&["recon-grid", "-n", "4", "--mode", "antigreedy"], &[&x1, &x2]);
    assert_eq!(stdout(&anti), stdout(&greedy));
}

#[test]
fn grid_outputs_and_empty_input() {
    let dir = TempDir::new().unwrap();
    let x1 = write(&dir, "x1.csv", "0,1,2\n1,2,1\n");
    let x2 = write(&dir, "x2.csv", "0,1,2\n1,2,1\n");
    let out = dir.path().join("run");
    let o = bin()
        .args(["recon-grid", "-n", "2", "--out-dir"])
        .arg(&out)
        .args([&x1, &x2])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(out.join("gridset.txt")).unwrap(), "1 0\n1 1\n");
    assert!(fs::read_to_string(out.join("gridset.svg")).unwrap().contains("<rect"));

    let empty = write(&dir, "empty.csv", "");
    let o = run(&["recon-grid"], &[&empty, &x2]);
    assert_eq!(o.status.code(), Some(2));
}

fn profile(text: &str, axis: usize) -> Vec<(f64, f64)> {
    let block = text.split(&format!("# axis {axis}\n")).nth(1).unwrap();
    block
        .lines()
        .skip(1)
        .take_while(|l| !l.starts_with('#'))
        .map(|l| {
            let (t, v) = l.split_once(',').unwrap();
            (t.parse().unwrap(), v.parse().unwrap())
        })
        .collect()
}

#[test]
fn xray_profiles() {
    let dir = TempDir::new().unwrap();
    let sq = write(&dir, "sq.txt", SQUARE);
    let text = stdout(&run(&["xray"], &[&sq]));
    assert_eq!(profile(&text, 1), vec![(0.0, 1.0), (1.0, 1.0)]);
    assert_eq!(profile(&text, 2), vec![(0.0, 1.0), (1.0, 1.0)]);

    let tri = write(&dir, "tri.txt", TRIANGLE);
    let text = stdout(&run(&["xray"], &[&tri]));
    assert_eq!(profile(&text, 1), vec![(0.0, 1.0), (1.0, 0.0)]);

    let l = write(&dir, "l.txt", L_SHAPE);
    let out = dir.path().join("run");
    let o = bin().args(["xray", "--out-dir"]).arg(&out).arg(&l).output().unwrap();
    assert!(o.status.success());
    assert_eq!(
        fs::read_to_string(out.join("xray1.csv")).unwrap(),
        "t,value\n0,2\n1,2\n1,1\n2,1\n"
    );
}
