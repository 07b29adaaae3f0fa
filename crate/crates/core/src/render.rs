//! Static SVG pictures.

use std::fmt::Write;

use crate::geometry::{Point, Polygon};
use crate::gridrecon::{ControlGrid, GridSet, Rect};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;

/// Maps world coordinates into a square canvas with the y axis pointing up.
struct Canvas {
    view: Rect,
    scale: f64,
    body: String,
}

impl Canvas {
    fn new(view: Rect) -> Self {
        let span = view.width().max(view.height()).max(f64::MIN_POSITIVE);
        Canvas {
            view,
            scale: (SIZE - 2.0 * MARGIN) / span,
            body: String::new(),
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            MARGIN + (p.x - self.view.x0) * self.scale,
            SIZE - MARGIN - (p.y - self.view.y0) * self.scale,
        )
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
             viewBox=\"0 0 {SIZE} {SIZE}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn polygon_rect(p: &Polygon) -> Rect {
    let (lo, hi) = p.bounding_box();
    Rect {
        x0: lo.x,
        x1: hi.x,
        y0: lo.y,
        y1: hi.y,
    }
}

/// The polygon with the iterates on top; later iterates are drawn darker.
/// `target`, if given, is marked with a red cross.
pub fn trajectory_svg(p: &Polygon, trajectory: &[Point], target: Option<Point>) -> String {
    let mut view = polygon_rect(p);
    for q in trajectory {
        view.x0 = view.x0.min(q.x);
        view.x1 = view.x1.max(q.x);
        view.y0 = view.y0.min(q.y);
        view.y1 = view.y1.max(q.y);
    }
    let mut c = Canvas::new(view);
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|&v| {
            let (x, y) = c.map(v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        c.body,
        "<polygon points=\"{}\" fill=\"#e8eef6\" stroke=\"#34495e\" stroke-width=\"1.5\"/>",
        pts.join(" ")
    );
    let last = trajectory.len().saturating_sub(1).max(1) as f64;
    for (k, &q) in trajectory.iter().enumerate() {
        let grey = (220.0 * (1.0 - k as f64 / last)).round() as u8;
        let (x, y) = c.map(q);
        let _ = writeln!(
            c.body,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"1.5\" fill=\"rgb({grey},{grey},{grey})\"/>"
        );
    }
    if let Some(t) = target {
        let (x, y) = c.map(t);
        let _ = writeln!(
            c.body,
            "<path d=\"M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}\" stroke=\"red\" stroke-width=\"2\"/>",
            x - 6.0,
            y - 6.0,
            x + 6.0,
            y + 6.0,
            x - 6.0,
            y + 6.0,
            x + 6.0,
            y - 6.0
        );
    }
    c.finish()
}

/// Sample points over the polygon outline.
pub fn points_svg(p: &Polygon, points: &[Point]) -> String {
    let mut c = Canvas::new(polygon_rect(p));
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|&v| {
            let (x, y) = c.map(v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        c.body,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#34495e\" stroke-width=\"1.5\"/>",
        pts.join(" ")
    );
    for &q in points {
        let (x, y) = c.map(q);
        let _ = writeln!(c.body, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"1.2\" fill=\"#222\"/>");
    }
    c.finish()
}

/// Occupied cells filled, empty cells outlined, over the bounding box.
pub fn gridset_svg(set: &GridSet, grid: &ControlGrid) -> String {
    let mut c = Canvas::new(grid.bbox);
    for r in 0..grid.n {
        for col in 0..grid.n {
            let cell = grid.cell(r, col);
            let (x, y) = c.map(Point::new(cell.x0, cell.y1));
            let (w, h) = (cell.width() * c.scale, cell.height() * c.scale);
            let fill = if set.get(r, col) { "#34495e" } else { "none" };
            let _ = writeln!(
                c.body,
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{w:.2}\" height=\"{h:.2}\" fill=\"{fill}\" stroke=\"#bbb\" stroke-width=\"0.5\"/>"
            );
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gridrecon::Rect;

    #[test]
    fn svgs_are_well_formed() {
        let p = Polygon::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap();
        let traj = [Point::new(0.2, 0.2), Point::new(0.4, 0.6), Point::new(0.5, 0.5)];
        let s = trajectory_svg(&p, &traj, Some(Point::new(0.5, 0.5)));
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<circle").count(), 3);
        assert!(s.contains("rgb(220,220,220)") && s.contains("rgb(0,0,0)"));

        let grid = ControlGrid::new(Rect { x0: 0.0, x1: 1.0, y0: 0.0, y1: 1.0 }, 2).unwrap();
        let set = GridSet::from_rows(&[[1, 0], [1, 1]]).unwrap();
        let s = gridset_svg(&set, &grid);
        assert_eq!(s.matches("fill=\"#34495e\"").count(), 3);
        assert_eq!(points_svg(&p, &traj).matches("<circle").count(), 3);
    }
}
