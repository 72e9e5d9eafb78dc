//! Minimal deterministic SVG plots: trajectory path, persistence diagram,
//! lifetime diagram, barcode, and distance series.
//!
//! Zero-dimensional features are drawn in black and one-dimensional
//! features in red throughout. Output is plain string assembly with the
//! default float formatting, so repeated runs are byte-identical.

use crate::persistence::{Barcode, LifetimeDiagram, PersistenceDiagram};
use crate::trajectory::Trajectory;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 48.0;
const BLACK: &str = "#000000";
const RED: &str = "#d62728";

/// Affine map from a data rectangle onto the drawing area (y flipped).
struct Frame {
    x_min: f64,
    x_span: f64,
    y_min: f64,
    y_span: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, width: f64, height: f64) -> Self {
        let pad = |span: f64| if span > 0.0 { span } else { 1.0 };
        Self {
            x_min,
            x_span: pad(x_max - x_min),
            y_min,
            y_span: pad(y_max - y_min),
            width,
            height,
        }
    }

    fn x(&self, v: f64) -> f64 {
        MARGIN + (v - self.x_min) / self.x_span * (self.width - 2.0 * MARGIN)
    }

    fn y(&self, v: f64) -> f64 {
        self.height - MARGIN - (v - self.y_min) / self.y_span * (self.height - 2.0 * MARGIN)
    }
}

fn svg_open(out: &mut String, width: f64, height: f64) {
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));
}

fn axes(out: &mut String, width: f64, height: f64, x_label: &str, y_label: &str) {
    let x0 = MARGIN;
    let y0 = height - MARGIN;
    let x1 = width - MARGIN;
    let y1 = MARGIN;
    out.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"{BLACK}\"/>\n"
    ));
    out.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"{BLACK}\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{x_label}</text>\n",
        (x0 + x1) / 2.0,
        height - 12.0
    ));
    out.push_str(&format!(
        "<text x=\"14\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" \
         transform=\"rotate(-90 14 {})\">{y_label}</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    ));
}

fn circle(out: &mut String, cx: f64, cy: f64, color: &str) {
    out.push_str(&format!(
        "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"{color}\"/>\n"
    ));
}

/// Path of the trajectory in the plane, drawn as a polyline.
pub fn trajectory_svg(trajectory: &Trajectory) -> String {
    let xs = trajectory.points.iter().map(|p| p.x);
    let ys = trajectory.points.iter().map(|p| p.y);
    let frame = Frame::new(
        xs.clone().fold(f64::INFINITY, f64::min),
        xs.fold(f64::NEG_INFINITY, f64::max),
        ys.clone().fold(f64::INFINITY, f64::min),
        ys.fold(f64::NEG_INFINITY, f64::max),
        WIDTH,
        HEIGHT,
    );
    let mut out = String::new();
    svg_open(&mut out, WIDTH, HEIGHT);
    axes(&mut out, WIDTH, HEIGHT, "x (m)", "y (m)");
    let pts: Vec<String> = trajectory
        .points
        .iter()
        .map(|p| format!("{},{}", frame.x(p.x), frame.y(p.y)))
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{BLACK}\" stroke-width=\"1\"/>\n",
        pts.join(" ")
    ));
    out.push_str("</svg>\n");
    out
}

fn color_for(dim: usize) -> &'static str {
    if dim == 0 {
        BLACK
    } else {
        RED
    }
}

/// Persistence diagram scatter with the diagonal, one color per dimension.
pub fn diagram_svg(diagrams: &[&PersistenceDiagram]) -> String {
    let mut hi = 1.0f64;
    for d in diagrams {
        for &(b, dth) in &d.pairs {
            hi = hi.max(b).max(dth);
        }
    }
    let frame = Frame::new(0.0, hi, 0.0, hi, WIDTH, HEIGHT);
    let mut out = String::new();
    svg_open(&mut out, WIDTH, HEIGHT);
    axes(&mut out, WIDTH, HEIGHT, "birth", "death");
    out.push_str(&format!(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{BLACK}\" \
         stroke-dasharray=\"4 3\"/>\n",
        frame.x(0.0),
        frame.y(0.0),
        frame.x(hi),
        frame.y(hi)
    ));
    for d in diagrams {
        for &(b, dth) in &d.pairs {
            circle(&mut out, frame.x(b), frame.y(dth), color_for(d.dim));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Lifetime diagram scatter: birth against lifetime.
pub fn lifetime_svg(lt: &LifetimeDiagram, dim: usize) -> String {
    let mut x_hi = 1.0f64;
    let mut y_hi = 1.0f64;
    for &(a, l) in &lt.points {
        x_hi = x_hi.max(a);
        y_hi = y_hi.max(l);
    }
    let frame = Frame::new(0.0, x_hi, 0.0, y_hi, WIDTH, HEIGHT);
    let mut out = String::new();
    svg_open(&mut out, WIDTH, HEIGHT);
    axes(&mut out, WIDTH, HEIGHT, "birth", "lifetime");
    for &(a, l) in &lt.points {
        circle(&mut out, frame.x(a), frame.y(l), color_for(dim));
    }
    out.push_str("</svg>\n");
    out
}

/// Barcode: one horizontal bar per pair, stacked in list order.
pub fn barcode_svg(barcode: &Barcode) -> String {
    let mut hi = 1.0f64;
    for &(_, b, d) in &barcode.bars {
        hi = hi.max(b).max(d);
    }
    let rows = barcode.bars.len().max(1) as f64;
    let frame = Frame::new(0.0, hi, 0.0, rows, WIDTH, HEIGHT);
    let mut out = String::new();
    svg_open(&mut out, WIDTH, HEIGHT);
    axes(&mut out, WIDTH, HEIGHT, "scale", "feature");
    for (row, &(dim, b, d)) in barcode.bars.iter().enumerate() {
        let y = frame.y(row as f64 + 0.5);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"{}\" \
             stroke-width=\"3\"/>\n",
            frame.x(b),
            frame.x(d),
            color_for(dim)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Distance series line plot. Series element i is drawn at x = i + 1; each
/// value in `marks` draws a red vertical line at that x position (regime
/// boundaries).
pub fn series_svg(series: &[f64], marks: &[f64]) -> String {
    let width = 640.0;
    let height = 360.0;
    let y_hi = series.iter().copied().fold(1e-12, f64::max);
    let x_hi = (series.len() as f64).max(2.0);
    let frame = Frame::new(1.0, x_hi, 0.0, y_hi, width, height);
    let mut out = String::new();
    svg_open(&mut out, width, height);
    axes(&mut out, width, height, "day pair", "distance");
    for &m in marks {
        if m < 1.0 || m > x_hi {
            continue;
        }
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{RED}\" \
             stroke-width=\"2\"/>\n",
            frame.x(m),
            frame.y(0.0),
            frame.x(m),
            frame.y(y_hi)
        ));
    }
    let pts: Vec<String> = series
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("{},{}", frame.x(i as f64 + 1.0), frame.y(v)))
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{BLACK}\" stroke-width=\"1.5\"/>\n",
        pts.join(" ")
    ));
    for (i, &v) in series.iter().enumerate() {
        circle(&mut out, frame.x(i as f64 + 1.0), frame.y(v), BLACK);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::{Trajectory, TrajectoryPoint};

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    fn traj() -> Trajectory {
        let points = vec![
            TrajectoryPoint::new(0.0, 0.0, 0.0),
            TrajectoryPoint::new(1.0, 1.0, 0.5),
            TrajectoryPoint::new(2.0, 1.5, 2.0),
        ];
        Trajectory::new(points, 1, 1).unwrap()
    }

    #[test]
    fn trajectory_plot_has_one_polyline() {
        let svg = trajectory_svg(&traj());
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(count(&svg, "<polyline"), 1);
    }

    #[test]
    fn diagram_plot_colors_dimensions() {
        let pd0 = PersistenceDiagram::new(0, vec![(0.0, 1.0), (0.0, 2.0)]);
        let pd1 = PersistenceDiagram::new(1, vec![(1.0, 1.5)]);
        let svg = diagram_svg(&[&pd0, &pd1]);
        assert_eq!(count(&svg, &format!("fill=\"{BLACK}\"")), 2);
        assert_eq!(count(&svg, &format!("fill=\"{RED}\"")), 1);
        assert_eq!(count(&svg, "stroke-dasharray"), 1);
    }

    #[test]
    fn empty_h1_has_no_red_points() {
        let pd0 = PersistenceDiagram::new(0, vec![(0.0, 1.0)]);
        let pd1 = PersistenceDiagram::new(1, vec![]);
        let svg = diagram_svg(&[&pd0, &pd1]);
        assert_eq!(count(&svg, &format!("fill=\"{RED}\"")), 0);
    }

    #[test]
    fn lifetime_plot_draws_every_point() {
        let lt = LifetimeDiagram {
            points: vec![(0.0, 0.5), (1.0, 1.0), (0.2, 2.0)],
        };
        let svg = lifetime_svg(&lt, 1);
        assert_eq!(count(&svg, "<circle"), 3);
    }

    #[test]
    fn barcode_has_one_bar_per_pair() {
        let pd0 = PersistenceDiagram::new(0, vec![(0.0, 1.0), (0.0, 0.5)]);
        let pd1 = PersistenceDiagram::new(1, vec![(1.0, 1.4)]);
        let bc = crate::persistence::barcode(&[&pd0, &pd1]);
        let svg = barcode_svg(&bc);
        assert_eq!(count(&svg, "stroke-width=\"3\""), 3);
        assert_eq!(count(&svg, RED), 1);
    }

    #[test]
    fn series_plot_marks_maintenance() {
        let series = vec![0.1, 0.2, 1.5, 0.3];
        let with = series_svg(&series, &[2.5]);
        let without = series_svg(&series, &[]);
        assert_eq!(count(&with, RED), 1);
        assert_eq!(count(&without, RED), 0);
        assert_eq!(count(&with, "<circle"), 4);
    }

    #[test]
    fn output_is_deterministic() {
        let svg1 = trajectory_svg(&traj());
        let svg2 = trajectory_svg(&traj());
        assert_eq!(svg1, svg2);
    }
}
