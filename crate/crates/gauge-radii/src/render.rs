//! CSV and SVG output for diagram runs. Both formats are fully
//! deterministic: no timestamps, fixed float formatting.

use crate::diagram::sample::DiagramRun;
use crate::diagram::spec::{CurveStatus, DiagramSpec};
use std::fmt::Write as _;

/// CSV with one row per sample.
pub fn csv_string(run: &DiagramRun) -> String {
    let mut out = String::new();
    out.push_str("gauge,strategy,seed,index,x,y,r,D,R,s,worst_inequality,worst_slack\n");
    for p in &run.samples {
        let (worst_name, worst_slack) = p.worst();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            run.gauge_label,
            run.strategy.label(),
            run.seed,
            p.index,
            p.x,
            p.y,
            p.inradius,
            p.diameter,
            p.circumradius,
            p.asymmetry,
            worst_name,
            worst_slack
        );
    }
    out
}

const W: f64 = 640.0;
const H: f64 = 640.0;
const MARGIN: f64 = 70.0;

fn to_px(x: f64, y: f64) -> (f64, f64) {
    let span = W - 2.0 * MARGIN;
    (MARGIN + x * span, H - MARGIN - y * span)
}

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

/// Self-contained SVG: axes over the unit square, sampled cloud, proved
/// curves solid, conjectured curves dashed, landmark bodies bold.
pub fn svg_string(spec: &DiagramSpec, run: &DiagramRun) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Grid and axes.
    for i in 0..=4 {
        let v = i as f64 / 4.0;
        let (x0, y0) = to_px(v, 0.0);
        let (_, y1) = to_px(0.0, v);
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\" stroke-width=\"1\"/>",
            fmt(x0),
            fmt(to_px(0.0, 0.0).1),
            fmt(x0),
            fmt(to_px(0.0, 1.0).1)
        );
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\" stroke-width=\"1\"/>",
            fmt(to_px(0.0, 0.0).0),
            fmt(y1),
            fmt(to_px(1.0, 0.0).0),
            fmt(y1)
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\">{}</text>",
            fmt(x0),
            fmt(y0 + 20.0),
            v
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\" fill=\"#333333\">{}</text>",
            fmt(MARGIN - 8.0),
            fmt(y1 + 4.0),
            v
        );
    }
    let _ = writeln!(
        s,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>",
        fmt(MARGIN),
        fmt(MARGIN),
        fmt(W - 2.0 * MARGIN),
        fmt(H - 2.0 * MARGIN)
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"#111111\">r / R</text>",
        fmt(W / 2.0),
        fmt(H - 20.0)
    );
    let _ = writeln!(
        s,
        "<text x=\"20\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" fill=\"#111111\" transform=\"rotate(-90 20 {})\">D / 2R</text>",
        fmt(H / 2.0),
        fmt(H / 2.0)
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\" fill=\"#111111\">(r, D, R) diagram — gauge: {}</text>",
        fmt(W / 2.0),
        fmt(MARGIN - 24.0),
        run.gauge_label
    );

    // Sample cloud.
    for p in &run.samples {
        let (px, py) = to_px(p.x, p.y);
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"1.6\" fill=\"#4878a8\" fill-opacity=\"0.5\"/>",
            fmt(px),
            fmt(py)
        );
    }

    // Boundary curves.
    for curve in &spec.curves {
        let mut path = String::new();
        for (i, &(x, y)) in curve.points.iter().enumerate() {
            let (px, py) = to_px(x, y);
            let _ = write!(path, "{}{},{}", if i == 0 { "M" } else { " L" }, fmt(px), fmt(py));
        }
        let style = match curve.status {
            CurveStatus::Proved => "stroke=\"#202020\" stroke-width=\"1.8\"",
            CurveStatus::Conjectured => {
                "stroke=\"#c03030\" stroke-width=\"1.8\" stroke-dasharray=\"7 5\""
            }
        };
        let _ = writeln!(
            s,
            "<path d=\"{path}\" fill=\"none\" {style}><title>{}</title></path>",
            curve.name
        );
    }

    // Landmarks.
    for lm in &spec.landmarks {
        let (px, py) = to_px(lm.x, lm.y);
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#111111\"><title>{}</title></circle>",
            fmt(px),
            fmt(py),
            lm.name
        );
    }

    s.push_str("</svg>\n");
    s
}
