//! CSV samples and SVG drawings of planar traces.

use std::fmt::Write;

use onecenter::polyalg::rat_to_f64;
use onecenter::{AlgebraicTime, Instance, PiecewiseCenter, Point, Rat};

use crate::output::decimal;

/// Rational stand-in for an arc endpoint.
fn endpoint(t: &AlgebraicTime, width: &Rat) -> Rat {
    match t.as_rational() {
        Some(r) => r.clone(),
        None => t.refine(width).approx(),
    }
}

/// `n + 1` equally spaced times from `a` to `b`.
fn grid(a: &Rat, b: &Rat, n: usize) -> Vec<Rat> {
    let n = n.max(1);
    let step = (b - a) / Rat::from_integer(n.into());
    (0..=n)
        .map(|i| a + &step * Rat::from_integer(i.into()))
        .collect()
}

/// Per arc, the sampled times and center positions. Times where the arc
/// cannot be evaluated are skipped.
pub fn sample_arcs(pc: &PiecewiseCenter, n: usize, width: &Rat) -> Vec<Vec<(Rat, Point)>> {
    pc.arcs
        .iter()
        .map(|arc| {
            grid(&endpoint(&arc.start, width), &endpoint(&arc.end, width), n)
                .into_iter()
                .filter_map(|t| arc.curve.eval(&t).ok().map(|p| (t, p)))
                .collect()
        })
        .collect()
}

pub fn csv(pc: &PiecewiseCenter, n: usize, width: &Rat) -> String {
    let mut out = String::from("t,x,y,arc\n");
    for (i, pts) in sample_arcs(pc, n, width).iter().enumerate() {
        for (t, p) in pts {
            let c = p.coords();
            writeln!(
                out,
                "{},{},{},{i}",
                decimal(t),
                decimal(&c[0]),
                decimal(&c[1])
            )
            .unwrap();
        }
    }
    out
}

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

struct Frame {
    min: [f64; 2],
    scale: f64,
}

impl Frame {
    fn fit(pts: &[[f64; 2]]) -> Frame {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in pts {
            for k in 0..2 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
        Frame {
            min,
            scale: (SIZE - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        let x = MARGIN + (p[0] - self.min[0]) * self.scale;
        let y = SIZE - MARGIN - (p[1] - self.min[1]) * self.scale;
        (x, y)
    }

    fn polyline(&self, pts: &[[f64; 2]]) -> String {
        let mut s = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.map(*p);
            if i > 0 {
                s.push(' ');
            }
            write!(s, "{x:.3},{y:.3}").unwrap();
        }
        s
    }
}

fn xy(p: &Point) -> [f64; 2] {
    [rat_to_f64(&p.coords()[0]), rat_to_f64(&p.coords()[1])]
}

pub fn svg(pc: &PiecewiseCenter, inst: &Instance, n: usize, width: &Rat) -> String {
    let arcs: Vec<Vec<[f64; 2]>> = sample_arcs(pc, n, width)
        .iter()
        .map(|pts| pts.iter().map(|(_, p)| xy(p)).collect())
        .collect();
    let dom = inst.domain();
    let times = grid(&dom.lo, &dom.hi, n.max(1) * pc.arcs.len().max(1));
    let mobiles: Vec<Vec<[f64; 2]>> = inst
        .mobiles()
        .iter()
        .map(|c| {
            times
                .iter()
                .filter_map(|t| c.eval(t).ok())
                .map(|p| xy(&p))
                .collect()
        })
        .collect();
    let statics: Vec<[f64; 2]> = inst.statics().iter().map(xy).collect();

    let mut all: Vec<[f64; 2]> = statics.clone();
    all.extend(arcs.iter().flatten());
    all.extend(mobiles.iter().flatten());
    let frame = Frame::fit(&all);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (k, m) in mobiles.iter().enumerate() {
        writeln!(
            s,
            r##"<polyline class="mobile" data-mobile="{k}" fill="none" stroke="#777777" stroke-width="1.5" stroke-dasharray="6 4" points="{}"/>"##,
            frame.polyline(m)
        )
        .unwrap();
    }
    for (i, a) in arcs.iter().enumerate() {
        writeln!(
            s,
            r#"<polyline class="center" data-arc="{i}" fill="none" stroke="{}" stroke-width="2.5" points="{}"/>"#,
            COLORS[i % COLORS.len()],
            frame.polyline(a)
        )
        .unwrap();
    }
    for (j, p) in statics.iter().enumerate() {
        let (x, y) = frame.map(*p);
        writeln!(
            s,
            r#"<circle class="static" data-static="{j}" cx="{x:.3}" cy="{y:.3}" r="4" fill="black"/>"#
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
