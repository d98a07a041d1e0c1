//! Independent checks of a traced center function: exact per-sample
//! comparison against a fresh smallest enclosing ball, continuity at events
//! and support certification.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{is_boundary_support, seb, Point};
use crate::polyalg::{rational_between, simplest_between, AlgebraicTime, Rat};
use crate::tracker::{Instance, PiecewiseCenter};
use crate::voronoi::face_membership;

/// A sample where the traced center differs from the recomputed one.
#[derive(Clone, Debug)]
pub struct Failure {
    pub t: Rat,
    pub arc: usize,
    pub expected: Point,
    /// `None` when the arc could not be evaluated at `t`.
    pub got: Option<Point>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub samples: usize,
    pub exact_matches: usize,
    /// Largest coordinate deviation over all samples.
    pub max_dev: Rat,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `pc` with `seb(S ∪ V(t)).center` at `samples` rational times,
/// spread round-robin over the arcs and drawn on a `2^-16` grid strictly
/// inside each arc's span, away from the isolating intervals of its
/// endpoints.
pub fn verify(pc: &PiecewiseCenter, inst: &Instance, samples: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport {
        samples: 0,
        exact_matches: 0,
        max_dev: Rat::zero(),
        failures: Vec::new(),
    };
    if pc.arcs.is_empty() {
        return report;
    }
    let spans: Vec<(Rat, Rat)> = pc
        .arcs
        .iter()
        .map(|a| inner_span(&a.start, &a.end))
        .collect();
    let denom = Rat::from_integer((1u32 << 16).into());
    for k in 0..samples {
        let i = k % pc.arcs.len();
        let (lo, hi) = &spans[i];
        let u = Rat::from_integer(rng.gen_range(1u32..1 << 16).into()) / &denom;
        let t = lo + (hi - lo) * u;
        let Ok(pts) = inst.positions_at(&t) else {
            continue;
        };
        let expected = seb(&pts).expect("non-empty instance").ball.center;
        let got = pc.arcs[i].curve.eval(&t).ok();
        report.samples += 1;
        match &got {
            Some(p) if *p == expected => report.exact_matches += 1,
            Some(p) => {
                let dev = max_abs_diff(p, &expected);
                if dev > report.max_dev {
                    report.max_dev = dev;
                }
                report.failures.push(Failure {
                    t,
                    arc: i,
                    expected,
                    got,
                });
            }
            None => report.failures.push(Failure {
                t,
                arc: i,
                expected,
                got,
            }),
        }
    }
    report
}

// rational interval strictly inside the span, with small denominators and
// ends within 1/1024 of the span length from the isolating intervals
fn inner_span(start: &AlgebraicTime, end: &AlgebraicTime) -> (Rat, Rat) {
    let (lo, hi) = if start.hi() < end.lo() {
        (start.hi().clone(), end.lo().clone())
    } else {
        let m = AlgebraicTime::rational(rational_between(start, end));
        (rational_between(start, &m), rational_between(&m, end))
    };
    let w = (&hi - &lo) / Rat::from_integer(1024.into());
    (
        simplest_between(&lo, &(&lo + &w)),
        simplest_between(&(&hi - &w), &hi),
    )
}

fn max_abs_diff(a: &Point, b: &Point) -> Rat {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y).abs())
        .fold(Rat::zero(), |m, g| if g > m { g } else { m })
}

/// Coordinate gaps between the arcs meeting at an interior event.
#[derive(Clone, Debug)]
pub struct EventGap {
    pub event: usize,
    pub exact: bool,
    /// `|left - right|` per coordinate; `None` if either arc has a pole there.
    pub gaps: Option<Vec<Rat>>,
}

impl EventGap {
    pub fn max(&self) -> Option<Rat> {
        self.gaps.as_ref().map(|g| {
            g.iter()
                .fold(Rat::zero(), |m, x| if *x > m { x.clone() } else { m })
        })
    }
}

/// Evaluates both neighbours of every interior event at the event time:
/// exactly when it is rational, at the midpoint of the isolating interval
/// refined to `width` otherwise.
pub fn continuity_audit(pc: &PiecewiseCenter, width: &Rat) -> Vec<EventGap> {
    (1..pc.events.len().saturating_sub(1))
        .map(|i| {
            let t = &pc.events[i].time;
            let (at, exact) = match t.as_rational() {
                Some(r) => (r.clone(), true),
                None => (t.refine(width).approx(), false),
            };
            let gaps = match (pc.arcs[i - 1].curve.eval(&at), pc.arcs[i].curve.eval(&at)) {
                (Ok(l), Ok(r)) => Some(
                    l.coords()
                        .iter()
                        .zip(r.coords())
                        .map(|(x, y)| (x - y).abs())
                        .collect(),
                ),
                _ => None,
            };
            EventGap {
                event: i,
                exact,
                gaps,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportViolation {
    /// The support does not certify the ball of all points at the sample.
    NotCertified { arc: usize, t: Rat },
    /// Static support differs from the statics on the ball's boundary.
    StaticMismatch { arc: usize, t: Rat },
    /// The center is not on the farthest-point face of the static support.
    OffFace { arc: usize, t: Rat },
}

/// At one interior rational sample per arc: the support certifies the
/// enclosing ball of all points, its static part is exactly the set of
/// statics on the ball's boundary, and with two or more static support
/// points the center lies on their farthest-point Voronoi face.
pub fn support_audit(pc: &PiecewiseCenter, inst: &Instance) -> Vec<SupportViolation> {
    let mut out = Vec::new();
    for (i, arc) in pc.arcs.iter().enumerate() {
        let t = arc.sample();
        let (Ok(all), Ok(sup), Ok(center)) = (
            inst.positions_at(&t),
            inst.points_of(&arc.support, &t),
            arc.curve.eval(&t),
        ) else {
            out.push(SupportViolation::NotCertified { arc: i, t });
            continue;
        };
        // coincident support points span the same circumball
        let mut distinct: Vec<Point> = Vec::new();
        for p in &sup {
            if !distinct.contains(p) {
                distinct.push(p.clone());
            }
        }
        let certified = if distinct.len() == 1 {
            all.iter().all(|p| *p == distinct[0])
        } else {
            is_boundary_support(&distinct, &all).unwrap_or(false)
        };
        if !certified {
            out.push(SupportViolation::NotCertified {
                arc: i,
                t: t.clone(),
            });
        }
        let r = center.dist_sq(&sup[0]);
        let on: Vec<usize> = (0..inst.statics().len())
            .filter(|&j| center.dist_sq(&inst.statics()[j]) == r)
            .collect();
        if on != arc.support.statics {
            out.push(SupportViolation::StaticMismatch {
                arc: i,
                t: t.clone(),
            });
        }
        if arc.support.statics.len() >= 2
            && !face_membership(&center, &arc.support.statics, inst.statics())
        {
            out.push(SupportViolation::OffFace { arc: i, t });
        }
    }
    out
}
