//! Farthest-point Voronoi queries without building the diagram.
//!
//! A face `F(S')` is the set of points equidistant from all of `S'` and
//! strictly farther from `S'` than from every other site. Faces are only
//! ever touched through perpendicular-bisector hyperplanes and exact sign
//! tests, both at rational points and at algebraic times along a curve.

use thiserror::Error;

use crate::curve::RatCurve;
use crate::geom::{dot, Ball, Point};
use crate::polyalg::{isolate_roots, rational_between, AlgebraicTime, IsolatedRoot, Rat, RatFn};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoronoiError {
    #[error("bisector of a point with itself")]
    IdenticalPoints,
    #[error("curve lies entirely inside the hyperplane")]
    IdenticallyOnPlane,
}

/// `{x : normal . x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    /// `normal . c(t) - offset` as a rational function.
    pub fn along(&self, c: &RatCurve) -> RatFn {
        let lin = c
            .components()
            .iter()
            .zip(&self.normal)
            .fold(RatFn::zero(), |acc, (x, n)| &acc + &x.scale(n));
        &lin - &RatFn::constant(self.offset.clone())
    }

    pub fn side(&self, x: &Point) -> Rat {
        dot(&self.normal, x.coords()) - &self.offset
    }
}

/// Locus of `|x - a|^2 = |x - b|^2`: `2(b - a) . x = |b|^2 - |a|^2`.
///
/// Points on the `b` side of the bisector (positive `side`) are closer to
/// `b`, hence farther from `a`.
pub fn bisector(a: &Point, b: &Point) -> Result<Hyperplane, VoronoiError> {
    if a == b {
        return Err(VoronoiError::IdenticalPoints);
    }
    let two = Rat::from_integer(2.into());
    Ok(Hyperplane {
        normal: b.sub(a).into_iter().map(|x| x * &two).collect(),
        offset: b.norm_sq() - a.norm_sq(),
    })
}

/// `x ∈ F(S')`: equidistant within `S'`, strictly farther from `S'` than
/// from every other site.
pub fn face_membership(x: &Point, face: &[usize], sites: &[Point]) -> bool {
    let Some(&rep) = face.first() else {
        return false;
    };
    let r = x.dist_sq(&sites[rep]);
    if face.iter().any(|&i| x.dist_sq(&sites[i]) != r) {
        return false;
    }
    sites
        .iter()
        .enumerate()
        .filter(|(i, _)| !face.contains(i))
        .all(|(_, s)| x.dist_sq(s) < r)
}

/// Parameter values in the curve's domain where it meets the hyperplane.
pub fn curve_hyperplane_roots(
    c: &RatCurve,
    h: &Hyperplane,
) -> Result<Vec<IsolatedRoot>, VoronoiError> {
    let f = h.along(c);
    if f.is_zero() {
        return Err(VoronoiError::IdenticallyOnPlane);
    }
    Ok(isolate_roots(f.num(), c.domain()))
}

/// A time at which an arc enters the face spanned by its sites plus
/// `joined`.
#[derive(Clone, Debug)]
pub struct FaceCrossing {
    pub time: AlgebraicTime,
    pub joined: Vec<usize>,
}

/// `|c(t) - s_a|^2 - |c(t) - s_b|^2`, positive where `c` is farther from `a`.
pub fn farther_margin(c: &RatCurve, a: &Point, b: &Point) -> RatFn {
    match bisector(a, b) {
        Ok(h) => h.along(c),
        Err(_) => RatFn::zero(),
    }
}

/// Times where the arc meets a farthest-point Voronoi face involving
/// `face` (indices into `sites`).
///
/// Only the bisectors between the lowest-index representative of `face` and
/// the remaining sites are intersected. A root is kept when, at that
/// algebraic time, the arc is equidistant from the face and the newly tied
/// sites and strictly farther from the rest. Roots shared by several
/// bisectors are merged.
pub fn curve_face_intersections(
    arc: &RatCurve,
    face: &[usize],
    sites: &[Point],
) -> Vec<FaceCrossing> {
    let Some(&rep) = face.iter().min() else {
        return Vec::new();
    };
    let mut hits: Vec<FaceCrossing> = Vec::new();
    for (j, s) in sites.iter().enumerate() {
        if face.contains(&j) {
            continue;
        }
        let Ok(roots) = bisector(&sites[rep], s).and_then(|h| curve_hyperplane_roots(arc, &h))
        else {
            continue;
        };
        for r in roots {
            match hits.iter_mut().find(|h| h.time == r.time) {
                Some(h) => h.joined.push(j),
                None => hits.push(FaceCrossing {
                    time: r.time,
                    joined: vec![j],
                }),
            }
        }
    }
    hits.retain_mut(|h| {
        h.joined.sort_unstable();
        on_face_at(arc, face, &h.joined, sites, &h.time)
    });
    hits.sort_by(|a, b| a.time.cmp(&b.time));
    hits
}

// exact face test at an algebraic time along the curve
fn on_face_at(
    arc: &RatCurve,
    face: &[usize],
    joined: &[usize],
    sites: &[Point],
    t: &AlgebraicTime,
) -> bool {
    let rep = &sites[*face.iter().min().unwrap()];
    let sign_at = |f: &RatFn| t.sign_of(f.num()) * t.sign_of(f.den());
    let tied = face.iter().chain(joined);
    for &i in tied {
        if sign_at(&farther_margin(arc, rep, &sites[i])) != 0 {
            return false;
        }
    }
    sites
        .iter()
        .enumerate()
        .filter(|(i, _)| !face.contains(i) && !joined.contains(i))
        .all(|(_, s)| sign_at(&farther_margin(arc, rep, s)) > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingLabel {
    In,
    Out,
    Tangent,
}

#[derive(Clone, Debug)]
pub struct SphereCrossing {
    pub time: AlgebraicTime,
    pub label: CrossingLabel,
}

/// Times where the curve meets the sphere `∂ball`, labelled by the sign of
/// `|c(t) - center|^2 - r^2` on either side: `In` for `+ -> -`, `Out` for
/// `- -> +`, `Tangent` when the sign does not change. Empty when the curve
/// lies on the sphere identically.
pub fn curve_sphere_intersections(c: &RatCurve, ball: &Ball) -> Vec<SphereCrossing> {
    let h = &c.dist_sq_to_point(&ball.center) - &RatFn::constant(ball.radius_sq.clone());
    if h.is_zero() {
        return Vec::new();
    }
    let dom = c.domain();
    let roots = isolate_roots(h.num(), dom);
    // sign of h strictly between consecutive roots; None for an empty gap
    // at a domain end
    let den_sign = h.den().sign_at(&dom.lo);
    let sign_between = |a: &AlgebraicTime, b: &AlgebraicTime| {
        (a < b).then(|| h.num().sign_at(&rational_between(a, b)) * den_sign)
    };
    let lo = AlgebraicTime::rational(dom.lo.clone());
    let hi = AlgebraicTime::rational(dom.hi.clone());
    let mut gaps: Vec<Option<i8>> = Vec::with_capacity(roots.len() + 1);
    let mut prev = &lo;
    for r in &roots {
        gaps.push(sign_between(prev, &r.time));
        prev = &r.time;
    }
    gaps.push(sign_between(prev, &hi));
    roots
        .into_iter()
        .enumerate()
        .map(|(k, r)| {
            let before = gaps[k];
            let after = gaps[k + 1];
            let label = match (before, after, r.odd_parity()) {
                (_, _, false) => CrossingLabel::Tangent,
                (Some(b), Some(a), _) if b == a => CrossingLabel::Tangent,
                (Some(1), _, _) | (None, Some(-1), _) => CrossingLabel::In,
                _ => CrossingLabel::Out,
            };
            SphereCrossing {
                time: r.time,
                label,
            }
        })
        .collect()
}
