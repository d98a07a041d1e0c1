//! Event-driven tracing of the 1-center `ε(t)` of `S ∪ V(t)`.
//!
//! An arc with support `P` is valid exactly while every point lies in the
//! circumball of `P(t)` and the circumcenter stays in the convex hull of
//! `P(t)`. Each of these conditions is a sign condition on a rational
//! function of `t`, so the arc can only end at a root of one of finitely
//! many polynomials. The tracker walks those roots in increasing order; at
//! each one it computes the support just after the root by running an exact
//! smallest enclosing ball at a rational sample `t*`, chosen before the next
//! candidate root of both the old and the new arc (the gap rule), and emits
//! an event when the support changes.
//!
//! With a single mobile point the candidate set also contains the
//! intersections of the arc with the arcs of its proper sub-supports. With
//! several mobiles it contains the intersections with the arcs of every
//! subset of `S ∪ V` of size `2..=d+1`, whose number is capped.

use std::collections::HashMap;
use std::rc::Rc;

use thiserror::Error;

use crate::curve::{CurveError, RatCurve};
use crate::geom::{
    circumcenter_symbolic, general_position_check, seb, seb_with_seed, GeomError, Point,
    SymbolicCircumcenter, DEFAULT_SEB_SEED,
};
use crate::polyalg::{
    isolate_roots, rational_between, ten_pow_neg, AlgebraicTime, Interval, Poly, PolyError, Rat,
    RatFn,
};
use crate::voronoi::{curve_sphere_intersections, farther_margin, CrossingLabel, SphereCrossing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("point or curve of dimension {found} in a {expected}-dimensional instance")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("instance has no points")]
    NoPoints,
    #[error("empty domain: lo must be smaller than hi")]
    EmptyDomain,
    #[error("static points {0} and {1} coincide")]
    DuplicateStatic(usize, usize),
    #[error("static points are not in general position")]
    NotInGeneralPosition,
    #[error("mobile curve {index}: {source}")]
    Curve { index: usize, source: CurveError },
    #[error("{count} candidate subsets exceed the cap of {cap}")]
    ComplexityGuard { count: u128, cap: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Indices of the static and mobile points on the boundary of the ball.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    pub statics: Vec<usize>,
    pub mobiles: Vec<usize>,
}

impl SupportSet {
    pub fn new(mut statics: Vec<usize>, mut mobiles: Vec<usize>) -> Self {
        statics.sort_unstable();
        statics.dedup();
        mobiles.sort_unstable();
        mobiles.dedup();
        SupportSet { statics, mobiles }
    }

    pub fn len(&self) -> usize {
        self.statics.len() + self.mobiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn has_mobile(&self) -> bool {
        !self.mobiles.is_empty()
    }

    /// Elements of `self` missing from `other`.
    pub fn minus(&self, other: &SupportSet) -> SupportSet {
        SupportSet {
            statics: self
                .statics
                .iter()
                .copied()
                .filter(|i| !other.statics.contains(i))
                .collect(),
            mobiles: self
                .mobiles
                .iter()
                .copied()
                .filter(|i| !other.mobiles.contains(i))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.minus(other).is_empty()
    }

    // from indices into the combined list statics ++ mobiles
    fn from_combined(ids: &[usize], n: usize) -> Self {
        SupportSet::new(
            ids.iter().copied().filter(|&i| i < n).collect(),
            ids.iter().filter(|&&i| i >= n).map(|&i| i - n).collect(),
        )
    }

    fn to_combined(&self, n: usize) -> Vec<usize> {
        self.statics
            .iter()
            .copied()
            .chain(self.mobiles.iter().map(|&i| i + n))
            .collect()
    }
}

/// Static points, mobile curves and the common time domain.
#[derive(Clone, Debug)]
pub struct Instance {
    statics: Vec<Point>,
    mobiles: Vec<RatCurve>,
    domain: Interval,
}

impl Instance {
    /// Checks dimensions, the domain, distinct statics and that no mobile
    /// denominator vanishes on the domain. General position is checked by
    /// [`trace`] unless disabled.
    pub fn new(
        statics: Vec<Point>,
        mobiles: Vec<RatCurve>,
        domain: Interval,
    ) -> Result<Self, TraceError> {
        let d = statics
            .first()
            .map(Point::dim)
            .or_else(|| mobiles.first().map(RatCurve::dim))
            .ok_or(TraceError::NoPoints)?;
        if d < 2 {
            return Err(TraceError::DimensionTooSmall(d));
        }
        let dims = statics
            .iter()
            .map(Point::dim)
            .chain(mobiles.iter().map(RatCurve::dim));
        for found in dims {
            if found != d {
                return Err(TraceError::DimensionMismatch { expected: d, found });
            }
        }
        if domain.lo >= domain.hi {
            return Err(TraceError::EmptyDomain);
        }
        for i in 0..statics.len() {
            for j in i + 1..statics.len() {
                if statics[i] == statics[j] {
                    return Err(TraceError::DuplicateStatic(i, j));
                }
            }
        }
        let mobiles = mobiles
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                RatCurve::new(c.components().to_vec(), domain.clone())
                    .map_err(|source| TraceError::Curve { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Instance {
            statics,
            mobiles,
            domain,
        })
    }

    pub fn statics(&self) -> &[Point] {
        &self.statics
    }

    pub fn mobiles(&self) -> &[RatCurve] {
        &self.mobiles
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.statics
            .first()
            .map(Point::dim)
            .unwrap_or_else(|| self.mobiles[0].dim())
    }

    /// Statics followed by the mobile positions at `t`.
    pub fn positions_at(&self, t: &Rat) -> Result<Vec<Point>, PolyError> {
        let mut pts = self.statics.clone();
        for c in &self.mobiles {
            pts.push(c.eval(t)?);
        }
        Ok(pts)
    }

    pub fn points_of(&self, s: &SupportSet, t: &Rat) -> Result<Vec<Point>, PolyError> {
        let mut pts: Vec<Point> = s.statics.iter().map(|&i| self.statics[i].clone()).collect();
        for &k in &s.mobiles {
            pts.push(self.mobiles[k].eval(t)?);
        }
        Ok(pts)
    }
}

#[derive(Clone, Debug)]
pub struct TraceOptions {
    /// Width to which irrational event times are refined.
    pub refine_width: Rat,
    /// Seed for the smallest enclosing ball shuffle.
    pub seed: u64,
    pub skip_gp_check: bool,
    /// Maximum number of candidate subsets with several mobiles.
    pub candidate_cap: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions {
            refine_width: ten_pow_neg(12),
            seed: DEFAULT_SEB_SEED,
            skip_gp_check: false,
            candidate_cap: 20_000,
        }
    }
}

/// A maximal span on which the center is one rational curve.
#[derive(Clone, Debug)]
pub struct Arc {
    pub start: AlgebraicTime,
    pub end: AlgebraicTime,
    pub support: SupportSet,
    /// Circumcenter of the support; only meaningful on `[start, end]`.
    pub curve: RatCurve,
    pub radius_sq: RatFn,
}

impl Arc {
    pub fn contains(&self, t: &Rat) -> bool {
        self.start.cmp_rat(t).is_le() && self.end.cmp_rat(t).is_ge()
    }

    /// A rational strictly inside the span.
    pub fn sample(&self) -> Rat {
        rational_between(&self.start, &self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EventKind {
    Start,
    End,
    /// The mobile points all moved inside; the center becomes constant.
    In,
    /// A mobile point reached the boundary of a constant arc's ball.
    Out,
    SupportChange,
}

#[derive(Clone, Debug)]
pub struct Event {
    pub time: AlgebraicTime,
    pub kind: EventKind,
    pub joined: SupportSet,
    pub left: SupportSet,
}

/// The center function as consecutive arcs. `events[0]` is the start of
/// the domain, `events[i]` for interior `i` separates `arcs[i - 1]` and
/// `arcs[i]`, and the last event is the end of the domain.
#[derive(Clone, Debug)]
pub struct PiecewiseCenter {
    pub arcs: Vec<Arc>,
    pub events: Vec<Event>,
    pub domain: Interval,
}

impl PiecewiseCenter {
    /// First arc whose closed span contains `t`.
    pub fn arc_at(&self, t: &Rat) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.contains(t))
    }

    pub fn eval(&self, t: &Rat) -> Option<Point> {
        self.arc_at(t)?.curve.eval(t).ok()
    }

    pub fn interior_events(&self) -> &[Event] {
        match self.events.len() {
            0..=2 => &[],
            n => &self.events[1..n - 1],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Derivative of the arc on `side` of `events[event]`, evaluated exactly at
/// rational event times and at the midpoint of the isolating interval
/// refined to `width` otherwise. `None` at the outer side of a domain
/// endpoint.
pub fn one_sided_derivative(
    pc: &PiecewiseCenter,
    event: usize,
    side: Side,
    width: &Rat,
) -> Option<Vec<Rat>> {
    let arc = match side {
        Side::Left => pc.arcs.get(event.checked_sub(1)?)?,
        Side::Right => pc.arcs.get(event)?,
    };
    let t = &pc.events.get(event)?.time;
    let at = match t.as_rational() {
        Some(r) => r.clone(),
        None => t.refine(width).approx(),
    };
    let p = arc.curve.derivative().eval(&at).ok()?;
    Some(p.coords().to_vec())
}

/// Support of the smallest enclosing ball of `S ∪ V(t)`.
pub fn support_at(inst: &Instance, t: &Rat, seed: u64) -> Result<SupportSet, TraceError> {
    let pts = inst.positions_at(t)?;
    let r = seb_with_seed(&pts, seed)?;
    Ok(SupportSet::from_combined(&r.support, inst.statics.len()))
}

/// Crossings of mobile `k` with the boundary of the smallest enclosing ball
/// of the statics, tangencies removed, and whether the mobile starts
/// strictly inside that ball. `None` without statics.
pub fn in_out_list(inst: &Instance, k: usize) -> Option<(bool, Vec<SphereCrossing>)> {
    let ball = seb(&inst.statics).ok()?.ball;
    let c = &inst.mobiles[k];
    let inside = ball.strictly_inside(&c.eval(&inst.domain.lo).ok()?);
    let list = curve_sphere_intersections(c, &ball)
        .into_iter()
        .filter(|x| x.label != CrossingLabel::Tangent)
        .collect();
    Some((inside, list))
}

/// Traces the center over the whole domain. Dispatches on the number of
/// mobile points.
pub fn trace(inst: &Instance, opts: &TraceOptions) -> Result<PiecewiseCenter, TraceError> {
    if inst.mobiles.len() >= 2 {
        trace_multi(inst, opts)
    } else {
        Tracer::new(inst, opts, Mode::Single).run()
    }
}

pub fn trace_single(inst: &Instance, opts: &TraceOptions) -> Result<PiecewiseCenter, TraceError> {
    Tracer::new(inst, opts, Mode::Single).run()
}

pub fn trace_multi(inst: &Instance, opts: &TraceOptions) -> Result<PiecewiseCenter, TraceError> {
    let total = inst.statics.len() + inst.mobiles.len();
    let count = subset_count(total, inst.dim() + 1);
    if count > opts.candidate_cap as u128 {
        return Err(TraceError::ComplexityGuard {
            count,
            cap: opts.candidate_cap,
        });
    }
    Tracer::new(inst, opts, Mode::Multi).run()
}

fn default_mode(inst: &Instance) -> Mode {
    if inst.mobiles.len() >= 2 {
        Mode::Multi
    } else {
        Mode::Single
    }
}

/// Support and symbolic circumcenter of the arc starting at the domain's
/// lower end.
pub fn initial_arc(
    inst: &Instance,
    opts: &TraceOptions,
) -> Result<(SupportSet, SymbolicCircumcenter), TraceError> {
    let mut tr = Tracer::new(inst, opts, default_mode(inst));
    let lo = AlgebraicTime::rational(inst.domain.lo.clone());
    let hi = AlgebraicTime::rational(inst.domain.hi.clone());
    let s = tr.support_after(&lo, hi)?;
    let sc = tr.arc_data(&s)?.sc.clone();
    Ok((s, sc))
}

/// First time after `t_last` where the support of the arc `cur` changes,
/// with the new support; `None` if the arc reaches the end of the domain.
pub fn next_event(
    inst: &Instance,
    opts: &TraceOptions,
    cur: &SupportSet,
    t_last: &AlgebraicTime,
) -> Result<Option<(AlgebraicTime, SupportSet)>, TraceError> {
    Tracer::new(inst, opts, default_mode(inst)).next_event(cur, t_last)
}

/// Support of the center just after `t_e`, which must precede the end of
/// the domain.
pub fn support_after_event(
    inst: &Instance,
    opts: &TraceOptions,
    t_e: &AlgebraicTime,
) -> Result<SupportSet, TraceError> {
    let hi = AlgebraicTime::rational(inst.domain.hi.clone());
    assert!(*t_e < hi, "no time after the end of the domain");
    Tracer::new(inst, opts, default_mode(inst)).support_after(t_e, hi)
}

/// Number of subsets of an `n`-set with `2..=max` elements.
pub fn subset_count(n: usize, max: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 1..=max.min(n) {
        binom = binom.saturating_mul((n + 1 - k) as u128) / k as u128;
        if k >= 2 {
            total = total.saturating_add(binom);
        }
    }
    total
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Single,
    Multi,
}

struct ArcData {
    sc: SymbolicCircumcenter,
    /// Roots of the validity conditions, sorted and distinct.
    cond_roots: Vec<AlgebraicTime>,
    /// Condition roots plus sub-arc intersections, sorted and distinct.
    all_roots: Vec<AlgebraicTime>,
}

struct Tracer<'a> {
    inst: &'a Instance,
    opts: &'a TraceOptions,
    mode: Mode,
    arcs: HashMap<SupportSet, Rc<ArcData>>,
    xi: HashMap<SupportSet, Option<Rc<SymbolicCircumcenter>>>,
}

impl<'a> Tracer<'a> {
    fn new(inst: &'a Instance, opts: &'a TraceOptions, mode: Mode) -> Self {
        Tracer {
            inst,
            opts,
            mode,
            arcs: HashMap::new(),
            xi: HashMap::new(),
        }
    }

    fn run(mut self) -> Result<PiecewiseCenter, TraceError> {
        if !self.opts.skip_gp_check && !general_position_check(&self.inst.statics) {
            return Err(TraceError::NotInGeneralPosition);
        }
        let dom = self.inst.domain.clone();
        let lo = AlgebraicTime::rational(dom.lo.clone());
        let hi = AlgebraicTime::rational(dom.hi.clone());

        let mut cur = self.support_after(&lo, hi.clone())?;
        let mut cur_start = lo.clone();
        let mut arcs = Vec::new();
        let mut events = vec![Event {
            time: lo,
            kind: EventKind::Start,
            joined: cur.clone(),
            left: SupportSet::default(),
        }];
        while let Some((t_e, next)) = self.next_event(&cur, &cur_start)? {
            let data = self.arc_data(&cur)?;
            arcs.push(self.make_arc(cur_start, t_e.clone(), &cur, &data));
            events.push(Event {
                time: t_e.clone(),
                kind: event_kind(&cur, &next),
                joined: next.minus(&cur),
                left: cur.minus(&next),
            });
            cur = next;
            cur_start = t_e;
        }
        let data = self.arc_data(&cur)?;
        arcs.push(self.make_arc(cur_start, hi.clone(), &cur, &data));
        events.push(Event {
            time: hi,
            kind: EventKind::End,
            joined: SupportSet::default(),
            left: cur,
        });
        Ok(PiecewiseCenter {
            arcs,
            events,
            domain: dom,
        })
    }

    /// First candidate root of arc `cur` after `t_last` where the support
    /// changes, with the support after it.
    fn next_event(
        &mut self,
        cur: &SupportSet,
        t_last: &AlgebraicTime,
    ) -> Result<Option<(AlgebraicTime, SupportSet)>, TraceError> {
        let hi = AlgebraicTime::rational(self.inst.domain.hi.clone());
        let data = self.arc_data(cur)?;
        let start = data.all_roots.partition_point(|r| r <= t_last);
        for (i, t_e) in data.all_roots.iter().enumerate().skip(start) {
            if *t_e >= hi {
                break;
            }
            let upper = data
                .all_roots
                .get(i + 1)
                .filter(|r| **r < hi)
                .cloned()
                .unwrap_or_else(|| hi.clone());
            let next = self.support_after(t_e, upper)?;
            if next != *cur {
                return Ok(Some((t_e.clone(), next)));
            }
        }
        Ok(None)
    }

    fn make_arc(
        &self,
        start: AlgebraicTime,
        end: AlgebraicTime,
        support: &SupportSet,
        data: &ArcData,
    ) -> Arc {
        let w = &self.opts.refine_width;
        Arc {
            start: start.refine(w),
            end: end.refine(w),
            support: support.clone(),
            curve: data.sc.curve.clone(),
            radius_sq: data.sc.radius_sq.clone(),
        }
    }

    /// Support on `(t_e, t*]` for a rational `t*` certified to precede every
    /// root of the new arc's validity conditions after `t_e`.
    fn support_after(
        &mut self,
        t_e: &AlgebraicTime,
        mut upper: AlgebraicTime,
    ) -> Result<SupportSet, TraceError> {
        loop {
            let t_star = rational_between(t_e, &upper);
            let s = support_at(self.inst, &t_star, self.opts.seed)?;
            let data = self.arc_data(&s)?;
            let i = data.cond_roots.partition_point(|r| r <= t_e);
            match data.cond_roots.get(i) {
                Some(r) if r.cmp_rat(&t_star).is_le() => upper = r.clone(),
                _ => return Ok(s),
            }
        }
    }

    fn xi_of(&mut self, s: &SupportSet) -> Option<Rc<SymbolicCircumcenter>> {
        if let Some(x) = self.xi.get(s) {
            return x.clone();
        }
        let statics: Vec<Point> = s
            .statics
            .iter()
            .map(|&i| self.inst.statics[i].clone())
            .collect();
        let mobiles: Vec<RatCurve> = s
            .mobiles
            .iter()
            .map(|&k| self.inst.mobiles[k].clone())
            .collect();
        let x = circumcenter_symbolic(&statics, &mobiles, &self.inst.domain)
            .ok()
            .map(Rc::new);
        self.xi.insert(s.clone(), x.clone());
        x
    }

    fn arc_data(&mut self, s: &SupportSet) -> Result<Rc<ArcData>, TraceError> {
        if let Some(d) = self.arcs.get(s) {
            return Ok(d.clone());
        }
        let sc = self.xi_of(s).ok_or(GeomError::IdenticallyDegenerate)?;
        let cond = self.condition_polys(s, &sc);
        let mut extra = Vec::new();
        for u in self.sub_supports(s) {
            if let Some(xu) = self.xi_of(&u) {
                if let Some(g) = meet_poly(&sc.curve, &xu.curve) {
                    extra.push(g);
                }
            }
        }
        let dom = &self.inst.domain;
        let cond_roots = roots_of(&cond, dom);
        let mut all_roots = cond_roots.clone();
        all_roots.extend(roots_of(&extra, dom));
        sort_dedup(&mut all_roots);
        let data = Rc::new(ArcData {
            sc: (*sc).clone(),
            cond_roots,
            all_roots,
        });
        self.arcs.insert(s.clone(), data.clone());
        Ok(data)
    }

    // numerators and denominators of the validity conditions of arc `s`
    fn condition_polys(&self, s: &SupportSet, sc: &SymbolicCircumcenter) -> Vec<Poly> {
        let xi = &sc.curve;
        let mut fns: Vec<RatFn> = Vec::new();
        let rep = s.statics.first().map(|&i| &self.inst.statics[i]);
        for (j, p) in self.inst.statics.iter().enumerate() {
            if s.statics.contains(&j) {
                continue;
            }
            fns.push(match rep {
                Some(r) => farther_margin(xi, r, p),
                None => &xi.dist_sq_to_point(p) - &sc.radius_sq,
            });
        }
        for (k, c) in self.inst.mobiles.iter().enumerate() {
            if !s.mobiles.contains(&k) {
                fns.push(&xi.dist_sq(c) - &sc.radius_sq);
            }
        }
        fns.extend(sc.coefficients.iter().cloned());
        fns.extend(xi.components().iter().cloned());
        let mut polys = Vec::new();
        for f in &fns {
            polys.push(f.num().clone());
            polys.push(f.den().clone());
        }
        polys
    }

    fn sub_supports(&self, s: &SupportSet) -> Vec<SupportSet> {
        let n = self.inst.statics.len();
        let combined = s.to_combined(n);
        match self.mode {
            Mode::Single => {
                let k = combined.len();
                (1u32..(1 << k) - 1)
                    .filter(|mask| mask.count_ones() >= 2)
                    .map(|mask| {
                        let ids: Vec<usize> = (0..k)
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| combined[b])
                            .collect();
                        SupportSet::from_combined(&ids, n)
                    })
                    .collect()
            }
            Mode::Multi => {
                let total = n + self.inst.mobiles.len();
                let max = self.inst.dim() + 1;
                (2..=max.min(total))
                    .flat_map(|k| crate::geom::Combinations::new(total, k))
                    .map(|ids| SupportSet::from_combined(&ids, n))
                    .filter(|u| u != s)
                    .collect()
            }
        }
    }
}

fn event_kind(prev: &SupportSet, next: &SupportSet) -> EventKind {
    match (prev.has_mobile(), next.has_mobile()) {
        (true, false) => EventKind::In,
        (false, true) => EventKind::Out,
        _ => EventKind::SupportChange,
    }
}

/// Polynomial whose roots contain the times where two curves meet; `None`
/// when they coincide identically or never meet.
fn meet_poly(a: &RatCurve, b: &RatCurve) -> Option<Poly> {
    let mut g: Option<Poly> = None;
    for (x, y) in a.components().iter().zip(b.components()) {
        let diff = x - y;
        if diff.is_zero() {
            continue;
        }
        let n = diff.num().clone();
        g = Some(match g {
            None => n,
            Some(h) => Poly::gcd(&h, &n),
        });
    }
    g.filter(|p| !p.is_constant())
}

fn roots_of(polys: &[Poly], dom: &Interval) -> Vec<AlgebraicTime> {
    let mut seen: Vec<Poly> = Vec::new();
    for p in polys {
        if p.is_constant() {
            continue;
        }
        let q = p.squarefree_part().primitive();
        if !seen.contains(&q) {
            seen.push(q);
        }
    }
    let mut out: Vec<AlgebraicTime> = seen
        .iter()
        .flat_map(|p| isolate_roots(p, dom))
        .map(|r| r.time)
        .collect();
    sort_dedup(&mut out);
    out
}

fn sort_dedup(v: &mut Vec<AlgebraicTime>) {
    v.sort();
    v.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, rat};

    fn nu(coeffs: &[i64], lo: i64, hi: i64) -> Instance {
        let dom = Interval::new(int(lo), int(hi));
        let c = RatCurve::new(
            vec![RatFn::from_poly(Poly::from_ints(coeffs)), RatFn::zero()],
            dom.clone(),
        )
        .unwrap();
        Instance::new(
            vec![Point::from_ints(&[0, 4]), Point::from_ints(&[-2, 2])],
            vec![c],
            dom,
        )
        .unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    fn same(c: &RatCurve, expect: &[RatFn]) -> bool {
        c.components()
            .iter()
            .zip(expect)
            .all(|(a, b)| a.same_function(b))
    }

    #[test]
    fn step_functions_follow_linear_motion() {
        let inst = nu(&[0, 1], -4, 8);
        let opts = TraceOptions::default();
        let (s0, sc) = initial_arc(&inst, &opts).unwrap();
        assert_eq!(s0, SupportSet::new(vec![0], vec![0]));
        assert!(same(&sc.curve, &[rf(&[0, 1], &[2]), rf(&[2], &[1])]));

        let lo = AlgebraicTime::rational(int(-4));
        let (t1, s1) = next_event(&inst, &opts, &s0, &lo).unwrap().unwrap();
        assert_eq!(t1.as_rational(), Some(&int(0)));
        assert_eq!(s1, SupportSet::new(vec![0, 1], vec![0]));
        let (t2, s2) = next_event(&inst, &opts, &s1, &t1).unwrap().unwrap();
        assert_eq!(t2.as_rational(), Some(&int(4)));
        assert_eq!(s2, SupportSet::new(vec![1], vec![0]));
        assert!(next_event(&inst, &opts, &s2, &t2).unwrap().is_none());

        assert_eq!(support_after_event(&inst, &opts, &t1).unwrap(), s1);
        assert_eq!(support_after_event(&inst, &opts, &t2).unwrap(), s2);
    }

    #[test]
    fn linear_motion_three_arcs() {
        let pc = trace(&nu(&[0, 1], -4, 8), &TraceOptions::default()).unwrap();
        let times: Vec<_> = pc
            .interior_events()
            .iter()
            .map(|e| e.time.as_rational().cloned())
            .collect();
        assert_eq!(times, vec![Some(int(0)), Some(int(4))]);
        assert_eq!(pc.arcs.len(), 3);
        assert_eq!(pc.arcs[0].support, SupportSet::new(vec![0], vec![0]));
        assert_eq!(pc.arcs[1].support, SupportSet::new(vec![0, 1], vec![0]));
        assert_eq!(pc.arcs[2].support, SupportSet::new(vec![1], vec![0]));
        assert!(same(
            &pc.arcs[0].curve,
            &[rf(&[0, 1], &[2]), rf(&[2], &[1])]
        ));
        assert!(same(
            &pc.arcs[1].curve,
            &[rf(&[0, 0, 1], &[8, 2]), rf(&[16, 4, -1], &[8, 2])]
        ));
        assert!(same(
            &pc.arcs[2].curve,
            &[rf(&[-2, 1], &[2]), rf(&[1], &[1])]
        ));
        assert_eq!(
            pc.eval(&int(2)).unwrap(),
            Point::new(vec![rat(1, 3), rat(5, 3)])
        );
    }

    #[test]
    fn cubic_motion_has_irrational_event() {
        let pc = trace(&nu(&[0, 0, 0, 1], -2, 2), &TraceOptions::default()).unwrap();
        let ev = pc.interior_events();
        assert_eq!(ev.len(), 2);
        assert_eq!(ev[0].time.as_rational(), Some(&int(0)));
        assert!((ev[1].time.to_f64() - 1.5874010519682).abs() < 1e-9);
        assert!(same(
            &pc.arcs[0].curve,
            &[rf(&[0, 0, 0, 1], &[2]), rf(&[2], &[1])]
        ));
        assert!(same(
            &pc.arcs[1].curve,
            &[
                rf(&[0, 0, 0, 0, 0, 0, 1], &[8, 0, 0, 2]),
                rf(&[16, 0, 0, 4, 0, 0, -1], &[8, 0, 0, 2])
            ]
        ));
        assert!(same(
            &pc.arcs[2].curve,
            &[rf(&[-2, 0, 0, 1], &[2]), rf(&[1], &[1])]
        ));
    }

    #[test]
    fn derivatives_at_first_event() {
        let w = ten_pow_neg(12);
        let pc = trace(&nu(&[0, 1], -4, 8), &TraceOptions::default()).unwrap();
        assert_eq!(
            one_sided_derivative(&pc, 1, Side::Left, &w).unwrap(),
            vec![rat(1, 2), int(0)]
        );
        assert_eq!(
            one_sided_derivative(&pc, 1, Side::Right, &w).unwrap(),
            vec![int(0), int(0)]
        );
        assert!(one_sided_derivative(&pc, 0, Side::Left, &w).is_none());
        let pc = trace(&nu(&[0, 0, 0, 1], -2, 2), &TraceOptions::default()).unwrap();
        assert_eq!(
            one_sided_derivative(&pc, 1, Side::Left, &w).unwrap(),
            vec![int(0), int(0)]
        );
        assert_eq!(
            one_sided_derivative(&pc, 1, Side::Right, &w).unwrap(),
            vec![int(0), int(0)]
        );
    }

    #[test]
    fn constant_mobile_single_arc() {
        let pc = trace(&nu(&[1], 0, 3), &TraceOptions::default()).unwrap();
        assert_eq!(pc.arcs.len(), 1);
        assert!(pc.arcs[0].curve.is_constant());
    }

    #[test]
    fn mobile_inside_gives_constant_arcs() {
        // unit-radius statics, mobile crossing the disk along the x axis
        let dom = Interval::new(int(-3), int(3));
        let c = RatCurve::new(
            vec![RatFn::from_poly(Poly::t()), RatFn::zero()],
            dom.clone(),
        )
        .unwrap();
        let s = vec![Point::from_ints(&[0, 2]), Point::from_ints(&[0, -2])];
        let inst = Instance::new(s, vec![c], dom).unwrap();
        let (inside, list) = in_out_list(&inst, 0).unwrap();
        assert!(!inside);
        assert_eq!(list.len(), 2);
        let pc = trace(&inst, &TraceOptions::default()).unwrap();
        let kinds: Vec<_> = pc.events.iter().map(|e| e.kind).collect();
        assert_eq!(
            kinds,
            vec![
                EventKind::Start,
                EventKind::In,
                EventKind::Out,
                EventKind::End
            ]
        );
        assert!(pc.arcs[1].curve.is_constant());
        assert_eq!(pc.eval(&int(0)).unwrap(), Point::from_ints(&[0, 0]));
    }

    #[test]
    fn validation_errors() {
        let dom = Interval::new(int(0), int(1));
        assert_eq!(
            Instance::new(
                vec![Point::from_ints(&[1, 1]), Point::from_ints(&[1, 1])],
                vec![],
                dom.clone()
            )
            .unwrap_err(),
            TraceError::DuplicateStatic(0, 1)
        );
        assert_eq!(
            Instance::new(vec![Point::from_ints(&[1])], vec![], dom.clone()).unwrap_err(),
            TraceError::DimensionTooSmall(1)
        );
        let pole = RatCurve::new_unchecked(
            vec![
                RatFn::new(Poly::one(), Poly::from_ints(&[-1, 2])),
                RatFn::zero(),
            ],
            dom.clone(),
        );
        assert!(matches!(
            Instance::new(vec![], vec![pole], dom).unwrap_err(),
            TraceError::Curve { index: 0, .. }
        ));
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subset_count(4, 3), 6 + 4);
        assert_eq!(subset_count(2, 3), 1);
        assert_eq!(subset_count(1, 3), 0);
    }
}
