//! JSON encoding of traces and reports, and decoding of trace fixtures.

use onecenter::polyalg::rat_to_decimal;
use onecenter::tracker::{Arc, Event, EventKind};
use onecenter::{
    AlgebraicTime, Interval, PiecewiseCenter, Point, Poly, Rat, RatCurve, RatFn, SupportSet,
};
use serde_json::{json, Value};

use crate::config::{rat_from_json, FORMAT};
use crate::CliError;

pub const DIGITS: usize = 12;

/// Decimal with at most [`DIGITS`] fractional digits, trailing zeros removed.
pub fn decimal(r: &Rat) -> String {
    let s = rat_to_decimal(r, DIGITS);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "" | "-" | "-0" => "0".into(),
        s => s.into(),
    }
}

pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn point(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(rat).collect())
}

pub fn point_approx(p: &Point) -> Value {
    Value::Array(
        p.coords()
            .iter()
            .map(|c| Value::String(decimal(c)))
            .collect(),
    )
}

pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat).collect())
}

pub fn ratfn(f: &RatFn) -> Value {
    json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

pub fn time(t: &AlgebraicTime, width: &Rat) -> Value {
    let approx = match t.as_rational() {
        Some(r) => r.clone(),
        None => t.refine(width).approx(),
    };
    json!({
        "exact": { "poly": poly(t.defining()), "interval": [rat(t.lo()), rat(t.hi())] },
        "approx": decimal(&approx),
    })
}

pub fn support(s: &SupportSet) -> Value {
    json!({ "static": s.statics, "mobile": s.mobiles })
}

pub fn kind_name(k: EventKind) -> &'static str {
    match k {
        EventKind::Start => "start",
        EventKind::End => "end",
        EventKind::In => "in",
        EventKind::Out => "out",
        EventKind::SupportChange => "support_change",
    }
}

pub fn trace(pc: &PiecewiseCenter, width: &Rat) -> Value {
    let arcs: Vec<Value> = pc
        .arcs
        .iter()
        .map(|a| {
            json!({
                "span": { "start": time(&a.start, width), "end": time(&a.end, width) },
                "support": support(&a.support),
                "center": a.curve.components().iter().map(ratfn).collect::<Vec<_>>(),
                "radius_sq": ratfn(&a.radius_sq),
            })
        })
        .collect();
    let events: Vec<Value> = pc
        .events
        .iter()
        .map(|e| {
            json!({
                "time": time(&e.time, width),
                "kind": kind_name(e.kind),
                "joined": support(&e.joined),
                "left": support(&e.left),
            })
        })
        .collect();
    json!({
        "format": FORMAT,
        "domain": [rat(&pc.domain.lo), rat(&pc.domain.hi)],
        "arcs": arcs,
        "events": events,
    })
}

fn field<'a>(v: &'a Value, key: &str, ctx: &str) -> Result<&'a Value, String> {
    v.get(key)
        .ok_or_else(|| format!("{ctx}: missing \"{key}\""))
}

fn array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>, String> {
    v.as_array()
        .ok_or_else(|| format!("{ctx}: expected an array"))
}

fn parse_poly(v: &Value, ctx: &str) -> Result<Poly, String> {
    let cs = array(v, ctx)?
        .iter()
        .map(rat_from_json)
        .collect::<Result<Vec<_>, _>>();
    Ok(Poly::new(cs.map_err(|e| format!("{ctx}: {e}"))?))
}

fn parse_ratfn(v: &Value, ctx: &str) -> Result<RatFn, String> {
    let num = parse_poly(field(v, "num", ctx)?, ctx)?;
    let den = parse_poly(field(v, "den", ctx)?, ctx)?;
    if den.is_zero() {
        return Err(format!("{ctx}: zero denominator"));
    }
    Ok(RatFn::new(num, den))
}

fn parse_time(v: &Value, ctx: &str) -> Result<AlgebraicTime, String> {
    let exact = field(v, "exact", ctx)?;
    let p = parse_poly(field(exact, "poly", ctx)?, ctx)?;
    let iv = array(field(exact, "interval", ctx)?, ctx)?;
    if iv.len() != 2 {
        return Err(format!("{ctx}: interval needs two endpoints"));
    }
    let lo = rat_from_json(&iv[0]).map_err(|e| format!("{ctx}: {e}"))?;
    let hi = rat_from_json(&iv[1]).map_err(|e| format!("{ctx}: {e}"))?;
    AlgebraicTime::from_isolating(&p, lo, hi)
        .ok_or_else(|| format!("{ctx}: interval does not isolate a root"))
}

fn parse_indices(v: &Value, ctx: &str) -> Result<Vec<usize>, String> {
    array(v, ctx)?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|i| i as usize)
                .ok_or_else(|| format!("{ctx}: bad index"))
        })
        .collect()
}

/// Rebuilds a center function from [`trace`] output. Events are derived from
/// the arcs; the arcs must tile `domain`.
pub fn parse_trace(v: &Value, domain: &Interval, dim: usize) -> Result<PiecewiseCenter, CliError> {
    parse_trace_inner(v, domain, dim).map_err(CliError::Invalid)
}

fn parse_trace_inner(v: &Value, domain: &Interval, dim: usize) -> Result<PiecewiseCenter, String> {
    let raw = array(field(v, "arcs", "trace")?, "arcs")?;
    if raw.is_empty() {
        return Err("trace has no arcs".into());
    }
    let mut arcs = Vec::new();
    for (i, a) in raw.iter().enumerate() {
        let ctx = format!("arc {i}");
        let span = field(a, "span", &ctx)?;
        let start = parse_time(field(span, "start", &ctx)?, &ctx)?;
        let end = parse_time(field(span, "end", &ctx)?, &ctx)?;
        let sup = field(a, "support", &ctx)?;
        let support = SupportSet::new(
            parse_indices(field(sup, "static", &ctx)?, &ctx)?,
            parse_indices(field(sup, "mobile", &ctx)?, &ctx)?,
        );
        let comps = array(field(a, "center", &ctx)?, &ctx)?
            .iter()
            .map(|c| parse_ratfn(c, &ctx))
            .collect::<Result<Vec<_>, _>>()?;
        if comps.len() != dim {
            return Err(format!(
                "{ctx}: center has {} components, expected {dim}",
                comps.len()
            ));
        }
        let radius_sq = parse_ratfn(field(a, "radius_sq", &ctx)?, &ctx)?;
        if start >= end {
            return Err(format!("{ctx}: empty span"));
        }
        arcs.push(Arc {
            start,
            end,
            support,
            curve: RatCurve::new_unchecked(comps, domain.clone()),
            radius_sq,
        });
    }
    let lo = AlgebraicTime::rational(domain.lo.clone());
    let hi = AlgebraicTime::rational(domain.hi.clone());
    if arcs[0].start != lo || arcs[arcs.len() - 1].end != hi {
        return Err("arcs do not cover the domain".into());
    }
    if let Some(i) = (1..arcs.len()).find(|&i| arcs[i - 1].end != arcs[i].start) {
        return Err(format!("gap or overlap between arcs {} and {i}", i - 1));
    }
    let mut events = vec![Event {
        time: lo,
        kind: EventKind::Start,
        joined: arcs[0].support.clone(),
        left: SupportSet::default(),
    }];
    for w in arcs.windows(2) {
        events.push(Event {
            time: w[1].start.clone(),
            kind: EventKind::SupportChange,
            joined: w[1].support.minus(&w[0].support),
            left: w[0].support.minus(&w[1].support),
        });
    }
    events.push(Event {
        time: hi,
        kind: EventKind::End,
        joined: SupportSet::default(),
        left: arcs[arcs.len() - 1].support.clone(),
    });
    Ok(PiecewiseCenter {
        arcs,
        events,
        domain: domain.clone(),
    })
}
