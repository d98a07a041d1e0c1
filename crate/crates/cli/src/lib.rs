//! Subcommands of the `onecenter` binary. Each returns the text for stdout
//! and an exit code, so they can be tested without spawning a process.

pub mod config;
pub mod output;
pub mod plot;

use std::path::Path;

use onecenter::geom::{seb_bruteforce, seb_with_seed, DEFAULT_SEB_SEED};
use onecenter::oracle::{continuity_audit, verify};
use onecenter::polyalg::ten_pow_neg;
use onecenter::tracker::{one_sided_derivative, trace, Side, TraceError};
use onecenter::{PiecewiseCenter, Point, Rat};
use serde_json::{json, Value};

use config::{env_seed, parse_rat, rat_from_json, read_json, Config, FORMAT};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{count} candidate subsets exceed the cap of {cap}")]
    Guard { count: u128, cap: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Guard { .. } => EXIT_GUARD,
        }
    }

    /// Machine-readable diagnostic for stderr.
    pub fn to_json(&self) -> Value {
        match self {
            CliError::Invalid(m) => {
                json!({ "format": FORMAT, "error": "invalid_input", "message": m })
            }
            CliError::Guard { count, cap } => json!({
                "format": FORMAT,
                "error": "complexity_guard",
                "message": self.to_string(),
                "count": count.to_string(),
                "cap": cap,
            }),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::ComplexityGuard { count, cap } => CliError::Guard { count, cap },
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn json(v: &Value, code: u8) -> Output {
        let mut stdout = serde_json::to_string_pretty(v).expect("json values serialize");
        stdout.push('\n');
        Output { stdout, code }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivative {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Csv,
}

pub fn cmd_trace(cfg: &Config) -> Result<Output, CliError> {
    let pc = trace(&cfg.instance, &cfg.options)?;
    Ok(Output::json(
        &output::trace(&pc, &cfg.options.refine_width),
        EXIT_OK,
    ))
}

pub fn cmd_verify(
    cfg: &Config,
    fixture: Option<&Path>,
    samples: Option<usize>,
) -> Result<Output, CliError> {
    let inst = &cfg.instance;
    let pc = match fixture {
        Some(path) => {
            let v = read_json(path)?;
            config::check_format(&v)?;
            output::parse_trace(&v, inst.domain(), inst.dim())?
        }
        None => trace(inst, &cfg.options)?,
    };
    let n = samples.unwrap_or(cfg.samples);
    let rep = verify(&pc, inst, n, cfg.options.seed);
    let tol = ten_pow_neg(9);
    let mut continuous = true;
    let gaps: Vec<Value> = continuity_audit(&pc, &cfg.options.refine_width)
        .iter()
        .map(|g| {
            let max = g.max();
            let ok = match &max {
                Some(m) if g.exact => *m == Rat::from_integer(0.into()),
                Some(m) => *m < tol,
                None => false,
            };
            continuous &= ok;
            json!({
                "event": g.event,
                "exact": g.exact,
                "max_gap": max.as_ref().map(output::decimal),
                "ok": ok,
            })
        })
        .collect();
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .map(|f| {
            json!({
                "t": output::rat(&f.t),
                "arc": f.arc,
                "expected": output::point(&f.expected),
                "got": f.got.as_ref().map(output::point),
            })
        })
        .collect();
    let passed = rep.passed() && continuous;
    let v = json!({
        "format": FORMAT,
        "passed": passed,
        "samples": rep.samples,
        "exact_matches": rep.exact_matches,
        "max_dev": output::decimal(&rep.max_dev),
        "failures": failures,
        "continuity": gaps,
    });
    Ok(Output::json(
        &v,
        if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
    ))
}

fn derivative_at(pc: &PiecewiseCenter, t: &Rat, side: Side, width: &Rat) -> Option<Vec<Rat>> {
    if let Some(i) = pc
        .events
        .iter()
        .position(|e| e.time.as_rational() == Some(t))
    {
        return one_sided_derivative(pc, i, side, width);
    }
    let arc = pc.arc_at(t)?;
    Some(arc.curve.derivative().eval(t).ok()?.coords().to_vec())
}

pub fn cmd_eval(cfg: &Config, t: &str, derivative: Option<Derivative>) -> Result<Output, CliError> {
    let t = parse_rat(t).map_err(CliError::Invalid)?;
    let dom = cfg.instance.domain();
    if t < dom.lo || t > dom.hi {
        return Err(CliError::Invalid(format!(
            "t = {t} lies outside the domain"
        )));
    }
    let pc = trace(&cfg.instance, &cfg.options)?;
    let (arc, p) = pc
        .arcs
        .iter()
        .enumerate()
        .find(|(_, a)| a.contains(&t))
        .and_then(|(i, a)| a.curve.eval(&t).ok().map(|p| (i, p)))
        .ok_or_else(|| CliError::Invalid(format!("no arc can be evaluated at {t}")))?;
    let mut v = json!({
        "format": FORMAT,
        "t": output::rat(&t),
        "arc": arc,
        "point": output::point(&p),
        "approx": output::point_approx(&p),
    });
    if let Some(d) = derivative {
        let w = &cfg.options.refine_width;
        let enc = |side| {
            derivative_at(&pc, &t, side, w)
                .map(|c| Value::Array(c.iter().map(output::rat).collect()))
                .unwrap_or(Value::Null)
        };
        let mut dv = serde_json::Map::new();
        if d != Derivative::Right {
            dv.insert("left".into(), enc(Side::Left));
        }
        if d != Derivative::Left {
            dv.insert("right".into(), enc(Side::Right));
        }
        v["derivative"] = Value::Object(dv);
    }
    Ok(Output::json(&v, EXIT_OK))
}

pub fn cmd_plot(
    cfg: &Config,
    out: &Path,
    format: PlotFormat,
    samples: usize,
) -> Result<Output, CliError> {
    let d = cfg.instance.dim();
    if d != 2 {
        return Err(CliError::Invalid(format!(
            "plot needs dimension 2, got {d}"
        )));
    }
    let pc = trace(&cfg.instance, &cfg.options)?;
    let w = &cfg.options.refine_width;
    let body = match format {
        PlotFormat::Csv => plot::csv(&pc, samples, w),
        PlotFormat::Svg => plot::svg(&pc, &cfg.instance, samples, w),
    };
    std::fs::write(out, body)
        .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", out.display())))?;
    let v = json!({
        "format": FORMAT,
        "written": out.display().to_string(),
        "arcs": pc.arcs.len(),
    });
    Ok(Output::json(&v, EXIT_OK))
}

/// Points from `{"format": 1, "points": [...]}` or a bare array.
fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    let v = read_json(path)?;
    let list = match &v {
        Value::Array(a) => a,
        Value::Object(_) => {
            config::check_format(&v)?;
            v.get("points")
                .and_then(Value::as_array)
                .ok_or_else(|| CliError::Invalid("missing \"points\" array".into()))?
        }
        _ => return Err(CliError::Invalid("expected a points array".into())),
    };
    let pts = list
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let cs = p
                .as_array()
                .ok_or_else(|| format!("point {i}: expected an array"))?;
            cs.iter()
                .map(rat_from_json)
                .collect::<Result<Vec<_>, _>>()
                .map(Point::new)
                .map_err(|e| format!("point {i}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Invalid)?;
    let Some(first) = pts.first() else {
        return Err(CliError::Invalid("no points".into()));
    };
    if let Some(i) = pts.iter().position(|p| p.dim() != first.dim()) {
        return Err(CliError::Invalid(format!(
            "point {i} has a different dimension"
        )));
    }
    Ok(pts)
}

pub fn cmd_seb(path: &Path, check: bool) -> Result<Output, CliError> {
    let pts = read_points(path)?;
    let seed = env_seed()?.unwrap_or(DEFAULT_SEB_SEED);
    let r = seb_with_seed(&pts, seed).map_err(|e| CliError::Invalid(e.to_string()))?;
    let mut v = json!({
        "format": FORMAT,
        "center": output::point(&r.ball.center),
        "radius_sq": output::rat(&r.ball.radius_sq),
        "support": r.support,
    });
    let mut code = EXIT_OK;
    if check {
        let agrees = seb_bruteforce(&pts).is_ok_and(|b| b == r.ball);
        v["bruteforce_agrees"] = Value::Bool(agrees);
        if !agrees {
            code = EXIT_VERIFY_FAILED;
        }
    }
    Ok(Output::json(&v, code))
}
