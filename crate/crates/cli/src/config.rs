//! Instance configuration files and exact number parsing.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use onecenter::{Instance, Interval, Point, Poly, Rat, RatCurve, RatFn, TraceOptions};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub const FORMAT: u64 = 1;
pub const SEED_VAR: &str = "ONECENTER_SEED";
pub const DEFAULT_SAMPLES: usize = 500;

/// Parses an integer, `p/q` or decimal (`-1.25`, `3e-2`) string exactly.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let bad = || format!("not an exact number: {s:?}");
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rat::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = digits.split_once('.').unwrap_or((digits, ""));
    if ip.is_empty() && fp.is_empty() || !(ip.chars().chain(fp.chars())).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let n: BigInt = format!("{ip}{fp}").parse().map_err(|_| bad())?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rat::from_integer(n * ten.pow(scale as u32))
    } else {
        Rat::new(n, ten.pow((-scale) as u32))
    };
    if neg {
        r = -r;
    }
    Ok(r)
}

/// Exact number from a JSON string or integer. Fractional JSON numbers are
/// rejected since they are binary floats once parsed.
pub fn rat_from_json(v: &Value) -> Result<Rat, String> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()),
        Value::Number(n) => Err(format!("write {n} as a string to keep it exact")),
        other => Err(format!("expected a number, got {other}")),
    }
}

fn rats(vs: &[Value]) -> Result<Vec<Rat>, String> {
    vs.iter().map(rat_from_json).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRatFn {
    num: Vec<Value>,
    #[serde(default)]
    den: Option<Vec<Value>>,
}

impl RawRatFn {
    fn build(&self) -> Result<RatFn, String> {
        let num = Poly::new(rats(&self.num)?);
        let den = match &self.den {
            Some(d) => Poly::new(rats(d)?),
            None => Poly::one(),
        };
        if den.is_zero() {
            return Err("zero denominator polynomial".into());
        }
        Ok(RatFn::new(num, den))
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    refine_width: Option<Value>,
    seed: Option<u64>,
    skip_gp_check: Option<bool>,
    candidate_cap: Option<usize>,
    samples: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    format: u64,
    dimension: usize,
    #[serde(rename = "static", default)]
    statics: Vec<Vec<Value>>,
    #[serde(default)]
    mobile: Vec<Vec<RawRatFn>>,
    domain: [Value; 2],
    #[serde(default)]
    options: RawOptions,
}

pub struct Config {
    pub instance: Instance,
    pub options: TraceOptions,
    pub samples: usize,
}

/// Seed from the environment override, if set.
pub fn env_seed() -> Result<Option<u64>, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Invalid(format!("{SEED_VAR} is not a u64: {s:?}"))),
        Err(_) => Ok(None),
    }
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn check_format(v: &Value) -> Result<(), CliError> {
    match v.get("format").and_then(Value::as_u64) {
        Some(FORMAT) => Ok(()),
        Some(f) => Err(CliError::Invalid(format!("unsupported format {f}"))),
        None => Err(CliError::Invalid("missing \"format\": 1".into())),
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        Config::from_json(read_json(path)?)
    }

    pub fn from_json(v: Value) -> Result<Config, CliError> {
        check_format(&v)?;
        let raw: RawConfig =
            serde_json::from_value(v).map_err(|e| CliError::Invalid(e.to_string()))?;
        raw.build().map_err(CliError::Invalid)
    }
}

impl RawConfig {
    fn build(self) -> Result<Config, String> {
        debug_assert_eq!(self.format, FORMAT);
        let d = self.dimension;
        if d < 2 {
            return Err(format!("dimension must be at least 2, got {d}"));
        }
        let lo = rat_from_json(&self.domain[0])?;
        let hi = rat_from_json(&self.domain[1])?;
        if lo >= hi {
            return Err("domain must satisfy lo < hi".into());
        }
        let domain = Interval::new(lo, hi);
        let mut statics = Vec::new();
        for (i, p) in self.statics.iter().enumerate() {
            if p.len() != d {
                return Err(format!(
                    "static {i} has {} coordinates, expected {d}",
                    p.len()
                ));
            }
            statics.push(Point::new(rats(p).map_err(|e| format!("static {i}: {e}"))?));
        }
        let mut mobiles = Vec::new();
        for (i, comps) in self.mobile.iter().enumerate() {
            if comps.len() != d {
                return Err(format!(
                    "mobile {i} has {} components, expected {d}",
                    comps.len()
                ));
            }
            let fs = comps
                .iter()
                .map(RawRatFn::build)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("mobile {i}: {e}"))?;
            mobiles
                .push(RatCurve::new(fs, domain.clone()).map_err(|e| format!("mobile {i}: {e}"))?);
        }
        let instance = Instance::new(statics, mobiles, domain).map_err(|e| e.to_string())?;

        let mut options = TraceOptions::default();
        let o = self.options;
        if let Some(w) = o.refine_width {
            options.refine_width = rat_from_json(&w)?;
            if options.refine_width <= Rat::zero() {
                return Err("refine_width must be positive".into());
            }
        }
        if let Some(s) = o.seed {
            options.seed = s;
        }
        if let Some(b) = o.skip_gp_check {
            options.skip_gp_check = b;
        }
        if let Some(c) = o.candidate_cap {
            options.candidate_cap = c;
        }
        if let Some(s) = env_seed().map_err(|e| e.to_string())? {
            options.seed = s;
        }
        Ok(Config {
            instance,
            options,
            samples: o.samples.unwrap_or(DEFAULT_SAMPLES),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use onecenter::polyalg::{int, rat};

    #[test]
    fn parses_exact_numbers() {
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert_eq!(parse_rat("-7/14").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rat("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_rat("1e3").unwrap(), int(1000));
        assert_eq!(parse_rat("0.1").unwrap(), rat(1, 10));
        for bad in ["", "1/0", "abc", "1.2.3", "--1", "1/", "."] {
            assert!(parse_rat(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_floats_are_rejected() {
        assert_eq!(rat_from_json(&serde_json::json!(4)).unwrap(), int(4));
        assert!(rat_from_json(&serde_json::json!(0.5)).is_err());
        assert_eq!(rat_from_json(&serde_json::json!("0.5")).unwrap(), rat(1, 2));
    }
}
