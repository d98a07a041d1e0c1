//! Rational parametric curves `t -> (p_1(t)/q_1(t), ..., p_d(t)/q_d(t))`.

use thiserror::Error;

use crate::geom::Point;
use crate::polyalg::{isolate_roots, Interval, PolyError, Rat, RatFn};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve needs at least one component")]
    Empty,
    #[error("denominator of component {component} vanishes inside the domain")]
    PoleInDomain { component: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A `d`-tuple of rational functions on a compact domain, each with a
/// denominator that does not vanish on the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatCurve {
    components: Vec<RatFn>,
    domain: Interval,
}

impl RatCurve {
    pub fn new(components: Vec<RatFn>, domain: Interval) -> Result<Self, CurveError> {
        if components.is_empty() {
            return Err(CurveError::Empty);
        }
        for (i, c) in components.iter().enumerate() {
            if !isolate_roots(c.den(), &domain).is_empty() {
                return Err(CurveError::PoleInDomain { component: i });
            }
        }
        Ok(RatCurve { components, domain })
    }

    /// Skips the pole check. Used for derived curves (circumcenter arcs) whose
    /// poles are handled as events by the caller.
    pub fn new_unchecked(components: Vec<RatFn>, domain: Interval) -> Self {
        RatCurve { components, domain }
    }

    pub fn constant(p: &Point, domain: Interval) -> Self {
        RatCurve {
            components: p.coords().iter().cloned().map(RatFn::constant).collect(),
            domain,
        }
    }

    pub fn components(&self) -> &[RatFn] {
        &self.components
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_constant(&self) -> bool {
        self.components.iter().all(RatFn::is_constant)
    }

    pub fn eval(&self, t: &Rat) -> Result<Point, PolyError> {
        let coords = self
            .components
            .iter()
            .map(|c| c.eval(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Point::new(coords))
    }

    pub fn derivative(&self) -> RatCurve {
        RatCurve {
            components: self.components.iter().map(RatFn::derivative).collect(),
            domain: self.domain.clone(),
        }
    }

    /// Componentwise identity as rational functions.
    pub fn same_curve(&self, other: &RatCurve) -> bool {
        self.dim() == other.dim()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.same_function(b))
    }

    /// `||self(t) - other(t)||^2` as a rational function.
    pub fn dist_sq(&self, other: &RatCurve) -> RatFn {
        self.components
            .iter()
            .zip(&other.components)
            .fold(RatFn::zero(), |acc, (a, b)| {
                let d = a - b;
                &acc + &(&d * &d)
            })
    }

    /// `||self(t) - p||^2` as a rational function.
    pub fn dist_sq_to_point(&self, p: &Point) -> RatFn {
        self.components
            .iter()
            .zip(p.coords())
            .fold(RatFn::zero(), |acc, (a, c)| {
                let d = a - &RatFn::constant(c.clone());
                &acc + &(&d * &d)
            })
    }

    pub fn with_domain(&self, domain: Interval) -> RatCurve {
        RatCurve {
            components: self.components.clone(),
            domain,
        }
    }
}
