//! Exact static geometry: affine rank, circumcenters of simplices (numeric
//! and as rational functions of `t`), smallest enclosing balls and support
//! certification.

mod circum;
mod linalg;
mod seb;

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::polyalg::Rat;

pub use circum::{
    affine_rank, cc_affine_coefficients, circumcenter, circumcenter_symbolic, GramSystem,
    SymbolicCircumcenter,
};
pub use linalg::{bareiss_det, ExactRing};
pub(crate) use seb::Combinations;
pub use seb::{
    general_position_check, is_boundary_support, seb, seb_bruteforce, seb_with_seed, support_of,
    SebResult, DEFAULT_SEB_SEED,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("points are affinely dependent (Gram determinant is zero)")]
    DegenerateSimplex,
    #[error("Gram determinant vanishes identically in t")]
    IdenticallyDegenerate,
    #[error("empty point set")]
    Empty,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Point in `R^d` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point(Vec<Rat>);

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| crate::polyalg::int(c)).collect())
    }

    pub fn origin(d: usize) -> Self {
        Point(vec![Rat::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn sub(&self, other: &Point) -> Vec<Rat> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    pub fn dist_sq(&self, other: &Point) -> Rat {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let d = a - b;
                &d * &d
            })
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn norm_sq(&self) -> Rat {
        dot(&self.0, &self.0)
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Rat::zero(), |acc, x| acc + x)
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Closed ball, radius kept squared so it stays rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub center: Point,
    pub radius_sq: Rat,
}

impl Ball {
    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist_sq(p) <= self.radius_sq
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.center.dist_sq(p) == self.radius_sq
    }

    pub fn strictly_inside(&self, p: &Point) -> bool {
        self.center.dist_sq(p) < self.radius_sq
    }
}
