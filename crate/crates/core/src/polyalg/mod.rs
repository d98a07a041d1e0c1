//! Exact univariate polynomial and rational-function arithmetic over the
//! rationals, with Sturm-sequence root counting, isolation and refinement.

mod poly;
mod ratfn;
mod roots;

use thiserror::Error;

pub use poly::{int, rat, rat_to_decimal, rat_to_f64, sign, simplest_between, Poly, Rat};
pub use ratfn::RatFn;
pub use roots::{
    isolate_roots, rational_between, refine, sturm_count, ten_pow_neg, AlgebraicTime, Interval,
    IsolatedRoot, SturmSequence,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("denominator vanishes at t = {t}")]
    PoleAtSample { t: Rat },
    #[error("division by the zero rational function")]
    DivisionByZero,
}
