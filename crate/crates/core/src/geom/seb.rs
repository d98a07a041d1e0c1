use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::circum::{affine_rank, cc_affine_coefficients, circumcenter};
use super::linalg::bareiss_det;
use super::{Ball, GeomError, Point};
use crate::polyalg::Rat;

/// Seed used by [`seb`] for the move-to-front shuffle.
pub const DEFAULT_SEB_SEED: u64 = 0x5eb;

/// Smallest enclosing ball together with a certified support: an affinely
/// independent subset of boundary points whose circumball is the ball and
/// whose circumcenter lies in their convex hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SebResult {
    pub ball: Ball,
    pub support: Vec<usize>,
}

pub fn seb(points: &[Point]) -> Result<SebResult, GeomError> {
    seb_with_seed(points, DEFAULT_SEB_SEED)
}

/// Welzl's move-to-front recursion over exact rationals.
pub fn seb_with_seed(points: &[Point], seed: u64) -> Result<SebResult, GeomError> {
    if points.is_empty() {
        return Err(GeomError::Empty);
    }
    let d = points[0].dim();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(GeomError::DimensionMismatch {
            expected: d,
            found: p.dim(),
        });
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut boundary = Vec::with_capacity(d + 1);
    let end = order.len();
    let (ball, welzl_support) = mtf(points, &mut order, end, &mut boundary, d);
    let ball = ball.expect("non-empty input gives a ball");
    let support = support_of(points, &ball).unwrap_or(welzl_support);
    Ok(SebResult { ball, support })
}

// smallest ball enclosing order[..end] with `boundary` on its surface
fn mtf(
    points: &[Point],
    order: &mut Vec<usize>,
    end: usize,
    boundary: &mut Vec<usize>,
    d: usize,
) -> (Option<Ball>, Vec<usize>) {
    let mut ball = base_ball(points, boundary);
    let mut support = boundary.clone();
    if boundary.len() == d + 1 {
        return (ball, support);
    }
    let mut i = 0;
    while i < end {
        let p = order[i];
        let outside = ball.as_ref().is_none_or(|b| !b.contains(&points[p]));
        if outside {
            boundary.push(p);
            let (b, s) = mtf(points, order, i, boundary, d);
            boundary.pop();
            ball = b;
            support = s;
            order.remove(i);
            order.insert(0, p);
        }
        i += 1;
    }
    (ball, support)
}

fn base_ball(points: &[Point], boundary: &[usize]) -> Option<Ball> {
    match boundary {
        [] => None,
        [p] => Some(Ball {
            center: points[*p].clone(),
            radius_sq: Rat::zero(),
        }),
        _ => {
            let pts: Vec<Point> = boundary.iter().map(|&i| points[i].clone()).collect();
            Some(circumcenter(&pts).expect("Welzl boundary sets stay affinely independent"))
        }
    }
}

/// Certified support of `ball` among `points`: the boundary points (first
/// index kept among coincident ones), reduced to a maximum affinely
/// independent subset whose circumcenter is the ball's center and lies in
/// its convex hull. `None` when no such subset exists, i.e. `ball` is not
/// the smallest enclosing ball of `points`.
pub fn support_of(points: &[Point], ball: &Ball) -> Option<Vec<usize>> {
    let mut on: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if ball.on_boundary(p) && !on.iter().any(|&j| points[j] == *p) {
            on.push(i);
        }
    }
    if ball.radius_sq.is_zero() {
        return on.first().map(|&i| vec![i]);
    }
    let d = ball.center.dim();
    let certifies = |ids: &[usize]| {
        let pts: Vec<Point> = ids.iter().map(|&i| points[i].clone()).collect();
        match (circumcenter(&pts), cc_affine_coefficients(&pts)) {
            (Ok(cb), Ok(coef)) => cb.center == ball.center && coef.iter().all(|c| !c.is_negative()),
            _ => false,
        }
    };
    if on.len() <= d + 1 && certifies(&on) {
        return Some(on);
    }
    let pts: Vec<Point> = on.iter().map(|&i| points[i].clone()).collect();
    let (rank, _) = affine_rank(&pts);
    for size in (2..=(rank + 1).min(d + 1)).rev() {
        for combo in Combinations::new(on.len(), size) {
            let ids: Vec<usize> = combo.iter().map(|&c| on[c]).collect();
            if certifies(&ids) {
                return Some(ids);
            }
        }
    }
    None
}

/// Certificate: `t` is a support of the smallest enclosing ball
/// of `all` iff every point lies in the circumball of `t` and the
/// circumcenter is a convex combination of `t`.
pub fn is_boundary_support(t: &[Point], all: &[Point]) -> Result<bool, GeomError> {
    let ball = circumcenter(t)?;
    let coef = cc_affine_coefficients(t)?;
    Ok(coef.iter().all(|c| !c.is_negative()) && all.iter().all(|p| ball.contains(p)))
}

/// Exhaustive smallest enclosing ball: tries every affinely independent
/// subset of size 2..=d+1 and keeps the one passing the boundary-support
/// certificate. Intended for small inputs only.
pub fn seb_bruteforce(points: &[Point]) -> Result<Ball, GeomError> {
    let first = points.first().ok_or(GeomError::Empty)?;
    if points.iter().all(|p| p == first) {
        return Ok(Ball {
            center: first.clone(),
            radius_sq: Rat::zero(),
        });
    }
    let d = first.dim();
    let mut found: Option<Ball> = None;
    for size in 2..=(d + 1).min(points.len()) {
        for combo in Combinations::new(points.len(), size) {
            let t: Vec<Point> = combo.iter().map(|&i| points[i].clone()).collect();
            if affine_rank(&t).0 + 1 != t.len() {
                continue;
            }
            if is_boundary_support(&t, points)? {
                let ball = circumcenter(&t)?;
                match &found {
                    None => found = Some(ball),
                    Some(b) => assert_eq!(b, &ball, "two distinct enclosing balls certified"),
                }
            }
        }
    }
    Ok(found.expect("some subset certifies the smallest enclosing ball"))
}

/// True iff every subset of at most `d + 1` points is affinely independent
/// and no `d + 2` points are co-spherical. Cospherality uses the lifted
/// determinant with rows `(p, |p|^2, 1)`.
pub fn general_position_check(points: &[Point]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let d = first.dim();
    let n = points.len();
    let k = n.min(d + 1);
    for combo in Combinations::new(n, k) {
        let sub: Vec<Point> = combo.iter().map(|&i| points[i].clone()).collect();
        if affine_rank(&sub).0 + 1 != k {
            return false;
        }
    }
    if n >= d + 2 {
        for combo in Combinations::new(n, d + 2) {
            let rows = combo
                .iter()
                .map(|&i| {
                    let p = &points[i];
                    let mut r = p.coords().to_vec();
                    r.push(p.norm_sq());
                    r.push(Rat::from_integer(1.into()));
                    r
                })
                .collect();
            if bareiss_det(rows).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Lexicographic k-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::int;

    fn pts(v: &[&[i64]]) -> Vec<Point> {
        v.iter().map(|c| Point::from_ints(c)).collect()
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn single_point() {
        let r = seb(&pts(&[&[0, 0]])).unwrap();
        assert_eq!(r.ball.radius_sq, int(0));
        assert_eq!(r.support, vec![0]);
    }

    #[test]
    fn obtuse_triangle_uses_long_side() {
        let p = pts(&[&[0, 0], &[4, 0], &[1, 1]]);
        let r = seb(&p).unwrap();
        assert_eq!(r.ball.center, Point::from_ints(&[2, 0]));
        assert_eq!(r.ball.radius_sq, int(4));
        assert_eq!(r.support, vec![0, 1]);
        assert_eq!(seb_bruteforce(&p).unwrap(), r.ball);
    }

    #[test]
    fn boundary_support_certificate() {
        let s = pts(&[&[0, 0], &[4, 0], &[1, 1]]);
        assert!(is_boundary_support(&s[..2], &s).unwrap());
        assert!(!is_boundary_support(&[s[0].clone(), s[2].clone()], &s).unwrap());
        let r = pts(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(is_boundary_support(&r, &r).unwrap());
    }

    #[test]
    fn cocircular_square() {
        let p = pts(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let b = seb_bruteforce(&p).unwrap();
        assert_eq!(b.center, Point::from_ints(&[0, 0]));
        assert_eq!(b.radius_sq, int(1));
        let r = seb(&p).unwrap();
        assert_eq!(r.ball, b);
        assert_eq!(r.support.len(), 3);
    }

    #[test]
    fn duplicates_are_harmless() {
        let p = pts(&[&[1, 1], &[1, 1], &[3, 1], &[3, 1]]);
        let r = seb(&p).unwrap();
        assert_eq!(r.ball.center, Point::from_ints(&[2, 1]));
        assert_eq!(r.support, vec![0, 2]);
        assert_eq!(seb_bruteforce(&p).unwrap(), r.ball);
    }

    #[test]
    fn general_position_examples() {
        assert!(general_position_check(&pts(&[&[0, 4], &[-2, 2]])));
        assert!(!general_position_check(&pts(&[&[0, 0], &[1, 0], &[2, 0]])));
        assert!(!general_position_check(&pts(&[
            &[1, 0],
            &[0, 1],
            &[-1, 0],
            &[0, -1]
        ])));
        assert!(general_position_check(&pts(&[
            &[0, 0],
            &[3, 0],
            &[0, 2],
            &[5, 7]
        ])));
    }
}
