//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use onecenter::geom::general_position_check;
use onecenter::polyalg::{int, rat};
use onecenter::{Instance, Interval, Point, Poly, Rat, RatCurve, RatFn};
use rand::Rng;

pub fn small_rat<R: Rng>(rng: &mut R, span: i64, den: i64) -> Rat {
    rat(rng.gen_range(-span * den..=span * den), den)
}

pub fn random_point<R: Rng>(rng: &mut R, d: usize, span: i64) -> Point {
    let den = *[1, 2, 3].get(rng.gen_range(0..3)).unwrap();
    Point::new((0..d).map(|_| small_rat(rng, span, den)).collect())
}

/// `n` distinct statics in general position.
pub fn random_statics<R: Rng>(rng: &mut R, n: usize, d: usize) -> Vec<Point> {
    loop {
        let pts: Vec<Point> = (0..n).map(|_| random_point(rng, d, 5)).collect();
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| pts[i] != pts[j]));
        if distinct && general_position_check(&pts) {
            return pts;
        }
    }
}

pub fn random_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly {
    let den = rng.gen_range(1..=3);
    Poly::new((0..=deg).map(|_| small_rat(rng, 4, den)).collect())
}

/// Polynomial components of degree at most `deg`, occasionally divided by a
/// positive denominator `1 + c t^2`.
pub fn random_curve<R: Rng>(rng: &mut R, d: usize, deg: usize, dom: &Interval) -> RatCurve {
    let den = if rng.gen_bool(0.25) {
        Poly::new(vec![int(1), int(0), rat(rng.gen_range(1..=3), 2)])
    } else {
        Poly::one()
    };
    let comps = (0..d)
        .map(|_| {
            let k = rng.gen_range(0..=deg);
            RatFn::new(random_poly(rng, k), den.clone())
        })
        .collect();
    RatCurve::new(comps, dom.clone()).unwrap()
}

pub fn random_instance<R: Rng>(rng: &mut R, d: usize, n: usize, m: usize, deg: usize) -> Instance {
    let dom = Interval::new(int(-2), int(2));
    let statics = random_statics(rng, n, d);
    let mobiles = (0..m).map(|_| random_curve(rng, d, deg, &dom)).collect();
    Instance::new(statics, mobiles, dom).unwrap()
}

pub fn example(coeffs: &[i64], lo: i64, hi: i64) -> Instance {
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

/// Distinct real roots of `p` in `(lo, hi]`, found without Sturm sequences:
/// recursive bisection of the square-free part, discarding a cell when the
/// value at its midpoint exceeds a derivative bound times the half-width,
/// down to cells of width `(hi - lo) / 2^depth`.
pub fn bisection_root_count(p: &Poly, lo: &Rat, hi: &Rat, depth: u32) -> usize {
    let q = p.squarefree_part();
    if q.is_constant() {
        return 0;
    }
    cell_roots(&q, lo, hi, depth)
}

fn deriv_bound(q: &Poly, r: &Rat) -> Rat {
    use num_traits::Signed;
    let mut total = Rat::from_integer(0.into());
    let mut pow = Rat::from_integer(1.into());
    for (k, c) in q.coeffs().iter().enumerate().skip(1) {
        total += c.abs() * Rat::from_integer((k as i64).into()) * &pow;
        pow *= r;
    }
    total
}

fn cell_roots(q: &Poly, l: &Rat, r: &Rat, depth: u32) -> usize {
    use num_traits::Signed;
    let sl = q.sign_at(l);
    let sr = q.sign_at(r);
    let half = (r - l) / Rat::from_integer(2.into());
    let m = l + &half;
    let big = if l.abs() > r.abs() { l.abs() } else { r.abs() };
    if sl != 0 && sr != 0 && q.eval(&m).abs() > deriv_bound(q, &big) * &half {
        return 0;
    }
    if depth == 0 {
        return usize::from(sr == 0) + usize::from(sl != 0 && sr != 0 && sl != sr);
    }
    cell_roots(q, l, &m, depth - 1) + cell_roots(q, &m, r, depth - 1)
}

/// Rank of the difference vectors by plain Gaussian elimination with full
/// pivot search.
pub fn rank_oracle(pts: &[Point]) -> usize {
    let mut m: Vec<Vec<Rat>> = pts[1..].iter().map(|p| p.sub(&pts[0])).collect();
    let cols = pts[0].dim();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != int(0)) else {
            continue;
        };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && m[r][c] != int(0) {
                let f = &m[r][c] / &m[rank][c];
                let row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn independent_set<R: Rng>(rng: &mut R, d: usize, k: usize) -> Vec<Point> {
    loop {
        let pts: Vec<Point> = (0..k).map(|_| random_point(rng, d, 6)).collect();
        if rank_oracle(&pts) + 1 == k {
            return pts;
        }
    }
}

/// Rational point on the unit sphere by inverse stereographic projection.
pub fn sphere_point(u: &[Rat]) -> Vec<Rat> {
    let n2: Rat = u.iter().map(|x| x * x).sum();
    let den = &n2 + int(1);
    let mut x: Vec<Rat> = u.iter().map(|a| a * int(2) / &den).collect();
    x.push((&n2 - int(1)) / &den);
    x
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}
