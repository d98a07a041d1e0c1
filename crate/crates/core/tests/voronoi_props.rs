mod common;

use num_traits::Signed;
use onecenter::geom::{seb, Ball};
use onecenter::polyalg::{int, rat, ten_pow_neg};
use onecenter::voronoi::{
    bisector, curve_face_intersections, curve_hyperplane_roots, curve_sphere_intersections,
    face_membership, CrossingLabel,
};
use onecenter::{Interval, Point, Poly, RatCurve, RatFn};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn curve(x: RatFn, y: RatFn, lo: i64, hi: i64) -> RatCurve {
    RatCurve::new(vec![x, y], Interval::new(int(lo), int(hi))).unwrap()
}

fn poly(c: &[i64]) -> RatFn {
    RatFn::from_poly(Poly::from_ints(c))
}

#[test]
fn bisector_examples() {
    let h = bisector(&Point::from_ints(&[0, 0]), &Point::from_ints(&[0, 2])).unwrap();
    assert_eq!(h.normal, vec![int(0), int(4)]);
    assert_eq!(h.offset, int(4));
    let c = curve(poly(&[0, 1]), RatFn::zero(), -3, 3);
    let h = bisector(&Point::from_ints(&[0, 0]), &Point::from_ints(&[2, 0])).unwrap();
    let roots = curve_hyperplane_roots(&c, &h).unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0].time.as_rational(), Some(&int(1)));
}

#[test]
fn circumcenter_lies_on_the_triple_face() {
    let s = vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[4, 0]),
        Point::from_ints(&[0, 2]),
    ];
    assert!(face_membership(&Point::from_ints(&[2, 1]), &[0, 1, 2], &s));
}

#[test]
fn cubic_first_branch_meets_face_at_zero() {
    let c = curve(
        poly(&[0, 0, 0, 1]).scale(&rat(1, 2)),
        RatFn::constant(int(2)),
        -2,
        2,
    );
    let s = vec![Point::from_ints(&[0, 4]), Point::from_ints(&[-2, 2])];
    let hits = curve_face_intersections(&c, &[0], &s);
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0].time.as_rational(), Some(&int(0)));
    assert_eq!(hits[0].joined, vec![1]);
}

#[test]
fn constant_arc_has_no_face_events() {
    let s = vec![
        Point::from_ints(&[0, 4]),
        Point::from_ints(&[-2, 2]),
        Point::from_ints(&[3, -1]),
    ];
    let center = seb(&s).unwrap().ball.center;
    let c = RatCurve::constant(&center, Interval::new(int(0), int(5)));
    let sup: Vec<usize> = seb(&s).unwrap().support;
    assert!(curve_face_intersections(&c, &sup, &s).is_empty());
}

#[test]
fn mobile_never_enters_pair_ball() {
    let ball = Ball {
        center: Point::from_ints(&[-1, 3]),
        radius_sq: int(2),
    };
    let c = curve(poly(&[0, 1]), RatFn::zero(), -4, 8);
    assert!(curve_sphere_intersections(&c, &ball).is_empty());
}

#[test]
fn tangent_touch_is_labelled() {
    let ball = Ball {
        center: Point::from_ints(&[0, 0]),
        radius_sq: int(4),
    };
    let c = curve(poly(&[0, 1]), RatFn::constant(int(2)), -5, 5);
    let xs = curve_sphere_intersections(&c, &ball);
    assert_eq!(xs.len(), 1);
    assert_eq!(xs[0].label, CrossingLabel::Tangent);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn face_crossings_are_certified(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=5);
        let s = common::random_statics(&mut rng, n, d);
        let dom = Interval::new(int(-3), int(3));
        let c = common::random_curve(&mut rng, d, 2, &dom);
        let face = vec![rng.gen_range(0..n)];
        let tol = ten_pow_neg(18);
        for hit in curve_face_intersections(&c, &face, &s) {
            let t = hit.time.refine(&ten_pow_neg(30)).approx();
            let x = c.eval(&t).unwrap();
            let r = x.dist_sq(&s[face[0]]);
            for &j in &hit.joined {
                prop_assert!((x.dist_sq(&s[j]) - &r).abs() < tol);
            }
            for (j, p) in s.iter().enumerate() {
                if j != face[0] && !hit.joined.contains(&j) {
                    prop_assert!(x.dist_sq(p) < r);
                }
            }
        }
    }

    #[test]
    fn sphere_labels_alternate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dom = Interval::new(int(-3), int(3));
        let c = common::random_curve(&mut rng, 2, 3, &dom);
        let ball = Ball {
            center: common::random_point(&mut rng, 2, 2),
            radius_sq: int(rng.gen_range(1..=9)),
        };
        let labels: Vec<CrossingLabel> = curve_sphere_intersections(&c, &ball)
            .into_iter()
            .map(|x| x.label)
            .filter(|l| *l != CrossingLabel::Tangent)
            .collect();
        for w in labels.windows(2) {
            prop_assert_ne!(w[0], w[1]);
        }
        if let Some(first) = labels.first() {
            let outside = !ball.contains(&c.eval(&dom.lo).unwrap());
            let inside = ball.strictly_inside(&c.eval(&dom.lo).unwrap());
            if outside {
                prop_assert_eq!(*first, CrossingLabel::In);
            }
            if inside {
                prop_assert_eq!(*first, CrossingLabel::Out);
            }
        }
    }
}
