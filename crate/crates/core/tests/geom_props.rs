mod common;

use onecenter::geom::{
    affine_rank, cc_affine_coefficients, circumcenter, circumcenter_symbolic, is_boundary_support,
    seb, seb_bruteforce, seb_with_seed,
};
use onecenter::polyalg::{int, rat};
use onecenter::{Interval, Point, Rat};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn circumcenter_equidistant_and_in_hull(seed in any::<u64>(), d in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(2..=d + 1);
        let pts = common::independent_set(&mut rng, d, k);
        let b = circumcenter(&pts).unwrap();
        for p in &pts {
            prop_assert_eq!(b.center.dist_sq(p), b.radius_sq.clone());
        }
        let mut with_c = pts.clone();
        with_c.push(b.center.clone());
        prop_assert_eq!(common::rank_oracle(&with_c), common::rank_oracle(&pts));
        prop_assert_eq!(affine_rank(&pts).0, common::rank_oracle(&pts));

        let coef = cc_affine_coefficients(&pts).unwrap();
        let total: Rat = coef.iter().sum();
        prop_assert_eq!(total, int(1));
        let combo: Vec<Rat> = (0..d)
            .map(|j| coef.iter().zip(&pts).map(|(c, p)| c * &p.coords()[j]).sum())
            .collect();
        prop_assert_eq!(Point::new(combo), b.center.clone());

        let mut perm = pts.clone();
        perm.shuffle(&mut rng);
        prop_assert_eq!(circumcenter(&perm).unwrap(), b);
    }

    #[test]
    fn affine_rank_matches_elimination(seed in any::<u64>(), d in 2usize..=4, k in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pts: Vec<Point> = (0..k).map(|_| common::random_point(&mut rng, d, 2)).collect();
        if k >= 3 && rng.gen_bool(0.5) {
            // force a dependency: midpoint of the first two
            let mid = pts[0].coords().iter().zip(pts[1].coords()).map(|(a, b)| (a + b) / int(2)).collect();
            pts[2] = Point::new(mid);
        }
        let (rank, basis) = affine_rank(&pts);
        prop_assert_eq!(rank, common::rank_oracle(&pts));
        prop_assert_eq!(basis.len(), rank + 1);
        let sub: Vec<Point> = basis.iter().map(|&i| pts[i].clone()).collect();
        prop_assert_eq!(common::rank_oracle(&sub), rank);
    }

    #[test]
    fn seb_matches_bruteforce(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=10);
        let pts: Vec<Point> = (0..n).map(|_| common::random_point(&mut rng, d, 4)).collect();
        let r = seb_with_seed(&pts, rng.gen()).unwrap();
        prop_assert_eq!(&r.ball, &seb_bruteforce(&pts).unwrap());
        prop_assert!(pts.iter().all(|p| r.ball.contains(p)));
        let sup: Vec<Point> = r.support.iter().map(|&i| pts[i].clone()).collect();
        if sup.len() >= 2 {
            prop_assert_eq!(circumcenter(&sup).unwrap(), r.ball.clone());
            prop_assert!(is_boundary_support(&sup, &pts).unwrap());
        } else {
            prop_assert_eq!(r.ball.radius_sq.clone(), int(0));
        }
    }

    #[test]
    fn cospherical_subsets_share_circumcenter(seed in any::<u64>(), d in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let center: Vec<Rat> = (0..d).map(|_| common::small_rat(&mut rng, 3, 2)).collect();
        let radius = rat(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let pts: Vec<Point> = (0..d + 3)
            .map(|_| {
                let u: Vec<Rat> = (0..d - 1).map(|_| common::small_rat(&mut rng, 3, 2)).collect();
                Point::new(common::sphere_point(&u).iter().zip(&center).map(|(x, c)| x * &radius + c).collect())
            })
            .collect();
        let mut seen = 0;
        let size = d + 1;
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let sub: Vec<Point> = idx.iter().map(|&i| pts[i].clone()).collect();
            if common::rank_oracle(&sub) == d {
                let b = circumcenter(&sub).unwrap();
                prop_assert_eq!(b.center, Point::new(center.clone()));
                prop_assert_eq!(b.radius_sq, &radius * &radius);
                seen += 1;
            }
            let Some(i) = (0..size).rev().find(|&i| idx[i] < pts.len() - size + i) else { break };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
        prop_assert!(seen >= 1);
    }

    #[test]
    fn symbolic_circumcenter_instantiates(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.gen_range(2..=3);
        let dom = Interval::new(int(-2), int(2));
        let n_static = rng.gen_range(0..=d);
        let statics = common::random_statics(&mut rng, n_static, d);
        let mobiles: Vec<_> = (0..rng.gen_range(1..=2))
            .map(|_| common::random_curve(&mut rng, d, 2, &dom))
            .collect();
        prop_assume!(statics.len() + mobiles.len() <= d + 1);
        let Ok(sym) = circumcenter_symbolic(&statics, &mobiles, &dom) else {
            return Ok(());
        };
        for _ in 0..50 {
            let t = common::small_rat(&mut rng, 2, 97);
            let mut pts = statics.clone();
            pts.extend(mobiles.iter().map(|c| c.eval(&t).unwrap()));
            // degenerate instants are skipped
            if let Ok(b) = circumcenter(&pts) {
                prop_assert_eq!(sym.curve.eval(&t).unwrap(), b.center);
                prop_assert_eq!(sym.radius_sq.eval(&t).unwrap(), b.radius_sq);
            }
        }
        let mut perm_s = statics.clone();
        perm_s.reverse();
        let mut perm_m = mobiles.clone();
        perm_m.reverse();
        let other = circumcenter_symbolic(&perm_s, &perm_m, &dom).unwrap();
        prop_assert!(other.curve.same_curve(&sym.curve));
    }
}

#[test]
fn seb_examples() {
    let p = vec![
        Point::from_ints(&[0, 0]),
        Point::from_ints(&[4, 0]),
        Point::from_ints(&[1, 1]),
    ];
    let r = seb(&p).unwrap();
    assert_eq!(r.ball.center, Point::from_ints(&[2, 0]));
    assert_eq!(r.ball.radius_sq, int(4));
    assert_eq!(r.support, vec![0, 1]);
}
