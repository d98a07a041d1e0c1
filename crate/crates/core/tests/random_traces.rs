mod common;

use std::time::Instant;

use onecenter::oracle::{continuity_audit, support_audit, verify};
use onecenter::polyalg::ten_pow_neg;
use onecenter::tracker::{trace, trace_multi};
use onecenter::TraceOptions;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn single_mobile_random_instances_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = TraceOptions::default();
    for case in 0..20 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=6);
        let inst = common::random_instance(&mut rng, d, n, 1, 3);
        let t0 = Instant::now();
        let pc = trace(&inst, &opts).unwrap();
        let rep = verify(&pc, &inst, 100, case);
        eprintln!(
            "case {case}: d={d} n={n} arcs={} {:?}",
            pc.arcs.len(),
            t0.elapsed()
        );
        assert!(rep.passed(), "case {case}: {:?}", rep.failures.first());
        assert!(support_audit(&pc, &inst).is_empty(), "case {case}");
        for g in continuity_audit(&pc, &ten_pow_neg(12)) {
            assert!(g.max().unwrap() < ten_pow_neg(9), "case {case}");
        }
    }
}

#[test]
fn two_mobile_random_instances_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let opts = TraceOptions::default();
    for case in 0..10 {
        let n = rng.gen_range(1..=4);
        let inst = common::random_instance(&mut rng, 2, n, 2, 2);
        let pc = trace_multi(&inst, &opts).unwrap();
        let rep = verify(&pc, &inst, 100, case);
        assert!(rep.passed(), "case {case}: {:?}", rep.failures.first());
        assert!(support_audit(&pc, &inst).is_empty(), "case {case}");
    }
}
