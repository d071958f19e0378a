use std::collections::BTreeSet;

use classnum::arith::{is_prime, kronecker};
use classnum::classpoly::{class_polynomial, roots_mod_p};
use classnum::genus::classify;
use classnum::oracles::{forms_class_number, forms_field_class_number, supersingular_set};
use classnum::pipeline::{run, PairSearch, PipelineOptions};
use classnum::{
    algorithm1, algorithm2, algorithm3, qualifying_discriminants, ClassNumberReport, Error,
};
use proptest::prelude::*;

#[test]
fn small_field_class_numbers() {
    assert_eq!(forms_class_number(-23).unwrap(), 3);
    assert_eq!(forms_class_number(-116).unwrap(), 6);
    assert_eq!(algorithm3(23).unwrap().h, 3);
    assert_eq!(algorithm3(29).unwrap().h, 6);
}

#[test]
fn supersingular_sets() {
    assert_eq!(supersingular_set(7).unwrap(), BTreeSet::from([6]));
    assert_eq!(supersingular_set(11).unwrap(), BTreeSet::from([0, 1]));
    assert_eq!(supersingular_set(13).unwrap(), BTreeSet::from([5]));
}

#[test]
fn all_routes_agree_below_2000() {
    for p in (7..2000).filter(|&p| is_prime(p)) {
        let a3 = algorithm3(p).unwrap();
        let a2 = algorithm2(p).unwrap();
        let a1 = algorithm1(p).unwrap();
        assert_eq!(a3.h, forms_field_class_number(p).unwrap(), "p = {p}");
        assert_eq!(
            (a2.h, a2.s_p, a2.pair_count),
            (a3.h, a3.s_p, a3.pair_count),
            "p = {p}"
        );
        assert_eq!(a1.h, a3.h, "p = {p}");
        assert_eq!(
            a1.supersingular.len() as u64,
            a3.supersingular_count,
            "p = {p}"
        );
    }
}

#[test]
fn qualifying_window() {
    for p in [7u64, 101, 10007, 1_000_003] {
        let ds: Vec<i64> = qualifying_discriminants(p).unwrap().map(|r| r.d).collect();
        assert!(ds.windows(2).all(|w| w[0] > w[1]));
        for &d in &ds {
            let a = d.unsigned_abs() as u128;
            assert!(3 * a * a < 16 * p as u128);
            assert_eq!(kronecker(d, p).unwrap(), -1);
        }
    }
}

#[test]
fn witnesses_are_shared_roots() {
    for p in [101u64, 211, 401, 997] {
        let r = algorithm3(p).unwrap();
        for w in &r.witnesses {
            let r1 = roots_mod_p(&class_polynomial(w.d1).unwrap(), p);
            let r2 = roots_mod_p(&class_polynomial(w.d2).unwrap(), p);
            assert_eq!(r1.intersection(&r2).count(), 1, "p = {p}, {w:?}");
        }
    }
}

#[test]
fn pipeline_errors() {
    assert_eq!(algorithm3(1).unwrap_err(), Error::NotPrime(1));
    assert_eq!(algorithm3(3).unwrap_err(), Error::PrimeTooSmall(3));
    assert_eq!(
        algorithm2(1_000_001).unwrap_err(),
        Error::NotPrime(1_000_001)
    );
    assert!(matches!(classify(-5), Err(Error::InvalidDiscriminant(-5))));
}

#[test]
fn reports_do_not_depend_on_schedule() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap();
    for p in [10_000_019u64, 1_000_000_007] {
        let a = run(
            p,
            PairSearch::Congruence,
            &PipelineOptions { parallel: false },
        )
        .unwrap()
        .0;
        let b = pool
            .install(|| run(p, PairSearch::Congruence, &PipelineOptions::default()))
            .unwrap()
            .0;
        assert_eq!(
            (a.h, &a.members_of_t, &a.witnesses),
            (b.h, &b.members_of_t, &b.witnesses)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(k in 0u64..200_000) {
        let p = classnum::arith::next_prime(7 + k * 997);
        let r = algorithm3(p).unwrap();
        let back = ClassNumberReport::from_json(&r.to_json()).unwrap();
        prop_assert_eq!(back.h, r.h);
        prop_assert_eq!(back.s_p, r.s_p);
        prop_assert_eq!(back.pair_count, r.pair_count);
        prop_assert_eq!(back.supersingular_count, r.supersingular_count);
        prop_assert_eq!(&back.members_of_t, &r.members_of_t);
        prop_assert_eq!(&back.witnesses, &r.witnesses);
        prop_assert_eq!(back.elapsed.as_millis(), r.elapsed.as_millis());
    }
}
