use proptest::prelude::*;
use rigged::catalan::catalan_poly;
use rigged::gt::count_gt_points;
use rigged::kostka::{parabolic_kostka_at_one, verify_duality};
use rigged::qpoly::is_symmetric_unimodal;
use rigged::tableaux::charge_generating_function;
use rigged::{kostka_foulkes, Partition, RectangleSequence};

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = rigged::partitions::partitions_of(n);
    proptest::sample::select(all)
}

fn pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=6).prop_flat_map(|n| (partition_of(n), partition_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fermionic_matches_charge((lambda, mu) in pair()) {
        let fermionic = kostka_foulkes(&lambda, &mu).map(|k| k.polynomial);
        let charge = charge_generating_function(&lambda, &mu);
        match (fermionic, charge) {
            (Ok(f), Ok(c)) => prop_assert_eq!(f, c),
            (Err(_), Err(_)) => {}
            (f, c) => prop_assert!(false, "one side failed: {:?} {:?}", f.is_ok(), c.is_ok()),
        }
    }

    #[test]
    fn value_at_one_counts_gt_points((lambda, mu) in pair()) {
        let rows = RectangleSequence::rows(&mu);
        let k = parabolic_kostka_at_one(&lambda, &rows).unwrap();
        let gt = count_gt_points(&lambda, mu.parts()).unwrap();
        prop_assert_eq!(k, gt);
    }

    #[test]
    fn duality_holds((lambda, mu) in pair()) {
        let rows = RectangleSequence::rows(&mu);
        prop_assert!(verify_duality(&lambda, &rows).unwrap());
    }

    #[test]
    fn catalan_is_symmetric(n in 1usize..=4, m in 1usize..=4) {
        let report = is_symmetric_unimodal(&catalan_poly(n, m)).unwrap();
        prop_assert!(report.symmetric);
    }
}
