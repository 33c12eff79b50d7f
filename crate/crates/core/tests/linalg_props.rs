mod support;

use harrison_core::linalg::{rational, SparseMatrix};
use proptest::prelude::*;
use support::dense_rank;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
    })
}

fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<harrison_core::linalg::Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| rational(x)).collect())
        .collect()
}

proptest! {
    #[test]
    fn rank_matches_dense_elimination(rows in matrix()) {
        let m = SparseMatrix::from_dense(&rows);
        prop_assert_eq!(m.rank(), dense_rank(to_rational(&rows)));
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn dumps_round_trip(rows in matrix()) {
        let m = SparseMatrix::from_dense(&rows);
        prop_assert_eq!(SparseMatrix::parse_dump(&m.dump()).unwrap(), m);
    }

    #[test]
    fn product_rank_is_bounded(a in matrix(), extra in proptest::collection::vec(-2i64..=2, 36)) {
        let a = SparseMatrix::from_dense(&a);
        let k = a.cols();
        let b: Vec<Vec<i64>> = (0..k).map(|i| extra[i * 6..i * 6 + 4].to_vec()).collect();
        let b = SparseMatrix::from_dense(&b);
        let ab = a.mul(&b);
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        prop_assert!(a.sub(&a).is_zero());
    }
}
