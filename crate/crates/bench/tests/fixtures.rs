use vanishing_bench::{random_multiset, threshold_multiset};
use vanishing_core::group_ring::is_fp_vanishing;
use vanishing_core::Limits;

#[test]
fn threshold_inputs_vanish() {
    for (p, n) in [(3, 4), (5, 3), (7, 3), (11, 2)] {
        let v = threshold_multiset(p, n, 1);
        assert!(is_fp_vanishing(&v, 1, &Limits::default()).unwrap());
    }
}

#[test]
fn seeds_change_inputs() {
    assert_ne!(random_multiset(7, 3, 6, 1), random_multiset(7, 3, 6, 2));
}
