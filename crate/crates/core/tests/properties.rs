use std::ops::ControlFlow;

use proptest::prelude::*;
use vanishing_core::arithmetic::is_r_arithmetic;
use vanishing_core::covers::{for_each_hyperplane_cover, AbelianGroup, Coset, CosetCover};
use vanishing_core::decomposition::{
    brute_force_representable, represent_in_set, verify_size_bound,
};
use vanishing_core::fp::{quotient_split, scale_multiset};
use vanishing_core::group_ring::{
    binomial_product_cyc, binomial_product_fp, extract_irredundant_fp, is_c_irredundant_with,
    is_c_vanishing, is_fp_irredundant, is_fp_vanishing, GroupRingCyc, GroupRingFp,
};
use vanishing_core::{ArithmeticSet, FpMultiset, FpVector, Limits, PrimeModulus, TwistAssignment};

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

fn arithmetic(elements: &[u32], r: u32, p: u64) -> ArithmeticSet {
    is_r_arithmetic(elements, r, pm(p))
        .unwrap()
        .into_set()
        .unwrap()
}

fn multiset(p: u64, n: usize, raw: &[Vec<i64>]) -> FpMultiset {
    let q = pm(p);
    FpMultiset::new(
        q,
        n,
        raw.iter().map(|c| FpVector::from_ints(q, c)).collect(),
    )
    .unwrap()
}

fn rows(n: usize, len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..50, n), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fp_multiplication_is_commutative_and_associative(
        a in prop::collection::vec(0u32..3, 9),
        b in prop::collection::vec(0u32..3, 9),
        c in prop::collection::vec(0u32..3, 9),
    ) {
        let p = pm(3);
        let (a, b, c) = (
            GroupRingFp::from_coeffs(p, 2, a).unwrap(),
            GroupRingFp::from_coeffs(p, 2, b).unwrap(),
            GroupRingFp::from_coeffs(p, 2, c).unwrap(),
        );
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn binomial_shift_matches_convolution(raw in rows(2, 1..4)) {
        let v = multiset(3, 2, &raw);
        let mut expected = GroupRingFp::one(v.modulus(), 2, &lim()).unwrap();
        for x in &v {
            let one = GroupRingFp::one(v.modulus(), 2, &lim()).unwrap();
            let g = GroupRingFp::monomial(x, 1, &lim()).unwrap();
            expected = expected.mul(&one.sub(&g));
        }
        prop_assert_eq!(binomial_product_fp(&v, 1, &lim()).unwrap(), expected);
    }

    #[test]
    fn fourier_transform_is_multiplicative(raw in rows(1, 1..4), t in prop::collection::vec(0u32..5, 3)) {
        let v = multiset(5, 1, &raw);
        let mut parts = Vec::new();
        for (x, &tv) in v.iter().zip(&t) {
            parts.push(GroupRingCyc::twisted_binomial(x, tv, &lim()).unwrap());
        }
        let product = parts.iter().skip(1).fold(parts[0].clone(), |acc, h| acc.mul(h));
        let mut pointwise = parts[0].fourier_transform();
        for h in &parts[1..] {
            for (a, b) in pointwise.iter_mut().zip(h.fourier_transform()) {
                *a = a.mul(&b);
            }
        }
        prop_assert_eq!(product.fourier_transform(), pointwise);
    }

    #[test]
    fn complex_vanishing_implies_fp_vanishing(raw in rows(1, 1..5)) {
        let v = multiset(3, 1, &raw);
        if is_c_vanishing(&v, 1, &lim()).unwrap().is_some() {
            prop_assert!(is_fp_vanishing(&v, 1, &lim()).unwrap());
        }
    }

    #[test]
    fn split_round_trips(raw in rows(3, 0..4), x in prop::collection::vec(0i64..5, 3)) {
        let v = multiset(5, 3, &raw);
        let split = quotient_split(&v);
        let x = FpVector::from_ints(v.modulus(), &x);
        let (xs, xt) = split.project(&x);
        prop_assert_eq!(split.reassemble(&xs, &xt).unwrap(), x);
        prop_assert_eq!(split.dim_s() + split.dim_t(), 3);
    }

    #[test]
    fn scaling_preserves_irredundance(raw in rows(2, 3..8), scalars in prop::collection::vec(1u32..5, 8)) {
        let v = multiset(5, 2, &raw);
        let scaled = scale_multiset(&v, &scalars[..v.len()]).unwrap();
        prop_assert_eq!(is_fp_irredundant(&v, 1, &lim()).unwrap(), is_fp_irredundant(&scaled, 1, &lim()).unwrap());
        let t = TwistAssignment::zeros(v.len());
        prop_assert_eq!(
            is_c_irredundant_with(&v, &t, 1, &lim()).unwrap(),
            is_c_irredundant_with(&scaled, &t, 1, &lim()).unwrap()
        );
    }

    #[test]
    fn descent_agrees_with_reachability(raw in rows(2, 5..10), x in prop::collection::vec(0i64..5, 2)) {
        let v = multiset(5, 2, &raw);
        prop_assume!(is_fp_vanishing(&v, 1, &lim()).unwrap());
        let core = extract_irredundant_fp(&v, 1, &lim()).unwrap();
        let a = arithmetic(&[1, 2, 3, 4], 1, 5);
        let x = FpVector::from_ints(pm(5), &x);
        let span = quotient_split(&core);
        if span.contains(&x) {
            let rep = represent_in_set(&x, &core, &a, 1, &lim()).unwrap();
            prop_assert!(rep.coefficients().iter().all(|&c| a.contains(c)));
            prop_assert!(brute_force_representable(&x, &core, a.elements(), &lim()).unwrap());
        }
        prop_assert!(verify_size_bound(&core, 4));
    }

    #[test]
    fn shrinking_random_covers_of_the_cube(extra in prop::collection::vec((0usize..16, 0usize..8), 0..6)) {
        let g = AbelianGroup::new(vec![2, 2, 2], &lim()).unwrap();
        let subs = g.subgroups();
        let mut cosets: Vec<Coset> = (0..8).map(|x| Coset::new(&g, g.trivial_subgroup(), x).unwrap()).collect();
        for (h, x) in extra {
            cosets.push(Coset::new(&g, subs[h].clone(), x).unwrap());
        }
        let cover = CosetCover::new(g, cosets).unwrap();
        let shrunk = cover.shrink_to_irredundant().unwrap();
        prop_assert!(shrunk.is_irredundant_cover());
        prop_assert!(shrunk.check_subcover_claim().unwrap());
    }
}

#[test]
fn hyperplane_covers_are_exactly_the_vanishing_twists() {
    for (p, n) in [(2u64, 2usize), (3, 2)] {
        let _ = for_each_hyperplane_cover(pm(p), n, &lim(), |inst| {
            let (v, t) = inst.to_multiset();
            assert!(binomial_product_cyc(&v, &t, 1, &lim()).unwrap().is_zero());
            for i in 0..v.len() {
                let smaller =
                    binomial_product_cyc(&v.without(i), &t.without(i), 1, &lim()).unwrap();
                assert!(!smaller.is_zero());
            }
            ControlFlow::Continue(())
        })
        .unwrap();
    }
}
