//! The quotient method for local v-numbers against exhaustive search.

use proptest::prelude::*;
use vfilt_core::decomp::associated_primes;
use vfilt_core::vnumber::{all_local_v, local_v, local_v_oracle, v_number};
use vfilt_core::{Monomial, MonomialIdeal, MonomialPrime, RingContext};

fn proper_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(|d| {
            prop::collection::vec(prop::collection::vec(0u32..=3, d), 1..=5)
                .prop_map(move |gens| (d, gens))
        })
        .prop_filter("proper", |(_, gens)| {
            gens.iter().all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(|(d, gens)| {
            MonomialIdeal::from_exponents(RingContext::numbered("x", d), gens).unwrap()
        })
}

/// A degree cap that always reaches the oracle's witness: exponents beyond
/// the generator maxima never help.
fn cap(ideal: &MonomialIdeal) -> u64 {
    ideal.max_exponents().iter().map(|&e| u64::from(e)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quotient_method_matches_oracle(i in proper_ideal()) {
        for p in associated_primes(&i).unwrap() {
            let fast = local_v(&i, &p).unwrap();
            let slow = local_v_oracle(&i, &p, cap(&i)).unwrap();
            prop_assert_eq!(fast.value, slow.value, "prime {}", p);
            prop_assert!(fast.is_valid_for(&i));
            prop_assert!(slow.is_valid_for(&i));
        }
    }

    #[test]
    fn global_value_is_least_local(i in proper_ideal()) {
        let locals = all_local_v(&i).unwrap();
        let global = v_number(&i).unwrap();
        prop_assert_eq!(Some(global.value), locals.iter().map(|r| r.value).min());
        prop_assert!(global.is_valid_for(&i));
        let first_min = locals.iter().find(|r| r.value == global.value).unwrap();
        prop_assert_eq!(&global.prime, &first_min.prime);
    }

    #[test]
    fn non_associated_primes_are_rejected(i in proper_ideal()) {
        let ass = associated_primes(&i).unwrap();
        let dim = i.dim();
        for mask in 1u32..(1 << dim) {
            let support: Vec<usize> = (0..dim).filter(|k| mask & (1 << k) != 0).collect();
            let p = MonomialPrime::new(i.ring().clone(), support).unwrap();
            if !ass.contains(&p) {
                prop_assert!(local_v(&i, &p).is_err());
            }
        }
    }
}

#[test]
fn powers_of_the_squares_example() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let m = MonomialPrime::from_names(r.clone(), &["x", "y"]).unwrap();
    let p = MonomialPrime::from_names(r.clone(), &["x"]).unwrap();
    for n in 1..=5u32 {
        let i = MonomialIdeal::from_exponents(r.clone(), vec![vec![2, 0], vec![1, n * n]]).unwrap();
        let expected = u64::from(n * n);
        assert_eq!(local_v(&i, &m).unwrap().value, expected);
        assert_eq!(local_v(&i, &p).unwrap().value, expected);
        assert_eq!(local_v_oracle(&i, &m, expected).unwrap().value, expected);
    }
}

#[test]
fn principal_power_of_one_variable() {
    let r = RingContext::new(["x"]).unwrap();
    for c in 1..=7u32 {
        let i = MonomialIdeal::principal(r.clone(), Monomial::new(vec![c]));
        let res = v_number(&i).unwrap();
        assert_eq!(res.value, u64::from(c - 1));
        assert_eq!(res.witness, Monomial::new(vec![c - 1]));
    }
}
