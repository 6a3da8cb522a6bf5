//! Series, exact fits and slope limits.

use num_bigint::BigInt;
use proptest::prelude::*;
use vfilt_core::asymptotics::{
    alpha_series, alpha_subadditive_on, fit_values, slope_gap, slope_limit, v_series, Line,
    SlopeLimit,
};
use vfilt_core::lp::Rational;
use vfilt_core::{
    cover_ideal, FamilyTag, FiltrationSpec, MonomialIdeal, MonomialPrime, RingContext,
};

fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn cover(s: &str) -> MonomialIdeal {
    cover_ideal(&s.parse::<FamilyTag>().unwrap().build().unwrap()).unwrap()
}

proptest! {
    #[test]
    fn fit_reproduces_quasi_linear_samples(
        period in 1u64..=4,
        slopes in prop::collection::vec(0u64..=5, 4),
        offsets in prop::collection::vec(0u64..=20, 4),
        noise in prop::collection::vec(0u64..=50, 0..=3),
    ) {
        // value(n) = slope_i·n + offset_i on the tail; a few arbitrary values
        // in front of it.
        let head = noise.len() as u64;
        let len = head + 3 * period + 2;
        let value = |n: u64| {
            let i = (n % period) as usize;
            slopes[i] * n + offsets[i]
        };
        let samples: Vec<(u64, u64)> = (1..=len)
            .map(|n| if n <= head { (n, noise[(n - 1) as usize]) } else { (n, value(n)) })
            .collect();
        let fit = fit_values(&samples, period).unwrap().expect("tail is quasi-linear");
        prop_assert!(fit.n0 <= head + 1);
        for &(n, v) in samples.iter().filter(|(n, _)| *n >= fit.n0) {
            prop_assert_eq!(fit.predict(n), q(v as i64, 1));
        }
        for class in 0..period as usize {
            prop_assert!(fit.lines[class].slope >= q(0, 1));
        }
    }
}

#[test]
fn ordinary_powers_grow_like_alpha() {
    for s in ["K(3)", "C(5)", "Kb(2,3)"] {
        let j = cover(s);
        let series = v_series(&FiltrationSpec::ordinary(j.clone()), 1, 5, None).unwrap();
        let alpha = j.alpha().unwrap() as i64;
        assert_eq!(slope_limit(&series, 6).slope(), Some(&q(alpha, 1)), "{s}");
    }
}

#[test]
fn cover_ideal_slopes_are_half_alpha_of_second_symbolic_power() {
    for (s, end) in [("K(3)", 6), ("C(5)", 6), ("Kpend(3,2)", 4)] {
        let spec = FiltrationSpec::symbolic(cover(s));
        let series = v_series(&spec, 1, end, None).unwrap();
        let alpha2 = spec.evaluate(2).unwrap().alpha().unwrap() as i64;
        assert_eq!(slope_limit(&series, 6).slope(), Some(&q(alpha2, 2)), "{s}");
    }
}

#[test]
fn odd_cycle_fit_has_period_two() {
    let series = v_series(&FiltrationSpec::symbolic(cover("C(5)")), 1, 6, None).unwrap();
    let values: Vec<u64> = series.values().iter().map(|&(_, v)| v).collect();
    assert_eq!(values, vec![2, 5, 7, 10, 12, 15]);
    match slope_limit(&series, 6) {
        SlopeLimit::Converges { slope, fit } => {
            assert_eq!(slope, q(5, 2));
            assert_eq!(fit.period, 2);
            assert_eq!(
                fit.lines[0],
                Line {
                    slope: q(5, 2),
                    intercept: q(0, 1)
                }
            );
            assert_eq!(
                fit.lines[1],
                Line {
                    slope: q(5, 2),
                    intercept: q(-1, 2)
                }
            );
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn pendant_graph_slope_gap() {
    let g = FamilyTag::Pendant(2, 2).build().unwrap();
    let spec = FiltrationSpec::symbolic(cover_ideal(&g).unwrap());
    let ring = spec.base.ring().clone();
    let pendant = MonomialPrime::from_names(ring.clone(), &["x1", "x1_1"]).unwrap();
    let clique = MonomialPrime::from_names(ring, &["x1", "x2"]).unwrap();
    assert_eq!(
        slope_gap(&spec, &pendant, &clique, 1, 6, 6).unwrap(),
        q(1, 1)
    );
    assert_eq!(
        slope_gap(&spec, &pendant, &pendant, 1, 6, 6).unwrap(),
        q(0, 1)
    );
}

#[test]
fn alpha_ratios_are_subadditive() {
    for s in ["K(3)", "C(5)", "K(4)"] {
        let spec = FiltrationSpec::symbolic(cover(s));
        let alphas = alpha_series(&spec, 1, 6).unwrap();
        assert!(alpha_subadditive_on(&alphas), "{s}");
        // α(I_n)/n never drops below the limit α(I_2)/2
        let limit = q(alphas[1].1 as i64, 2);
        for &(n, a) in &alphas {
            assert!(q(a as i64, n as i64) >= limit);
        }
    }
}

#[test]
fn squares_never_fit() {
    let r = RingContext::new(["x", "y"]).unwrap();
    let table = (1..=12u32)
        .map(|n| {
            MonomialIdeal::from_exponents(r.clone(), vec![vec![2, 0], vec![1, n * n]]).unwrap()
        })
        .collect();
    let series = v_series(&FiltrationSpec::explicit(table).unwrap(), 1, 12, None).unwrap();
    for period in 1..=4 {
        assert_eq!(fit_values(&series.values(), period).unwrap(), None);
    }
}
