use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tridet::generators::random_diag_dominant;
use tridet::oracle::{dense_det_exact, dense_det_float, to_dense_exact, DENSE_LIMIT_EXACT};
use tridet::recurrences::{
    det_hybrid_exact, det_hybrid_scaled, det_three_term_exact, det_three_term_scaled,
    det_two_term_exact, minors_hybrid, minors_three_term,
};
use tridet::{
    det_hybrid, det_three_term, det_two_term, gen_example, pivot_sequence, Error, Family,
    SignedLog, TridiagonalMatrix, ZeroTest,
};

fn int_matrix(max_n: usize, lo: i32, hi: i32) -> impl Strategy<Value = TridiagonalMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        let entries = move |len| prop::collection::vec(lo..=hi, len);
        (entries(n), entries(n - 1), entries(n - 1)).prop_map(|(d, a, b)| {
            let f = |v: Vec<i32>| v.into_iter().map(f64::from).collect();
            TridiagonalMatrix::new(f(d), f(a), f(b)).unwrap()
        })
    })
}

fn exact_oracle(m: &TridiagonalMatrix) -> BigRational {
    dense_det_exact(&to_dense_exact(m, DENSE_LIMIT_EXACT).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_kernels_match_oracle(m in int_matrix(10, -5, 5)) {
        let want = exact_oracle(&m);
        prop_assert_eq!(det_three_term_exact(&m), want.clone());
        prop_assert_eq!(det_hybrid_exact(&m).value, want.clone());
        match det_two_term_exact(&m) {
            Ok(v) => prop_assert_eq!(v, want),
            Err(Error::ZeroPivot { index }) => {
                prop_assert_eq!(det_hybrid_exact(&m).pivot_break, Some(index));
            }
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn float_kernels_match_oracle(m in int_matrix(10, -5, 5)) {
        let want = dense_det_float(&m.to_dense().unwrap()).unwrap();
        // integer determinants: 1 is the smallest nonzero magnitude
        let close = |x: f64| (x - want).abs() <= 1e-9 * want.abs().max(1.0);
        // small integer data keeps the three-term recurrence exact
        let three = det_three_term(&m).unwrap().value;
        prop_assert_eq!(BigRational::from_float(three).unwrap(), exact_oracle(&m));
        prop_assert!(close(three));
        let h = det_hybrid(&m, ZeroTest::Exact).unwrap().value;
        prop_assert!(close(h), "hybrid {} vs {}", h, want);
        if let Ok(r) = det_two_term(&m) {
            prop_assert!(close(r.value), "two_term {} vs {}", r.value, want);
        }
    }

    #[test]
    fn every_kernel_takes_n_minus_one_steps(m in int_matrix(40, -5, 5), rel in any::<bool>()) {
        let n = m.n();
        let zt = if rel { ZeroTest::Relative(1e-13) } else { ZeroTest::Exact };
        prop_assert_eq!(det_three_term(&m).unwrap().steps.total(), n - 1);
        prop_assert_eq!(det_hybrid(&m, zt).unwrap().steps.total(), n - 1);
        prop_assert_eq!(det_hybrid_scaled(&m, zt).steps.total(), n - 1);
        prop_assert_eq!(det_three_term_scaled(&m).steps.total(), n - 1);
        if let Ok(r) = det_two_term(&m) {
            prop_assert_eq!(r.steps.total(), n - 1);
        }
    }

    #[test]
    fn hybrid_switches_at_first_interior_zero(m in int_matrix(12, -2, 2)) {
        let p = pivot_sequence(&m, ZeroTest::Exact);
        let r = det_hybrid(&m, ZeroTest::Exact).unwrap();
        prop_assert_eq!(r.pivot_break, p.interior_break(m.n()));
        match r.pivot_break {
            Some(k) => prop_assert_eq!(r.steps.pivot_updates, k - 1),
            None => prop_assert_eq!(r.steps.three_term_steps, 0),
        }
    }

    #[test]
    fn minors_are_leading_determinants(m in int_matrix(10, -5, 5)) {
        let (minors, _) = minors_hybrid(&m, ZeroTest::Exact).unwrap();
        let three = minors_three_term(&m).unwrap();
        prop_assert_eq!(minors.n(), m.n());
        for k in 1..=m.n() {
            let lead = TridiagonalMatrix::new(
                m.diag()[..k].to_vec(),
                m.upper()[..k - 1].to_vec(),
                m.lower()[..k - 1].to_vec(),
            ).unwrap();
            let want = dense_det_float(&lead.to_dense().unwrap()).unwrap();
            prop_assert_eq!(
                BigRational::from_float(*three.get(k).unwrap()).unwrap(),
                exact_oracle(&lead)
            );
            let got = *minors.get(k).unwrap();
            prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn scaled_matches_plain_when_finite(m in int_matrix(60, -9, 9)) {
        let plain = det_hybrid(&m, ZeroTest::Exact).unwrap().value;
        let scaled = det_hybrid_scaled(&m, ZeroTest::Exact);
        let err = scaled.value.relative_error(&SignedLog::from_f64(plain));
        if plain != 0.0 {
            prop_assert!(err.is_some_and(|e| e <= 1e-12), "{} vs {}", scaled.value, plain);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn signed_log_products(x in -1e150f64..1e150, y in -1e150f64..1e150) {
        let p = SignedLog::from_f64(x) * SignedLog::from_f64(y);
        let want = x * y;
        prop_assert_eq!(i32::from(p.sign()), if want == 0.0 { 0 } else { want.signum() as i32 });
        if want != 0.0 {
            let err = p.relative_error(&SignedLog::from_f64(want)).unwrap();
            // ln|xy| carries an absolute rounding error of a few ulps
            let tol = 8.0 * f64::EPSILON * p.logmag().abs().max(1.0);
            prop_assert!(err <= tol, "{} * {} -> {}", x, y, p);
        }
    }
}

#[test]
fn pivots_never_vanish_on_dominant_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=300);
        let m = random_diag_dominant(&mut rng, n);
        let r = det_hybrid(&m, ZeroTest::Exact).unwrap();
        assert_eq!(r.pivot_break, None);
        assert_eq!(r.steps.pivot_updates, n - 1);
        assert_eq!(r.steps.three_term_steps, 0);
    }
}

#[test]
fn hybrid_equals_three_term_on_zero_pivot_families() {
    for family in [Family::Ex33, Family::Ex35] {
        let first = if family == Family::Ex33 { 1 } else { 2 };
        for n in first..=2000 {
            let m = gen_example(family, n).unwrap();
            assert_eq!(
                det_hybrid_exact(&m).value,
                det_three_term_exact(&m),
                "{family} n={n}"
            );
            let scaled = det_hybrid_scaled(&m, ZeroTest::Exact).value;
            let three = det_three_term_scaled(&m).value;
            assert_eq!(scaled.sign(), three.sign(), "{family} n={n}");
            if !three.is_zero() {
                assert!(
                    scaled.relative_error(&three).unwrap() < 1e-12,
                    "{family} n={n}"
                );
            }
        }
    }
}

#[test]
fn ex35_grows_past_float_range() {
    let m = gen_example(Family::Ex35, 3000).unwrap();
    assert!(matches!(det_three_term(&m), Err(Error::Overflow { .. })));
    let exact = det_three_term_exact(&m);
    assert!(!exact.is_zero());
    let scaled = det_hybrid_scaled(&m, ZeroTest::Exact).value;
    let err = scaled
        .relative_error(&SignedLog::from_rational(&exact))
        .unwrap();
    assert!(err < 1e-10, "{scaled}");
}
