use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use tridet::oracle::{dense_det_exact_with_limit, to_dense_exact};
use tridet::recurrences::{det_hybrid_exact, det_hybrid_scaled, det_three_term_exact};
use tridet::{
    closed_form_det, det_detgtri_exact, det_hybrid, det_three_term, gen_example, pivot_sequence,
    Error, Family, SignedLog, ZeroTest,
};

fn dense_exact(family: Family, n: usize) -> BigRational {
    let m = gen_example(family, n).unwrap();
    dense_det_exact_with_limit(&to_dense_exact(&m, n).unwrap(), n).unwrap()
}

#[test]
fn closed_forms_match_dense_oracle() {
    for family in [Family::Ex32, Family::Ex33, Family::Ex34] {
        let first = if family == Family::Ex34 { 2 } else { 1 };
        for n in first..=40 {
            let want = BigRational::from_integer(closed_form_det(family, n).unwrap());
            assert_eq!(dense_exact(family, n), want, "{family} n={n}");
        }
    }
}

#[test]
fn closed_forms_match_kernels_up_to_2000() {
    for family in [Family::Ex32, Family::Ex33, Family::Ex34] {
        let first = if family == Family::Ex34 { 2 } else { 1 };
        for n in first..=2000 {
            let m = gen_example(family, n).unwrap();
            let want = closed_form_det(family, n).unwrap();
            let want_q = BigRational::from_integer(want.clone());
            assert_eq!(det_three_term_exact(&m), want_q, "{family} n={n}");
            assert_eq!(det_hybrid_exact(&m).value, want_q, "{family} n={n}");
            if n <= 200 {
                assert_eq!(det_detgtri_exact(&m).unwrap(), want_q, "{family} n={n}");
            }

            let scaled = det_hybrid_scaled(&m, ZeroTest::Exact).value;
            let want_log = SignedLog::from_bigint(&want);
            assert_eq!(scaled.sign(), want_log.sign(), "{family} n={n}");
            if !want_log.is_zero() {
                assert!(
                    scaled.relative_error(&want_log).unwrap() < 1e-9,
                    "{family} n={n}"
                );
            }
            if let Some(w) = want.to_f64().filter(|w| w.is_finite()) {
                if let Ok(r) = det_hybrid(&m, ZeroTest::Exact) {
                    assert!(
                        (r.value - w).abs() <= 1e-9 * w.abs().max(1.0),
                        "{family} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn ex32_minors_count_up() {
    let m = gen_example(Family::Ex32, 50).unwrap();
    let minors = tridet::recurrences::minors_three_term(&m).unwrap();
    for (k, f) in minors.as_slice().iter().enumerate() {
        assert_eq!(*f, (k + 1) as f64);
    }
}

#[test]
fn ex34_pivot_structure() {
    for n in 2..=500 {
        let p = pivot_sequence(&gen_example(Family::Ex34, n).unwrap(), ZeroTest::Exact);
        assert_eq!(p.c.len(), n);
        for (i, &c) in p.c.iter().enumerate() {
            let k = i + 1;
            let want = if k % 2 == 1 {
                k as f64
            } else {
                -((n - k) as f64)
            };
            assert_eq!(c, want, "n={n} k={k}");
        }
        // even n: only the last pivot vanishes
        let want_break = (n % 2 == 0).then_some(n);
        assert_eq!(p.break_index, want_break, "n={n}");
        assert_eq!(p.interior_break(n), None);
    }
}

#[test]
fn ex34_even_orders_are_singular_without_switching() {
    for n in (2..=120).step_by(2) {
        let r = det_hybrid(&gen_example(Family::Ex34, n).unwrap(), ZeroTest::Exact).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.pivot_break, None);
        assert_eq!(r.steps.pivot_updates, n - 1);
    }
}

#[test]
fn ex34_odd_values() {
    assert_eq!(closed_form_det(Family::Ex34, 5).unwrap(), BigInt::from(45));
    assert_eq!(
        closed_form_det(Family::Ex34, 7).unwrap(),
        BigInt::from(-1575)
    );
    assert_eq!(
        det_three_term(&gen_example(Family::Ex34, 5).unwrap())
            .unwrap()
            .value,
        45.0
    );
}

#[test]
fn unsupported_requests() {
    assert!(matches!(
        gen_example(Family::Ex31, 5),
        Err(Error::UnsupportedOrder { .. })
    ));
    assert!(matches!(
        gen_example(Family::Ex35, 1),
        Err(Error::UnsupportedOrder { .. })
    ));
    assert!(matches!(
        gen_example(Family::Ex32, 0),
        Err(Error::UnsupportedOrder { .. })
    ));
    assert!(matches!(
        closed_form_det(Family::Ex35, 4),
        Err(Error::NoClosedForm { .. })
    ));
}
