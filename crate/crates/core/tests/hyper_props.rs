#![allow(clippy::excessive_precision)]

use clausen_core::hyper::{
    clausen_terms, eval_3f2, gauss_sum_brute, gauss_sum_closed, hyper_terms, shifted_sum_brute, shifted_sum_closed,
    weighted_sum_brute, weighted_sum_closed, weighted_terms, DEFAULT_REL_TOL,
};
use clausen_core::{Complex64, Error, GeneralHyperParams, HyperParams};
use proptest::prelude::*;

const A: [f64; 4] = [0.1, 0.3, 0.5, 0.9];
const BC: [f64; 4] = [0.5, 1.5, 2.5, 3.5];

fn grid() -> impl Iterator<Item = HyperParams> {
    A.into_iter().flat_map(|a| {
        BC.into_iter().flat_map(move |b| {
            BC.into_iter().filter(move |&c| c != b).map(move |c| HyperParams::real(a, b, c).unwrap())
        })
    })
}

fn agrees(closed: f64, value: f64, tail: f64) -> bool {
    (closed - value).abs() <= tail + 1e-9 * closed.abs()
}

#[test]
fn gauss_closed_form_matches_direct_sum_on_grid() {
    for p in grid() {
        let closed = gauss_sum_closed(&p).unwrap();
        let s = eval_3f2(&GeneralHyperParams::clausen(&p), Complex64::new(1.0, 0.0), DEFAULT_REL_TOL).unwrap();
        assert!(agrees(closed, s.value.re, s.tail_bound), "{p:?}: {closed} vs {s:?}");
        let g = gauss_sum_brute(&p, DEFAULT_REL_TOL).unwrap();
        assert!(agrees(closed, g.value, g.tail_bound));
    }
}

#[test]
fn first_weighted_sum_matches_on_grid() {
    for p in grid() {
        let closed = weighted_sum_closed(1, &p).unwrap();
        let s = weighted_sum_brute(1, &p, 1e-10).unwrap();
        assert!(agrees(closed, s.value, s.tail_bound), "{p:?}: {closed} vs {s:?}");
    }
}

#[test]
fn shifted_sum_matches_on_grid() {
    for p in grid() {
        let closed = shifted_sum_closed(&p).unwrap();
        let s = shifted_sum_brute(&p, DEFAULT_REL_TOL).unwrap();
        assert!(agrees(closed, s.value, s.tail_bound), "{p:?}: {closed} vs {s:?}");
    }
}

#[test]
fn higher_weighted_sums_diverge_on_grid() {
    // terms behave like n^{|a| - 3 + k}, so k = 2, 3 never converge for |a| > 0
    for p in grid() {
        for k in [2, 3] {
            assert!(
                matches!(weighted_sum_brute(k, &p, 1e-10), Err(Error::Divergent { sign, .. }) if sign > 0.0),
                "{p:?} k={k}"
            );
        }
    }
}

#[test]
fn higher_weighted_closed_forms_are_reference_values() {
    // analytic continuation in a of the weighted sums, 30-digit reference
    let p = HyperParams::real(0.5, 2.0, 3.0).unwrap();
    assert!((weighted_sum_closed(2, &p).unwrap() + 17.6).abs() <= 1e-12 * 17.6);
    assert!((weighted_sum_closed(3, &p).unwrap() - 43.2).abs() <= 1e-12 * 43.2);
    let p = HyperParams::real(0.9, 1.5, 2.5).unwrap();
    assert!((weighted_sum_closed(1, &p).unwrap() - 32.067336160278998234).abs() <= 1e-12 * 32.07);
}

#[test]
fn reference_values_from_arbitrary_precision() {
    let cases = [
        (0.9, 1.5, 2.5, 2.2115404248468269564, 1.34611065336980824),
        (0.1, 0.5, 3.5, 1.0408915728355568605, 1.0167514227430590372),
    ];
    for (a, b, c, g, sh) in cases {
        let p = HyperParams::real(a, b, c).unwrap();
        assert!((gauss_sum_closed(&p).unwrap() - g).abs() <= 1e-12 * g);
        assert!((shifted_sum_closed(&p).unwrap() - sh).abs() <= 1e-12 * sh);
    }
    let p = HyperParams::real(0.1, 0.5, 3.5).unwrap();
    assert!((weighted_sum_closed(1, &p).unwrap() - 1.133600577202154532).abs() <= 1e-12);
}

fn admissible() -> impl Strategy<Value = HyperParams> {
    (0.01f64..0.95, 0.2f64..4.0, 0.2f64..4.0)
        .prop_filter("c must differ from b", |(_, b, c)| (b - c).abs() > 1e-3)
        .prop_map(|(a, b, c)| HyperParams::real(a, b, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_are_symmetric(p in admissible()) {
        let q = p.swapped();
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * x.abs().max(1.0);
        prop_assert!(close(gauss_sum_closed(&p).unwrap(), gauss_sum_closed(&q).unwrap()));
        for k in 1..=3 {
            prop_assert!(close(weighted_sum_closed(k, &p).unwrap(), weighted_sum_closed(k, &q).unwrap()));
        }
        if (p.b() - 1.0).abs() > 1e-3 && (p.c() - 1.0).abs() > 1e-3 {
            prop_assert!(close(shifted_sum_closed(&p).unwrap(), shifted_sum_closed(&q).unwrap()));
        }
    }

    #[test]
    fn terms_are_positive_and_partial_sums_increase(p in admissible()) {
        let mut partial = 0.0;
        for t in clausen_terms(&p).take(5000) {
            prop_assert!(t > 0.0);
            let next = partial + t;
            prop_assert!(next >= partial);
            partial = next;
        }
    }

    #[test]
    fn weighted_stream_is_the_evaluator_stream(p in admissible()) {
        // the evaluator's terms at z = 1, with the complex a replaced by |a|
        let g = GeneralHyperParams::real(p.a_abs(), p.b(), p.c(), p.b() + 1.0, p.c() + 1.0).unwrap();
        let stream = hyper_terms(&g, Complex64::new(1.0, 0.0));
        let mut direct = 0.0;
        let mut recomputed = 0.0;
        for (n, (w, t)) in weighted_terms(1, &p).zip(stream).take(2000).enumerate() {
            prop_assert_eq!(t.im, 0.0);
            prop_assert_eq!(w, (n as f64 + 1.0) * t.re);
            direct += w;
            recomputed += (n as f64 + 1.0) * t.re;
        }
        prop_assert_eq!(direct, recomputed);
    }

    #[test]
    fn inside_disc_evaluation_meets_its_bound(p in admissible(), r in 0.0f64..0.95, th in 0.0f64..std::f64::consts::TAU) {
        let z = Complex64::from_polar(r, th);
        let g = GeneralHyperParams::clausen(&p);
        let s = eval_3f2(&g, z, 1e-13).unwrap();
        let fine = eval_3f2(&g, z, 1e-14).unwrap();
        prop_assert!((s.value - fine.value).norm() <= s.tail_bound + fine.tail_bound);
        prop_assert!(s.tail_bound <= 1e-13 * s.value.norm());
    }
}
