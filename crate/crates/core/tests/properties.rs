//! Property-based invariants.

use num_complex::Complex64;
use proptest::prelude::*;
use wall_cf::contfrac::{ab_polynomials, ab_ratio, eval_nevanlinna_fraction, Tail};
use wall_cf::pencil::{chain_minimal_params, j_positivity, pencil_eigenvalues, pencil_from_wall};
use wall_cf::schur::{
    caratheodory_from_schur, opuc_from_wall, schur_from_caratheodory, schur_function_series,
    schur_parameters, szego_recurrence, wall_polynomials, wall_product,
};
use wall_cf::wall::{cayley, cayley_inverse, delta_sequence, wall_forward, wall_inverse};
use wall_cf::{SchurParams64, TaylorSeries64, WallParams64};

fn schur_params(
    len: std::ops::RangeInclusive<usize>,
    max_mod: f64,
) -> impl Strategy<Value = SchurParams64> {
    prop::collection::vec((0.0..max_mod, 0.0..std::f64::consts::TAU), len).prop_map(|v| {
        SchurParams64::new(
            v.into_iter()
                .map(|(r, t)| Complex64::from_polar(r, t))
                .collect(),
        )
        .unwrap()
    })
}

fn wall_params(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = WallParams64> {
    prop::collection::vec((0.05..0.95f64, -2.0..2.0f64), len).prop_map(|v| {
        WallParams64::new(
            v.iter().map(|p| p.0).collect(),
            v.iter().map(|p| p.1).collect(),
        )
        .unwrap()
    })
}

fn upper() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, 0.2..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn wall_map_round_trips(p in schur_params(0..=30, 0.95)) {
        let w = wall_forward(&p).unwrap();
        prop_assert!(w.g().iter().all(|&g| g > 0.0 && g < 1.0));
        prop_assert!(wall_inverse(&w).unwrap().max_diff(&p) < 1e-10);
    }

    #[test]
    fn delta_is_unimodular(p in schur_params(0..=30, 0.95)) {
        prop_assert!(delta_sequence(&p).unwrap().max_unimodular_defect() < 1e-13);
    }

    #[test]
    fn cayley_pair_is_inverse(lambda in upper()) {
        let z = cayley(lambda).unwrap();
        prop_assert!(z.norm() < 1.0);
        prop_assert!((cayley_inverse(z).unwrap() - lambda).norm() < 1e-12 * lambda.norm().max(1.0));
    }

    #[test]
    fn wall_product_determinant_is_product_of_factors(p in schur_params(0..=8, 0.9)) {
        let det = wall_product(&p).det();
        let scale: f64 = p.gamma().iter().map(|g| 1.0 - g.norm_sqr()).product();
        let n = p.len();
        for (k, coef) in det.coeffs().iter().enumerate() {
            let want = if k == n { scale } else { 0.0 };
            prop_assert!((coef - Complex64::new(want, 0.0)).norm() < 1e-12, "k = {}", k);
        }
    }

    #[test]
    fn geronimus_identity(p in schur_params(1..=12, 0.9)) {
        let szego = szego_recurrence(&p, p.len()).unwrap();
        let (phi, phi_star) = opuc_from_wall(&wall_polynomials(&p)).unwrap();
        let (want, want_star) = &szego[p.len()];
        prop_assert!(phi.max_diff(want) < 1e-12);
        prop_assert!(phi_star.max_diff(want_star) < 1e-12);
    }

    #[test]
    fn schur_parameters_recovered_from_series(p in schur_params(1..=12, 0.9)) {
        let f = schur_function_series(&p, p.len() + 4);
        let back = schur_parameters(&f, p.len()).unwrap();
        prop_assert!(back.max_diff(&p) < 1e-8);
    }

    #[test]
    fn caratheodory_round_trip(coeffs in prop::collection::vec((-0.1..0.1f64, -0.1..0.1f64), 9)) {
        let f = TaylorSeries64::new(coeffs.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap();
        let back = schur_from_caratheodory(&caratheodory_from_schur(&f)).unwrap();
        for k in 0..=f.order() {
            prop_assert!((back.coeff(k) - f.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn fraction_pins_i(w in wall_params(1..=40), depth in 0usize..40) {
        let depth = depth.min(w.len());
        let v = eval_nevanlinna_fraction(&w, Complex64::i(), depth, Tail::Zero).unwrap().value;
        prop_assert!((v - Complex64::i()).norm() < 1e-12);
    }

    #[test]
    fn fraction_maps_upper_half_plane_to_closed_upper_half_plane(w in wall_params(1..=30), lambda in upper()) {
        let v = eval_nevanlinna_fraction(&w, lambda, w.len(), Tail::Zero).unwrap().value;
        prop_assert!(v.im >= -1e-12);
    }

    #[test]
    fn backward_fraction_equals_ab_ratio(w in wall_params(1..=20), lambda in upper()) {
        let ab = ab_polynomials(&w, w.len()).unwrap();
        for d in 0..=w.len() {
            let backward = eval_nevanlinna_fraction(&w, lambda, d, Tail::Zero).unwrap().value;
            let ratio = ab_ratio(&ab[d + 1], lambda).unwrap();
            prop_assert!((backward - ratio).norm() <= 1e-9 * ratio.norm().max(1.0));
        }
    }

    #[test]
    fn pencil_sections_are_real_and_positive(w in wall_params(2..=20)) {
        let p = pencil_from_wall(&w);
        for m in 1..=w.len() {
            prop_assert!(j_positivity(&p, m));
            let e = pencil_eigenvalues(&p, m).unwrap();
            prop_assert_eq!(e.len(), m);
        }
    }

    #[test]
    fn pencil_b_squared_is_a_chain(w in wall_params(1..=40)) {
        let p = pencil_from_wall(&w);
        let bsq: Vec<f64> = p.b().iter().map(|b| b * b).collect();
        prop_assert!(chain_minimal_params(&bsq).is_chain);
    }
}
