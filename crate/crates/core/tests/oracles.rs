//! Library results against independently computed reference values.

#![allow(clippy::needless_range_loop)]
mod common;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use wall_cf::contfrac::{
    eval_caratheodory_fraction, eval_j_fraction, eval_nevanlinna_fraction, eval_wall_fraction, Tail,
};
use wall_cf::pencil::{
    chain_minimal_params, decaying_pencil, finite_section, pencil_char_poly, pencil_eigenvalues,
    pencil_from_wall, DecaySpec,
};
use wall_cf::quadrature::GaussLegendre;
use wall_cf::ratfun::{pj_jacobi_form, pseudo_jacobi_r, reference_m0, PseudoJacobiSpec};
use wall_cf::schur::{caratheodory_from_schur, schur_function_series, schur_parameters};
use wall_cf::wall::{wall_forward, wall_inverse};
use wall_cf::{SchurParams64, TaylorSeries64, WallParams64};

use common::{random_point_in_disc, random_schur, random_upper, random_wall, rng};

type Q = Ratio<i128>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `a / b` on truncated rational series, `b[0] != 0`.
fn q_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len()];
    for k in 0..a.len() {
        let acc = (1..=k).fold(a[k], |acc, j| {
            acc - b.get(j).copied().unwrap_or_default() * out[k - j]
        });
        out[k] = acc / b[0];
    }
    out
}

/// Exact Schur algorithm on a real rational series.
fn q_schur(mut f: Vec<Q>, count: usize) -> Vec<Q> {
    let mut gamma = Vec::new();
    for _ in 0..count {
        let g = f[0];
        gamma.push(g);
        let num: Vec<Q> = f
            .iter()
            .enumerate()
            .map(|(k, &x)| if k == 0 { x - g } else { x })
            .collect();
        let den: Vec<Q> = f
            .iter()
            .enumerate()
            .map(|(k, &x)| if k == 0 { Q::one() - g * x } else { -g * x })
            .collect();
        let q = q_div(&num, &den);
        f = q[1..].to_vec();
    }
    gamma
}

#[test]
fn schur_parameters_match_exact_rational_algorithm() {
    let f = vec![Q::new(1, 2), Q::new(3, 8), Q::zero(), Q::zero()];
    let exact = q_schur(f.clone(), 3);
    assert_eq!(exact, vec![Q::new(1, 2), Q::new(1, 2), Q::new(1, 6)]);

    let series = TaylorSeries64::new(
        f.iter()
            .map(|q| c(*q.numer() as f64 / *q.denom() as f64, 0.0))
            .collect(),
    )
    .unwrap();
    let got = schur_parameters(&series, 3).unwrap();
    for (g, q) in got.gamma().iter().zip(&exact) {
        assert!((g - c(*q.numer() as f64 / *q.denom() as f64, 0.0)).norm() < 1e-15);
    }
}

#[test]
fn schur_parameters_match_rational_algorithm_on_small_fractions() {
    let mut rng = rng(21);
    let mut checked = 0;
    for _ in 0..30 {
        let f: Vec<Q> = (0..6).map(|_| Q::new(rng.gen_range(-3..=3), 8)).collect();
        let exact = q_schur(f.clone(), 3);
        if exact.iter().any(|g| g.abs() >= Q::one()) {
            continue;
        }
        let series = TaylorSeries64::new(
            f.iter()
                .map(|q| c(*q.numer() as f64 / *q.denom() as f64, 0.0))
                .collect(),
        )
        .unwrap();
        let got = schur_parameters(&series, 3).unwrap();
        for (g, q) in got.gamma().iter().zip(&exact) {
            let want = *q.numer() as f64 / *q.denom() as f64;
            assert!((g.re - want).abs() < 1e-12 && g.im.abs() < 1e-15, "{f:?}");
        }
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} draws stayed inside the disc");
}

#[test]
fn caratheodory_of_constant_schur_function_is_geometric() {
    let cc = c(0.3, -0.4);
    let order = 10;
    let f = TaylorSeries64::constant(cc, order);
    let big_f = caratheodory_from_schur(&f);
    // (1 + cz) / (1 - cz) = 1 + 2 Σ c^k z^k
    for k in 0..=order {
        let want = if k == 0 {
            c(1.0, 0.0)
        } else {
            cc.powu(k as u32) * 2.0
        };
        assert!((big_f.coeff(k) - want).norm() < 1e-14, "k = {k}");
    }
}

#[test]
fn schur_function_series_matches_wall_fraction_inside_the_disc() {
    let mut rng = rng(22);
    for _ in 0..10 {
        let p = random_schur(&mut rng, 8, 0.7);
        let series = schur_function_series(&p, 60);
        let z = random_point_in_disc(&mut rng, 0.5);
        let frac = eval_wall_fraction(&p, z, 8, Tail::Zero).unwrap().value;
        assert!((series.eval(z) - frac).norm() < 1e-12);
    }
}

#[test]
fn caratheodory_fraction_is_cayley_image_of_schur_fraction() {
    let mut rng = rng(23);
    for _ in 0..10 {
        // Both fractions truncate differently, so compare converged values.
        let p = random_schur(&mut rng, 80, 0.8);
        let z = random_point_in_disc(&mut rng, 0.6);
        let f = eval_wall_fraction(&p, z, 80, Tail::Zero).unwrap().value;
        let big_f = eval_caratheodory_fraction(&wall_forward(&p).unwrap(), z, 80, Tail::Zero)
            .unwrap()
            .value;
        let want = (1.0 + z * f) / (1.0 - z * f);
        assert!(
            (big_f - want).norm() < 1e-11 * want.norm().max(1.0),
            "{big_f} vs {want}"
        );
    }
}

#[test]
fn single_wall_parameter_examples() {
    let w = wall_forward(&SchurParams64::new(vec![c(0.5, 0.0)]).unwrap()).unwrap();
    assert!((w.g()[0] - 0.25).abs() < 1e-15 && w.r()[0].abs() < 1e-15);
    let back = wall_inverse(&WallParams64::new(vec![0.25], vec![0.0]).unwrap()).unwrap();
    assert!((back.gamma()[0] - c(0.5, 0.0)).norm() < 1e-15);
}

#[test]
fn reference_fraction_is_i_across_the_upper_half_plane() {
    let w = WallParams64::reference(300);
    let mut rng = rng(24);
    for _ in 0..20 {
        let lambda = random_upper(&mut rng);
        let got = eval_nevanlinna_fraction(&w, lambda, 300, Tail::Zero)
            .unwrap()
            .value;
        assert!(
            (got - reference_m0(lambda).unwrap()).norm() < 1e-10,
            "λ = {lambda}"
        );
    }
}

#[test]
fn free_jacobi_fraction_is_root_of_quadratic() {
    let a = vec![0.0; 200];
    let b = vec![0.5; 199];
    for lambda in [c(0.0, 2.0), c(1.0, 1.0), c(-0.3, 0.8)] {
        // t = -1/(λ + t/4): t²/4 + λt + 1 = 0, root in the upper half-plane.
        let disc = (lambda * lambda - 1.0).sqrt();
        let roots = [2.0 * (-lambda + disc), 2.0 * (-lambda - disc)];
        let want = *roots.iter().find(|t| t.im > 0.0).unwrap();
        let got = eval_j_fraction(&a, &b, lambda, 199).unwrap();
        assert!((got - want).norm() < 1e-10, "λ = {lambda}: {got} vs {want}");
    }
    let at_2i = eval_j_fraction(&a, &b, c(0.0, 2.0), 199).unwrap();
    assert!((at_2i - c(0.0, 2.0 / (2.0 + 5f64.sqrt()))).norm() < 1e-12);
}

/// Dense determinant by Gaussian elimination with partial pivoting.
fn dense_det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = c(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        if m[pivot][col].is_zero() {
            return Complex64::zero();
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let v = m[col][k];
                m[row][k] -= factor * v;
            }
        }
    }
    det
}

#[test]
fn characteristic_polynomial_matches_dense_determinant() {
    let mut rng = rng(25);
    for _ in 0..10 {
        let p = pencil_from_wall(&random_wall(&mut rng, 10));
        for m in 1..=8 {
            let sec = finite_section(&p, m).unwrap();
            let poly = pencil_char_poly(&p, m).unwrap();
            let lambda = random_upper(&mut rng);
            let mat: Vec<Vec<Complex64>> = (0..m)
                .map(|i| (0..m).map(|k| sec.h[i][k] - lambda * sec.j[i][k]).collect())
                .collect();
            let want = dense_det(mat);
            let got = poly.eval_complex(lambda);
            assert!(
                (got - want).norm() <= 1e-10 * want.norm().max(1.0),
                "m = {m}"
            );
        }
    }
}

#[test]
fn reference_eigenvalues_of_size_three() {
    let p = pencil_from_wall(&WallParams64::reference(5));
    let e = pencil_eigenvalues(&p, 3).unwrap();
    let s3 = 3f64.sqrt();
    for (got, want) in e.iter().zip([-s3, 0.0, s3]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn quarter_chain_has_closed_form_parameters() {
    let a = chain_minimal_params(&[0.25; 30]);
    assert!(a.is_chain);
    for (k, m) in a.minimal_params.iter().enumerate() {
        assert!((m - k as f64 / (2.0 * (k as f64 + 1.0))).abs() < 1e-12);
    }
    let b = chain_minimal_params(&[1.0; 4]);
    assert!(!b.is_chain);
    assert_eq!(b.failure_index, Some(1));
}

#[test]
fn decaying_pencil_is_reproducible_and_seed_dependent() {
    let spec = DecaySpec {
        decay: 0.9,
        amplitude: 0.5,
        seed: 3,
        n: 40,
    };
    let a = decaying_pencil::<f64>(&spec).unwrap();
    let b = decaying_pencil::<f64>(&spec).unwrap();
    assert_eq!(a.a(), b.a());
    assert_eq!(a.b(), b.b());
    let other = decaying_pencil::<f64>(&DecaySpec { seed: 4, ..spec }).unwrap();
    assert_ne!(a.a(), other.a());
}

#[test]
fn pseudo_jacobi_matches_jacobi_polynomial_form() {
    let spec = PseudoJacobiSpec::new(2.0, 10);
    let mut rng = rng(26);
    for n in 1..=6 {
        let x0 = 1.0;
        let ratio = pseudo_jacobi_r(n, &spec, x0).unwrap() * c(1.0, x0).powu(n as u32)
            / pj_jacobi_form(n, 2.0, x0).unwrap();
        for _ in 0..5 {
            let x: f64 = rng.gen_range(-4.0..4.0);
            let lhs = pseudo_jacobi_r(n, &spec, x).unwrap() * c(1.0, x).powu(n as u32);
            let rhs = pj_jacobi_form(n, 2.0, x).unwrap() * ratio;
            assert!(
                (lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0),
                "n = {n}, x = {x}"
            );
        }
    }
}

#[test]
fn gauss_legendre_integrates_known_functions() {
    let gl = GaussLegendre::<f64>::new(40);
    let v = gl.integrate(-1.0, 1.0, |x: f64| 1.0 / (1.0 + x * x));
    assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    let v = gl.integrate(0.0, 1.0, f64::exp);
    assert!((v - (std::f64::consts::E - 1.0)).abs() < 1e-14);
}
