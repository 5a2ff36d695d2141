//! Simultaneous polynomial root finding (Aberth–Ehrlich).

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyC;
use crate::scalar::Real;
use crate::tol;

/// Stopping rule and budget for [`aberth`].
#[derive(Clone, Copy, Debug)]
pub struct AberthOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions {
            tolerance: tol::ROOT_RESIDUAL,
            max_iterations: tol::ROOT_ITERATIONS,
        }
    }
}

/// Cauchy bound `1 + max |c_k / c_n|` on the moduli of the roots.
pub fn cauchy_radius<T: Real>(p: &PolyC<T>) -> T {
    let Some(lead) = p.leading().copied() else {
        return T::one();
    };
    let n = p.coeffs().len() - 1;
    T::one()
        + p.coeffs()[..n]
            .iter()
            .fold(T::zero(), |m, c| m.max((c / lead).norm()))
}

/// `degree` points on the circle of radius `radius`, rotated off the real axis
/// so that real-symmetric problems do not start on a symmetric configuration.
pub fn circle_starts<T: Real>(degree: usize, radius: T) -> Vec<Complex<T>> {
    let offset = T::lit(0.4);
    (0..degree)
        .map(|k| {
            Complex::from_polar(
                radius,
                T::TAU() * T::from_index(k) / T::from_index(degree) + offset,
            )
        })
        .collect()
}

/// Starting points from the Newton polygon of `log |c_k|`.
///
/// Each edge of the upper convex hull from `i` to `j` contributes `j - i` points
/// on a circle of radius `|c_i / c_j|^{1/(j-i)}`. Roots spread over many orders
/// of magnitude then start near their own scale instead of on one huge circle.
/// Leading zero coefficients (roots at the origin) get a circle well inside the rest.
pub fn newton_polygon_starts<T: Real>(p: &PolyC<T>) -> Vec<Complex<T>> {
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.norm().as_f64().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross =
                (b.0 as f64 - a.0 as f64) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut starts = Vec::new();
    let mut smallest = f64::INFINITY;
    for (e, edge) in hull.windows(2).enumerate() {
        let ((i, li), (j, lj)) = (edge[0], edge[1]);
        let radius = ((li - lj) / (j - i) as f64).exp();
        smallest = smallest.min(radius);
        // Stagger the angle per edge so neighbouring circles do not align.
        let offset = 0.4 + 0.7 * e as f64;
        for k in 0..j - i {
            let angle = std::f64::consts::TAU * k as f64 / (j - i) as f64 + offset;
            starts.push(Complex::from_polar(T::lit(radius), T::lit(angle)));
        }
    }
    let zeros = hull.first().map_or(0, |h| h.0);
    if zeros > 0 {
        let radius = if smallest.is_finite() {
            smallest * 1e-2
        } else {
            1.0
        };
        starts.extend(circle_starts(zeros, T::lit(radius)));
    }
    starts
}

/// Refines `starts` to roots of a polynomial given through `eval(z) = (p(z), p'(z))`.
///
/// A root is frozen once its correction drops below `tolerance · max(|z|, 1)`,
/// or once the correction is below `sqrt(tolerance) · max(|z|, 1)` and no longer
/// shrinking: large roots of badly scaled polynomials stall at the rounding floor
/// of `eval`, a little above the nominal tolerance.
pub fn aberth<T: Real>(
    starts: Vec<Complex<T>>,
    opts: AberthOptions,
    eval: impl Fn(Complex<T>) -> (Complex<T>, Complex<T>),
) -> Result<Vec<Complex<T>>> {
    let n = starts.len();
    let mut z = starts;
    let mut done = vec![false; n];
    let mut last = vec![T::infinity(); n];
    let tol = T::lit(opts.tolerance);
    let loose = tol.sqrt();
    for _ in 0..opts.max_iterations {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = eval(z[k]);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            let newton = p / dp;
            let repulsion = (0..n)
                .filter(|&j| j != k)
                .fold(Complex::zero(), |acc, j| acc + (z[k] - z[j]).inv());
            let w = newton / (Complex::<T>::one() - newton * repulsion);
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::RootfinderDivergence {
                    iterations: opts.max_iterations,
                });
            }
            z[k] -= w;
            let step = w.norm();
            let size = z[k].norm().max(T::one());
            if step <= tol * size || (step <= loose * size && step >= last[k] * T::lit(0.5)) {
                done[k] = true;
            }
            last[k] = step;
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::RootfinderDivergence {
        iterations: opts.max_iterations,
    })
}

/// Fujiwara bound `2 max_k |c_{n-k} / c_n|^{1/k}` (with the constant term halved).
///
/// Much tighter than [`cauchy_radius`] when the coefficients grow quickly,
/// which keeps Aberth from spending its budget shrinking a huge start circle.
pub fn fujiwara_radius<T: Real>(p: &PolyC<T>) -> T {
    let Some(lead) = p.leading().copied() else {
        return T::one();
    };
    let n = p.coeffs().len() - 1;
    let bound = (1..=n).fold(T::zero(), |m, k| {
        let mut ratio = (p.coeffs()[n - k] / lead).norm();
        if k == n {
            ratio /= T::lit(2.0);
        }
        m.max(ratio.powf(T::one() / T::from_index(k)))
    });
    if bound > T::zero() {
        T::lit(2.0) * bound
    } else {
        T::one()
    }
}

/// Roots of a polynomial in coefficient form, seeded from its Newton polygon.
pub fn poly_roots<T: Real>(p: &PolyC<T>, opts: AberthOptions) -> Result<Vec<Complex<T>>> {
    let Some(degree) = p.degree() else {
        return Err(Error::InvalidArgument(
            "zero polynomial has no isolated roots".into(),
        ));
    };
    let dp = p.derivative();
    debug_assert_eq!(degree, p.coeffs().len() - 1);
    aberth(newton_polygon_starts(p), opts, |z| {
        (p.eval(&z), dp.eval(&z))
    })
}

/// Hausdorff distance between two finite point sets in the plane.
pub fn hausdorff<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    let directed = |x: &[Complex<T>], y: &[Complex<T>]| {
        x.iter().fold(T::zero(), |m, p| {
            m.max(y.iter().fold(T::infinity(), |d, q| d.min((p - q).norm())))
        })
    };
    directed(a, b).max(directed(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    fn cplx(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn sorted_re(mut v: Vec<Complex<f64>>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.into_iter().map(|z| z.re).collect()
    }

    #[test]
    fn quadratic_and_cubic() {
        let p: PolyC<f64> = Poly::new(vec![cplx(-1.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)]);
        let r = sorted_re(poly_roots(&p, AberthOptions::default()).unwrap());
        assert!((r[0] + 1.0).abs() < 1e-14 && (r[1] - 1.0).abs() < 1e-14);

        // (x - 1)(x - 2)(x - 3)
        let p: PolyC<f64> = Poly::new(
            vec![-6.0, 11.0, -6.0, 1.0]
                .into_iter()
                .map(|c| cplx(c, 0.0))
                .collect(),
        );
        let r = sorted_re(poly_roots(&p, AberthOptions::default()).unwrap());
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn complex_roots_of_unity() {
        let mut c = vec![cplx(0.0, 0.0); 8];
        c[0] = cplx(-1.0, 0.0);
        c.push(cplx(1.0, 0.0));
        let p: PolyC<f64> = Poly::new(c);
        let roots = poly_roots(&p, AberthOptions::default()).unwrap();
        let want: Vec<_> = (0..8)
            .map(|k| Complex::from_polar(1.0, std::f64::consts::TAU * k as f64 / 8.0))
            .collect();
        assert!(hausdorff(&roots, &want) < 1e-12);
    }

    #[test]
    fn widely_spread_roots() {
        let want = [-1e6, 1e-3, 1.0, 1e3, 2e3];
        let p = want.iter().fold(Poly::constant(cplx(1.0, 0.0)), |acc, &r| {
            &acc * &Poly::linear(cplx(-r, 0.0), cplx(1.0, 0.0))
        });
        assert_eq!(newton_polygon_starts(&p).len(), 5);
        let got = sorted_re(poly_roots(&p, AberthOptions::default()).unwrap());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= 1e-9 * w.abs(), "{g} vs {w}");
        }
    }

    #[test]
    fn zero_roots_get_starts() {
        // x^2 (x - 2)
        let p: PolyC<f64> = Poly::new(vec![cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(-2.0, 0.0), cplx(1.0, 0.0)]);
        assert_eq!(newton_polygon_starts(&p).len(), 3);
        let got = sorted_re(poly_roots(&p, AberthOptions::default()).unwrap());
        assert!(got[0].abs() < 1e-7 && got[1].abs() < 1e-7 && (got[2] - 2.0).abs() < 1e-12, "{got:?}");
    }

    #[test]
    fn hausdorff_is_symmetric_and_zero_on_equal_sets() {
        let a = [cplx(0.0, 0.0), cplx(1.0, 0.0)];
        let b = [cplx(1.0, 0.0), cplx(0.0, 0.0)];
        assert_eq!(hausdorff(&a, &b), 0.0);
        let c = [cplx(0.0, 0.0)];
        assert_eq!(hausdorff(&a, &c), 1.0);
        assert_eq!(hausdorff(&c, &a), 1.0);
    }
}
