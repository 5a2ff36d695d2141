//! Unit-disc side: the Schur algorithm on truncated series, Wall polynomials
//! from products of Schur-step transfer matrices, monic orthogonal polynomials
//! on the unit circle, and the Schur/Carathéodory series maps.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyC, Side, TransferMatrix2};
use crate::scalar::{real, Real};
use crate::series::TaylorSeries;
use crate::tol;

/// Schur parameters `γ_0, ..., γ_{N-1}`, all strictly inside the unit disc.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurParams<T> {
    gamma: Vec<Complex<T>>,
}

impl<T: Real> SchurParams<T> {
    pub fn new(gamma: Vec<Complex<T>>) -> Result<Self> {
        for (index, g) in gamma.iter().enumerate() {
            let modulus = g.norm();
            if !modulus.is_finite() || modulus >= T::one() {
                return Err(Error::ParameterOnBoundary {
                    index,
                    modulus: modulus.as_f64(),
                });
            }
        }
        Ok(SchurParams { gamma })
    }

    /// `n` zero parameters, the Schur parameters of `f ≡ 0`.
    pub fn zeros(n: usize) -> Self {
        SchurParams {
            gamma: vec![Complex::zero(); n],
        }
    }

    pub fn gamma(&self) -> &[Complex<T>] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    /// The first `n` parameters.
    pub fn prefix(&self, n: usize) -> Self {
        SchurParams {
            gamma: self.gamma[..n.min(self.len())].to_vec(),
        }
    }

    pub fn max_diff(&self, other: &Self) -> T {
        self.gamma
            .iter()
            .zip(&other.gamma)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }
}

/// Runs the Schur algorithm on a truncated series.
///
/// Each step `f_{k+1} = (f_k - γ_k) / (z (1 - conj(γ_k) f_k))` divides by `z` and
/// therefore consumes one order of the available Taylor data.
pub fn schur_parameters<T: Real>(f: &TaylorSeries<T>, count: usize) -> Result<SchurParams<T>> {
    if count > f.order() {
        return Err(Error::InsufficientOrder {
            requested: count,
            order: f.order(),
        });
    }
    let limit = T::one() - T::lit(tol::BOUNDARY);
    let mut gamma = Vec::with_capacity(count);
    let mut fk = f.clone();
    for index in 0..count {
        let g = fk.coeff(0);
        if g.norm() >= limit {
            return Err(Error::ParameterOnBoundary {
                index,
                modulus: g.norm().as_f64(),
            });
        }
        gamma.push(g);
        if index + 1 == count {
            break;
        }
        let num = fk.add_constant(-g).div_z().expect("order checked above");
        let den = fk.scale(-g.conj()).add_constant(Complex::one());
        fk = num
            .div(&den)
            .map_err(|_| Error::DivisionNearZero { step: index })?;
    }
    Ok(SchurParams { gamma })
}

/// Taylor series of the rational Schur function with parameters `p` followed
/// by zeros, i.e. the ratio `A_{N-1} / B_{N-1}` of the last Wall polynomials.
pub fn schur_function_series<T: Real>(p: &SchurParams<T>, order: usize) -> TaylorSeries<T> {
    if p.is_empty() {
        return TaylorSeries::zeros(order);
    }
    let w = wall_polynomials(p);
    let a = TaylorSeries::from_poly(&w.a, order);
    let b = TaylorSeries::from_poly(&w.b, order);
    a.div(&b).expect("B(0) = 1")
}

/// The Schur-step factor `[[z, γ], [conj(γ) z, 1]]`.
pub fn schur_step_matrix<T: Real>(gamma: Complex<T>) -> TransferMatrix2<Complex<T>> {
    let z = Poly::x();
    TransferMatrix2::new(
        [
            [z.clone(), Poly::constant(gamma)],
            [z.scale(&gamma.conj()), Poly::constant(Complex::one())],
        ],
        Side::Disc,
    )
}

/// Product of the Schur-step factors for all parameters in `p`,
/// `[[z B_n^*, A_n], [z A_n^*, B_n]]` with `n = len - 1`.
pub fn wall_product<T: Real>(p: &SchurParams<T>) -> TransferMatrix2<Complex<T>> {
    p.gamma
        .iter()
        .fold(TransferMatrix2::identity(Side::Disc), |acc, &g| {
            acc.mul(&schur_step_matrix(g))
        })
}

/// Wall polynomials `A_n, B_n` and their reversals at nominal degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct WallPolynomials<T> {
    pub index: usize,
    pub a: PolyC<T>,
    pub b: PolyC<T>,
    pub a_star: PolyC<T>,
    pub b_star: PolyC<T>,
}

/// Reads the Wall polynomials off the transfer-matrix product.
///
/// Panics on an empty parameter sequence.
pub fn wall_polynomials<T: Real>(p: &SchurParams<T>) -> WallPolynomials<T> {
    assert!(
        !p.is_empty(),
        "Wall polynomials need at least one Schur parameter"
    );
    let m = wall_product(p);
    WallPolynomials {
        index: p.len() - 1,
        a: m.get(0, 1).clone(),
        b: m.get(1, 1).clone(),
        a_star: m
            .get(1, 0)
            .shift_down(1)
            .expect("z divides the (2,1) entry"),
        b_star: m
            .get(0, 0)
            .shift_down(1)
            .expect("z divides the (1,1) entry"),
    }
}

/// Pintér–Nevai formula: `Φ_{n+1} = z B_n^* - A_n^*`, `Φ_{n+1}^* = B_n - z A_n`.
pub fn opuc_from_wall<T: Real>(w: &WallPolynomials<T>) -> Result<(PolyC<T>, PolyC<T>)> {
    let n = w.index;
    for (name, p) in [
        ("A", &w.a),
        ("B", &w.b),
        ("A*", &w.a_star),
        ("B*", &w.b_star),
    ] {
        if p.degree().is_some_and(|d| d > n) {
            return Err(Error::DegreeMismatch(format!(
                "deg {name} exceeds index {n}"
            )));
        }
    }
    if w.b_star.coeff(n) != Complex::one() {
        return Err(Error::DegreeMismatch(format!(
            "B* is not monic of degree {n}"
        )));
    }
    let phi = &w.b_star.shift_up(1) - &w.a_star;
    let phi_star = &w.b - &w.a.shift_up(1);
    Ok((phi, phi_star))
}

/// Szegő recurrence `Φ_{k+1} = z Φ_k - conj(α_k) Φ_k^*`, `Φ_{k+1}^* = Φ_k^* - α_k z Φ_k`,
/// returning the pairs for `k = 0..=n`.
pub fn szego_recurrence<T: Real>(
    alpha: &SchurParams<T>,
    n: usize,
) -> Result<Vec<(PolyC<T>, PolyC<T>)>> {
    if n > alpha.len() {
        return Err(Error::InsufficientOrder {
            requested: n,
            order: alpha.len(),
        });
    }
    let one = Poly::constant(Complex::one());
    let mut out = vec![(one.clone(), one)];
    for &a in &alpha.gamma[..n] {
        let (phi, phi_star) = out.last().expect("nonempty");
        let z_phi = phi.shift_up(1);
        let next = &z_phi - &phi_star.scale(&a.conj());
        let next_star = phi_star - &z_phi.scale(&a);
        out.push((next, next_star));
    }
    Ok(out)
}

/// Moment sequence `c_0 = 1, c_k = F_k / 2` of a Carathéodory series `F = 1 + 2 c_1 z + ...`.
pub fn moments_from_caratheodory<T: Real>(f: &TaylorSeries<T>) -> TaylorSeries<T> {
    let half = T::lit(0.5);
    let mut c: Vec<_> = f.coeffs().iter().map(|&x| x * half).collect();
    c[0] = Complex::one();
    TaylorSeries::new(c).expect("nonempty")
}

/// Monic `Φ_n` from the bordered Toeplitz determinant of the moments, by
/// cofactor expansion. Independent of the recurrences; `n ≤ 8`.
pub fn toeplitz_opuc_oracle<T: Real>(c: &TaylorSeries<T>, n: usize) -> Result<PolyC<T>> {
    if n > 8 {
        return Err(Error::InvalidArgument(format!(
            "toeplitz oracle limited to n <= 8, got {n}"
        )));
    }
    if n > c.order() {
        return Err(Error::InsufficientOrder {
            requested: n,
            order: c.order(),
        });
    }
    // c_{-j} = conj(c_j)
    let moment = |k: isize| -> Complex<T> {
        if k >= 0 {
            c.coeff(k as usize)
        } else {
            c.coeff((-k) as usize).conj()
        }
    };
    for k in 0..n {
        let m: Vec<Vec<_>> = (0..=k)
            .map(|row| {
                (0..=k)
                    .map(|col| moment(row as isize - col as isize))
                    .collect()
            })
            .collect();
        let d = cofactor_det(&m);
        if d.norm() < T::lit(tol::DET) {
            return Err(Error::SingularMinor {
                index: k,
                modulus: d.norm().as_f64(),
            });
        }
    }
    let d_prev = if n == 0 {
        Complex::one()
    } else {
        let m: Vec<Vec<_>> = (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| moment(row as isize - col as isize))
                    .collect()
            })
            .collect();
        cofactor_det(&m)
    };
    // Expansion along the last row (1, z, ..., z^n).
    let coeffs = (0..=n)
        .map(|col| {
            let minor: Vec<Vec<_>> = (0..n)
                .map(|row| {
                    (0..=n)
                        .filter(|&j| j != col)
                        .map(|j| moment(row as isize - j as isize))
                        .collect()
                })
                .collect();
            let sign = if (n + col).is_multiple_of(2) {
                T::one()
            } else {
                -T::one()
            };
            cofactor_det(&minor) * sign / d_prev
        })
        .collect();
    Ok(Poly::new(coeffs))
}

fn cofactor_det<T: Real>(m: &[Vec<Complex<T>>]) -> Complex<T> {
    match m.len() {
        0 => Complex::one(),
        1 => m[0][0],
        n => (0..n).fold(Complex::zero(), |acc, col| {
            let minor: Vec<Vec<_>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != col)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = m[0][col] * cofactor_det(&minor);
            if col % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

/// `F = (1 + z f) / (1 - z f)`, known one order beyond `f`.
pub fn caratheodory_from_schur<T: Real>(f: &TaylorSeries<T>) -> TaylorSeries<T> {
    let zf = f.mul_z();
    let num = zf.add_constant(Complex::one());
    let den = zf.scale(-Complex::one()).add_constant(Complex::one());
    num.div(&den).expect("denominator starts with 1")
}

/// Inverse map `z f = (F - 1) / (F + 1)`; requires `F(0) = 1`.
pub fn schur_from_caratheodory<T: Real>(f: &TaylorSeries<T>) -> Result<TaylorSeries<T>> {
    let f0 = f.coeff(0);
    if (f0 - Complex::one()).norm() > T::lit(tol::BOUNDARY) {
        return Err(Error::NormalizationError {
            value: format!("{f0}"),
        });
    }
    if f.order() == 0 {
        return Err(Error::InsufficientOrder {
            requested: 1,
            order: 0,
        });
    }
    let num = f.add_constant(-Complex::one());
    let den = f.add_constant(Complex::one());
    let zf = num.div(&den)?;
    Ok(zf.div_z().expect("order at least 1"))
}

/// `Re F(z) = (1 - |z f|^2) / |1 - z f|^2` for a Schur value `f(z)`.
pub fn caratheodory_real_part<T: Real>(z: Complex<T>, f: Complex<T>) -> T {
    let zf = z * f;
    (T::one() - zf.norm_sqr()) / (real(T::one()) - zf).norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;
    fn cplx(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn series(v: &[(f64, f64)]) -> TaylorSeries<f64> {
        TaylorSeries::new(v.iter().map(|&(a, b)| cplx(a, b)).collect()).unwrap()
    }

    #[test]
    fn constant_function_has_one_nonzero_parameter() {
        let c = cplx(0.3, -0.2);
        let f = TaylorSeries::constant(c, 3);
        let p = schur_parameters(&f, 3).unwrap();
        assert_eq!(p.gamma(), &[c, Complex::zero(), Complex::zero()]);
    }

    #[test]
    fn zero_function() {
        let p = schur_parameters(&TaylorSeries::<f64>::zeros(4), 4).unwrap();
        assert!(p.gamma().iter().all(|g| g.is_zero()));
    }

    #[test]
    fn schur_parameters_errors() {
        let f = series(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]); // f(z) = z
        assert_eq!(
            schur_parameters(&f, 2),
            Err(Error::ParameterOnBoundary {
                index: 1,
                modulus: 1.0
            })
        );
        assert!(matches!(
            schur_parameters(&f, 3),
            Err(Error::InsufficientOrder { .. })
        ));
        assert!(SchurParams::new(vec![cplx(1.0, 0.0)]).is_err());
        assert!(SchurParams::new(vec![cplx(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn wall_polynomials_of_zero_parameters() {
        let w = wall_polynomials(&SchurParams::<f64>::zeros(3));
        assert!(w.a.is_zero());
        assert!(w.a_star.is_zero());
        assert_eq!(w.b, Poly::constant(Complex::one()));
        assert_eq!(w.b_star, Poly::monomial(Complex::one(), 2));
    }

    #[test]
    fn single_parameter_wall_polynomials() {
        let c = cplx(0.25, 0.5);
        let w = wall_polynomials(&SchurParams::new(vec![c]).unwrap());
        assert_eq!(w.a, Poly::constant(c));
        assert_eq!(w.b, Poly::constant(Complex::one()));
        assert_eq!(w.a_star, Poly::constant(c.conj()));
        assert_eq!(w.b_star, Poly::constant(Complex::one()));
        let (phi, phi_star) = opuc_from_wall(&w).unwrap();
        assert_eq!(phi, Poly::new(vec![-c.conj(), Complex::one()]));
        assert_eq!(phi.reversed(1).unwrap(), phi_star);
    }

    #[test]
    fn two_parameter_b_polynomial() {
        // [[z, g0], [g0* z, 1]] [[z, g1], [g1* z, 1]] has (2,2) entry g0* g1 z + 1
        let (g0, g1) = (cplx(0.3, 0.1), cplx(-0.2, 0.4));
        let w = wall_polynomials(&SchurParams::new(vec![g0, g1]).unwrap());
        assert_eq!(w.b, Poly::new(vec![Complex::one(), g0.conj() * g1]));
        assert_eq!(w.a, Poly::new(vec![g0, g1]));
    }

    #[test]
    fn opuc_rejects_inconsistent_degrees() {
        let mut w = wall_polynomials(&SchurParams::new(vec![cplx(0.1, 0.0)]).unwrap());
        w.a = Poly::monomial(Complex::one(), 3);
        assert!(matches!(opuc_from_wall(&w), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn szego_small_cases() {
        let out = szego_recurrence(&SchurParams::<f64>::zeros(2), 2).unwrap();
        assert_eq!(out[2].0, Poly::monomial(Complex::one(), 2));
        let half = SchurParams::new(vec![cplx(0.5, 0.0), cplx(0.5, 0.0)]).unwrap();
        let out = szego_recurrence(&half, 2).unwrap();
        assert_eq!(out[1].0, Poly::new(vec![cplx(-0.5, 0.0), Complex::one()]));
        // z Φ_1 - Φ_1^* / 2 with Φ_1^* = 1 - z/2
        assert_eq!(
            out[2].0,
            Poly::new(vec![cplx(-0.5, 0.0), cplx(-0.25, 0.0), Complex::one()])
        );
        assert!(szego_recurrence(&half, 3).is_err());
    }

    #[test]
    fn toeplitz_oracle_small_cases() {
        let lebesgue = TaylorSeries::constant(Complex::<f64>::one(), 5);
        for n in 0..=5 {
            assert_eq!(
                toeplitz_opuc_oracle(&lebesgue, n).unwrap(),
                Poly::monomial(Complex::one(), n)
            );
        }
        let c1 = cplx(0.3, 0.4);
        let c = series(&[(1.0, 0.0), (0.3, 0.4)]);
        let phi = toeplitz_opuc_oracle(&c, 1).unwrap();
        assert_eq!(phi, Poly::new(vec![-c1.conj(), Complex::one()]));
        let singular = series(&[(1.0, 0.0), (1.0, 0.0), (1.0, 0.0)]);
        assert!(matches!(
            toeplitz_opuc_oracle(&singular, 2),
            Err(Error::SingularMinor { index: 1, .. })
        ));
    }

    #[test]
    fn caratheodory_maps() {
        let zero = TaylorSeries::<f64>::zeros(4);
        let f = caratheodory_from_schur(&zero);
        assert_eq!(f, TaylorSeries::constant(Complex::one(), 5));

        let c = cplx(0.4, -0.3);
        let f = caratheodory_from_schur(&TaylorSeries::constant(c, 4));
        let mut power = Complex::one();
        assert_eq!(f.coeff(0), Complex::one());
        for k in 1..=5 {
            power *= c;
            assert!((f.coeff(k) - power * 2.0).norm() < 1e-15);
        }
        let back = schur_from_caratheodory(&f).unwrap();
        assert!(back.max_diff(&TaylorSeries::constant(c, 4)) < 1e-15);

        let bad = series(&[(2.0, 0.0), (0.0, 0.0)]);
        assert!(matches!(
            schur_from_caratheodory(&bad),
            Err(Error::NormalizationError { .. })
        ));
    }
}
