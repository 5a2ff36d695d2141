//! Pseudo-Jacobi rational functions
//! `R_n(x) = ₂F₁(-n, s; 2s; 2/(1 + ix))` and their normalized form `C_n = κ_n R_n`.
//!
//! The `R_n` satisfy
//! `n(x+i) R_{n-1} - 2x(s+n) R_n + (2s+n)(x-i) R_{n+1} = 0`
//! and the `C_n` the symmetric version
//! `β_{n-1}(x+i) C_{n-1} - x C_n + β_n (x-i) C_{n+1} = 0`
//! with `β_n² = (n+2s)(n+1) / (4(n+s)(n+1+s))`, which is `b_n²` of the pencil
//! built from `g_k = k/(2k+2s)`, `r_k = 0`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pencil::{pencil_eigenvalues, pencil_from_wall};
use crate::poly::{Poly, PolyC};
use crate::quadrature::GaussLegendre;
use crate::roots::{hausdorff, poly_roots, AberthOptions};
use crate::scalar::{imag_unit, real, Real};
use crate::tol;
use crate::wall::WallParams;

/// Parameter `s` of the family and the largest index in use.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PseudoJacobiSpec<T> {
    pub s: T,
    pub nmax: usize,
}

impl<T: Real> PseudoJacobiSpec<T> {
    pub fn new(s: T, nmax: usize) -> Self {
        PseudoJacobiSpec { s, nmax }
    }
}

/// Terms `(-n)_k (b)_k / ((c)_k k!)` of a terminating Gauss series, `k = 0..=n`.
fn hyp2f1_terms<T: Real>(n: usize, b: Complex<T>, c: Complex<T>) -> Result<Vec<Complex<T>>> {
    let mut terms = Vec::with_capacity(n + 1);
    let mut t = Complex::<T>::one();
    terms.push(t);
    for k in 0..n {
        let kf = T::from_index(k);
        let ck = c + kf;
        if ck.norm() < T::lit(tol::POLE) {
            return Err(Error::PochhammerPole { k });
        }
        t = t * (b + kf) * (kf - T::from_index(n)) / (ck * (kf + T::one()));
        terms.push(t);
    }
    Ok(terms)
}

/// `₂F₁(-n, b; c; z)` as the finite sum of its `n + 1` terms.
pub fn hyp2f1_terminating<T: Real>(
    n: usize,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    let terms = hyp2f1_terms(n, b, c)?;
    Ok(terms
        .iter()
        .rev()
        .fold(Complex::zero(), |acc, &t| acc * z + t))
}

fn pj_argument<T: Real>(x: T) -> Complex<T> {
    real::<T>(T::lit(2.0)) / Complex::new(T::one(), x)
}

fn check_index<T: Real>(n: usize, spec: &PseudoJacobiSpec<T>) -> Result<()> {
    if n > spec.nmax {
        Err(Error::InvalidArgument(format!(
            "index {n} exceeds nmax = {}",
            spec.nmax
        )))
    } else {
        Ok(())
    }
}

pub fn pseudo_jacobi_r<T: Real>(n: usize, spec: &PseudoJacobiSpec<T>, x: T) -> Result<Complex<T>> {
    check_index(n, spec)?;
    let s = real(spec.s);
    hyp2f1_terminating(n, s, s * T::lit(2.0), pj_argument(x))
}

/// `κ_n = Π_{k<n} sqrt((2s+k)(s+k+1) / ((s+k)(k+1)))`, so `κ_1² = 2(1+s)`.
pub fn pj_normalization<T: Real>(n: usize, s: T) -> Result<T> {
    let mut kappa = T::one();
    for k in 0..n {
        let kf = T::from_index(k);
        let factor = if k == 0 {
            T::lit(2.0) * (s + T::one())
        } else {
            (T::lit(2.0) * s + kf) * (s + kf + T::one()) / ((s + kf) * (kf + T::one()))
        };
        if !(factor > T::zero()) {
            return Err(Error::NegativeUnderRoot { index: k });
        }
        kappa *= factor.sqrt();
    }
    Ok(kappa)
}

pub fn pseudo_jacobi_c<T: Real>(n: usize, spec: &PseudoJacobiSpec<T>, x: T) -> Result<Complex<T>> {
    Ok(pseudo_jacobi_r(n, spec, x)? * pj_normalization(n, spec.s)?)
}

/// `β_n = sqrt((n+2s)(n+1) / (4(n+s)(n+1+s)))`, the off-diagonal of the symmetric recurrence.
pub fn pj_beta<T: Real>(n: usize, s: T) -> T {
    let nf = T::from_index(n);
    ((nf + T::lit(2.0) * s) * (nf + T::one()) / (T::lit(4.0) * (nf + s) * (nf + T::one() + s)))
        .sqrt()
}

/// `|n(x+i) R_{n-1} - 2x(s+n) R_n + (2s+n)(x-i) R_{n+1}|` with every `R` from the series.
pub fn pj_recurrence_residual<T: Real>(n: usize, spec: &PseudoJacobiSpec<T>, x: T) -> Result<T> {
    check_index(n + 1, spec)?;
    let i = imag_unit::<T>();
    let nf = T::from_index(n);
    let s = spec.s;
    let prev = if n == 0 {
        Complex::zero()
    } else {
        (i + x) * pseudo_jacobi_r(n - 1, spec, x)? * nf
    };
    let mid = pseudo_jacobi_r(n, spec, x)? * (T::lit(2.0) * x * (s + nf));
    let next = (real(x) - i) * pseudo_jacobi_r(n + 1, spec, x)? * (T::lit(2.0) * s + nf);
    Ok((prev - mid + next).norm())
}

/// `g_k = k / (2k + 2s)`, `r_k = 0` for `k = 1..=nmax`.
pub fn pj_wall_params<T: Real>(spec: &PseudoJacobiSpec<T>) -> Result<WallParams<T>> {
    if !(spec.s > T::lit(-0.5)) {
        return Err(Error::InvalidWallParams {
            index: 1,
            reason: format!("s = {} must exceed -1/2", spec.s),
        });
    }
    let g = (1..=spec.nmax)
        .map(|k| {
            let kf = T::from_index(k);
            kf / (T::lit(2.0) * (kf + spec.s))
        })
        .collect();
    WallParams::new(g, vec![T::zero(); spec.nmax])
}

/// `(1 + ix)^n R_n(x) = Σ_k t_k 2^k (1 + ix)^{n-k}` in coefficient form.
pub fn pj_numerator<T: Real>(n: usize, spec: &PseudoJacobiSpec<T>) -> Result<PolyC<T>> {
    let s = real(spec.s);
    let terms = hyp2f1_terms(n, s, s * T::lit(2.0))?;
    let one_ix = Poly::linear(Complex::one(), imag_unit::<T>());
    // powers[j] = (1 + ix)^j
    let mut powers = vec![Poly::constant(Complex::<T>::one())];
    for j in 1..=n {
        powers.push(&powers[j - 1] * &one_ix);
    }
    let mut out = Poly::zero();
    let mut two_k = T::one();
    for (k, t) in terms.iter().enumerate() {
        out = &out + &powers[n - k].scale(&(t * two_k));
        two_k *= T::lit(2.0);
    }
    Ok(out)
}

/// One row of the orthogonality table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalityEntry<T> {
    pub n: usize,
    pub k: usize,
    pub value: Complex<T>,
    /// `|value| / ∫ |C_n|² (1+t²)^{-s} dt`
    pub relative: T,
}

/// `∫ C_n(t) (t - i)^{-k} (1 + t²)^{-s} dt` for `k = 1..=kmax`, computed as
/// `∫_{-π/2}^{π/2} C_n(tan u)(tan u - i)^{-k} cos^{2s-2} u du`.
///
/// The rule with `nodes` points is compared against one with `2 · nodes`;
/// any change beyond `1e-8` of the norm integral is reported as
/// [`Error::QuadratureNotConverged`].
pub fn pj_orthogonality<T: Real>(
    spec: &PseudoJacobiSpec<T>,
    n: usize,
    kmax: usize,
    nodes: usize,
) -> Result<Vec<OrthogonalityEntry<T>>> {
    if !(spec.s > T::lit(0.5)) {
        return Err(Error::InvalidArgument(format!(
            "s = {} must exceed 1/2",
            spec.s
        )));
    }
    if kmax > n {
        return Err(Error::InvalidArgument(format!(
            "kmax = {kmax} exceeds n = {n}"
        )));
    }
    if nodes == 0 {
        return Err(Error::InvalidArgument(
            "quadrature needs at least one node".into(),
        ));
    }
    check_index(n, spec)?;
    let kappa = pj_normalization(n, spec.s)?;
    let s = real(spec.s);
    let terms = hyp2f1_terms(n, s, s * T::lit(2.0))?;
    let i = imag_unit::<T>();
    let half_pi = T::FRAC_PI_2();
    let weight_exp = T::lit(2.0) * spec.s - T::lit(2.0);

    let run = |rule: &GaussLegendre<T>| -> (T, Vec<Complex<T>>) {
        let mut norm = T::zero();
        let mut values = vec![Complex::zero(); kmax];
        let half = half_pi;
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let u = half * x;
            let t = u.tan();
            let weight = w * half * u.cos().powf(weight_exp);
            let c = terms
                .iter()
                .rev()
                .fold(Complex::zero(), |acc, &tk| acc * pj_argument(t) + tk)
                * kappa;
            norm += c.norm_sqr() * weight;
            let inv = (real(t) + i).inv();
            let mut p = c;
            for v in values.iter_mut() {
                p *= inv;
                *v += p * weight;
            }
        }
        (norm, values)
    };
    let (norm, coarse) = run(&GaussLegendre::new(nodes));
    let (_, fine) = run(&GaussLegendre::new(2 * nodes));
    let limit = T::lit(1e-8) * norm;
    if let Some(change) = coarse
        .iter()
        .zip(&fine)
        .map(|(a, b)| (a - b).norm())
        .find(|&d| d > limit)
    {
        return Err(Error::QuadratureNotConverged {
            change: (change / norm).as_f64(),
        });
    }
    Ok(coarse
        .into_iter()
        .enumerate()
        .map(|(j, value)| OrthogonalityEntry {
            n,
            k: j + 1,
            value,
            relative: value.norm() / norm,
        })
        .collect())
}

/// Zeros of `C_n` against the generalized eigenvalues of the pencil section
/// of size `n`; returns the Hausdorff distance.
pub fn pj_zero_match<T: Real>(spec: &PseudoJacobiSpec<T>, n: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidArgument("zero matching needs n >= 1".into()));
    }
    let zeros = poly_roots(&pj_numerator(n, spec)?, AberthOptions::default())?;
    let pencil = pencil_from_wall(&pj_wall_params(spec)?);
    let eig: Vec<Complex<T>> = pencil_eigenvalues(&pencil, n)?
        .into_iter()
        .map(real)
        .collect();
    Ok(hausdorff(&zeros, &eig))
}

/// Zeros of `C_n`, real parts ascending, after checking that they are real.
pub fn pj_zeros<T: Real>(spec: &PseudoJacobiSpec<T>, n: usize) -> Result<Vec<T>> {
    let zeros = poly_roots(&pj_numerator(n, spec)?, AberthOptions::default())?;
    let mut out = Vec::with_capacity(n);
    for (index, z) in zeros.iter().enumerate() {
        if z.im.abs() > T::lit(tol::REAL_ROOT) {
            return Err(Error::NonRealRoot {
                index,
                imag: z.im.as_f64(),
            });
        }
        out.push(z.re);
    }
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite zeros"));
    Ok(out)
}

/// `m_0(λ) = ±i` on the upper and lower half-planes.
pub fn reference_m0<T: Real>(lambda: Complex<T>) -> Result<Complex<T>> {
    if lambda.im > T::zero() {
        Ok(imag_unit())
    } else if lambda.im < T::zero() {
        Ok(-imag_unit::<T>())
    } else {
        Err(Error::RealAxisInput(format!("lambda = {lambda}")))
    }
}

/// `P_n^{(α,β)}(y) = (α+1)_n / n! · ₂F₁(-n, n+α+β+1; α+1; (1-y)/2)`.
pub fn jacobi_p<T: Real>(
    n: usize,
    alpha: Complex<T>,
    beta: Complex<T>,
    y: Complex<T>,
) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    let prefactor = (0..n).fold(one, |acc, k| {
        acc * (alpha + one + T::from_index(k)) / T::from_index(k + 1)
    });
    let f = hyp2f1_terminating(
        n,
        alpha + beta + one + T::from_index(n),
        alpha + one,
        (one - y) / T::lit(2.0),
    )?;
    Ok(prefactor * f)
}

/// `P_n^{(-s-n, -s-n)}(-ix)`, proportional to `(1 + ix)^n R_n(x)`.
pub fn pj_jacobi_form<T: Real>(n: usize, s: T, x: T) -> Result<Complex<T>> {
    let ab = real(-s - T::from_index(n));
    jacobi_p(n, ab, ab, Complex::new(T::zero(), -x))
}
