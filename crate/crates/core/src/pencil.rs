//! The Jacobi pencil `H - λJ` built from Wall parameters.
//!
//! `H` is Hermitian tridiagonal with diagonal `a_j` and off-diagonals `±i b_j`,
//! `J` is real symmetric tridiagonal with unit diagonal and off-diagonals `b_j`.
//! A section of size `m` has `det(H_m - λJ_m) = (-1)^m ℬ_{m-1}(λ)`, so its
//! generalized eigenvalues are the zeros of `ℬ_{m-1}`.

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyR};
use crate::roots::{aberth, newton_polygon_starts, AberthOptions};
use crate::scalar::Real;
use crate::schur::SchurParams;
use crate::tol;
use crate::wall::{wall_forward, WallParams};

/// Diagonals of the pencil: `a_j = r_j` for `j = 0..=N` (with `r_0 = 0`) and
/// `b_j = sqrt((1 - g_j) g_{j+1})` for `j = 0..N` (with `g_0 = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct PencilDiagonals<T> {
    a: Vec<T>,
    b: Vec<T>,
}

impl<T: Real> PencilDiagonals<T> {
    /// Raw diagonals; `b` must be one shorter than `a`, or equally long.
    pub fn new(a: Vec<T>, b: Vec<T>) -> Result<Self> {
        if b.len() + 1 != a.len() && b.len() != a.len() {
            return Err(Error::InvalidArgument(format!(
                "diagonal lengths {} and {} do not fit a tridiagonal pencil",
                a.len(),
                b.len()
            )));
        }
        if let Some(k) = b.iter().position(|&x| !(x > T::zero() && x.is_finite())) {
            return Err(Error::InvalidArgument(format!("b_{k} is not positive")));
        }
        Ok(PencilDiagonals { a, b })
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    /// Largest section size available.
    pub fn max_section(&self) -> usize {
        self.a.len().min(self.b.len() + 1)
    }

    fn check_section(&self, m: usize) -> Result<()> {
        if m > self.max_section() {
            Err(Error::SectionTooLarge {
                requested: m,
                available: self.max_section(),
            })
        } else {
            Ok(())
        }
    }
}

pub fn pencil_from_wall<T: Real>(w: &WallParams<T>) -> PencilDiagonals<T> {
    let n = w.len();
    let a = (0..=n).map(|j| w.r_at(j)).collect();
    let b = (0..n)
        .map(|j| ((T::one() - w.g_at(j)) * w.g_at(j + 1)).sqrt())
        .collect();
    PencilDiagonals { a, b }
}

/// Dense `m × m` section.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSection<T> {
    pub h: Vec<Vec<Complex<T>>>,
    pub j: Vec<Vec<T>>,
}

pub fn finite_section<T: Real>(p: &PencilDiagonals<T>, m: usize) -> Result<FiniteSection<T>> {
    p.check_section(m)?;
    let mut h = vec![vec![Complex::zero(); m]; m];
    let mut j = vec![vec![T::zero(); m]; m];
    for k in 0..m {
        h[k][k] = Complex::new(p.a[k], T::zero());
        j[k][k] = T::one();
        if k + 1 < m {
            let b = p.b[k];
            h[k][k + 1] = Complex::new(T::zero(), b);
            h[k + 1][k] = Complex::new(T::zero(), -b);
            j[k][k + 1] = b;
            j[k + 1][k] = b;
        }
    }
    Ok(FiniteSection { h, j })
}

/// `det(H_m - λJ_m)` by `D_k = (a_{k-1} - λ) D_{k-1} - b_{k-2}^2 (1 + λ^2) D_{k-2}`.
///
/// The coefficients are real, so the result is returned as a real polynomial.
pub fn pencil_char_poly<T: Real>(p: &PencilDiagonals<T>, m: usize) -> Result<PolyR<T>> {
    p.check_section(m)?;
    let lsq1 = Poly::new(vec![T::one(), T::zero(), T::one()]);
    let mut prev = Poly::constant(T::one());
    if m == 0 {
        return Ok(prev);
    }
    let mut cur = Poly::linear(p.a[0], -T::one());
    for k in 2..=m {
        let bsq = p.b[k - 2] * p.b[k - 2];
        let next = &(&Poly::linear(p.a[k - 1], -T::one()) * &cur) - &(&lsq1 * &prev).scale(&bsq);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `(D_m(λ), D_m'(λ))` from the determinant recurrence, rescaled as it goes.
/// Only the ratio is meaningful.
fn char_value_and_slope<T: Real>(
    p: &PencilDiagonals<T>,
    m: usize,
    lambda: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let lsq1 = lambda * lambda + T::one();
    let two_l = lambda * T::lit(2.0);
    let (mut d0, mut s0) = (Complex::new(T::one(), T::zero()), Complex::zero());
    let (mut d1, mut s1) = (-lambda + p.a[0], Complex::new(-T::one(), T::zero()));
    for k in 2..=m {
        let c = p.b[k - 2] * p.b[k - 2];
        let lin = -lambda + p.a[k - 1];
        let d2 = lin * d1 - lsq1 * d0 * c;
        let s2 = lin * s1 - d1 - (two_l * d0 + lsq1 * s0) * c;
        let scale = d2.norm().max(s2.norm());
        let scale = if scale > T::zero() && scale.is_finite() {
            scale
        } else {
            T::one()
        };
        (d0, s0, d1, s1) = (d1 / scale, s1 / scale, d2 / scale, s2 / scale);
    }
    (d1, s1)
}

/// Raw complex roots of `det(H_m - λJ_m)` in iteration order.
///
/// Roots come from Aberth iteration on the determinant recurrence, started on
/// the Newton polygon of the characteristic polynomial, and are checked
/// against the coefficient form with relative residual `1e-8`.
pub fn pencil_roots<T: Real>(p: &PencilDiagonals<T>, m: usize) -> Result<Vec<Complex<T>>> {
    let poly = pencil_char_poly(p, m)?;
    let opts = AberthOptions::default();
    let roots = aberth(newton_polygon_starts(&poly.to_complex()), opts, |z| {
        char_value_and_slope(p, m, z)
    })?;

    // Residual relative to Σ|c_k| max(|λ|, 1)^k.
    let abs_poly = Poly::new(poly.coeffs().iter().map(|c| c.abs()).collect());
    for root in &roots {
        let scale = abs_poly.eval(&root.norm().max(T::one()));
        if poly.eval_complex(*root).norm() > T::lit(1e-8) * scale {
            return Err(Error::RootfinderDivergence {
                iterations: opts.max_iterations,
            });
        }
    }
    Ok(roots)
}

/// Generalized eigenvalues of the section of size `m`, ascending.
///
/// Imaginary parts of [`pencil_roots`] must stay below `1e-8`; they are then dropped.
pub fn pencil_eigenvalues<T: Real>(p: &PencilDiagonals<T>, m: usize) -> Result<Vec<T>> {
    let roots = pencil_roots(p, m)?;
    let mut out = Vec::with_capacity(m);
    for (index, root) in roots.iter().enumerate() {
        if root.im.abs() > T::lit(tol::REAL_ROOT) {
            return Err(Error::NonRealRoot {
                index,
                imag: root.im.as_f64(),
            });
        }
        out.push(root.re);
    }
    out.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(out)
}

/// `true` when `outer` (length `n + 1`) strictly interlaces `inner` (length `n`)
/// with every gap at least `gap`.
pub fn interlaces<T: Real>(outer: &[T], inner: &[T], gap: T) -> bool {
    outer.len() == inner.len() + 1
        && inner
            .iter()
            .enumerate()
            .all(|(i, &x)| outer[i] + gap < x && x + gap < outer[i + 1])
}

/// Positive definiteness of `J_m` through the LDLᵀ pivots
/// `d_0 = 1`, `d_k = 1 - b_{k-1}^2 / d_{k-1}`.
pub fn j_positivity<T: Real>(p: &PencilDiagonals<T>, m: usize) -> bool {
    if m > p.max_section() {
        return false;
    }
    let mut d = T::one();
    for k in 1..m {
        d = T::one() - p.b[k - 1] * p.b[k - 1] / d;
        if !(d > T::zero()) {
            return false;
        }
    }
    m == 0 || d > T::zero()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainAnalysis<T> {
    pub is_chain: bool,
    /// `m_0 = 0, m_1, ...`, up to and including the first violation.
    pub minimal_params: Vec<T>,
    pub failure_index: Option<usize>,
}

/// Minimal parameters `m_0 = 0`, `m_k = bsq_{k-1} / (1 - m_{k-1})`; the
/// sequence is a chain sequence iff every `m_k` lies in `[0, 1)`.
pub fn chain_minimal_params<T: Real>(bsq: &[T]) -> ChainAnalysis<T> {
    let mut params = Vec::with_capacity(bsq.len() + 1);
    params.push(T::zero());
    for (k, &c) in bsq.iter().enumerate() {
        let prev = params[k];
        let next = c / (T::one() - prev);
        params.push(next);
        if !(next >= T::zero() && next < T::one()) {
            return ChainAnalysis {
                is_chain: false,
                minimal_params: params,
                failure_index: Some(k + 1),
            };
        }
    }
    ChainAnalysis {
        is_chain: true,
        minimal_params: params,
        failure_index: None,
    }
}

/// Inputs of the decaying-parameter experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecaySpec {
    pub decay: f64,
    pub amplitude: f64,
    pub seed: u64,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailStats<T> {
    pub max_a: T,
    pub max_b_dev: T,
}

/// `γ_k = amplitude · decay^k · e^{iθ_k}` with `θ_k` uniform on `[0, 2π)`
/// drawn from SplitMix64.
pub fn decaying_schur_params<T: Real>(spec: &DecaySpec) -> Result<SchurParams<T>> {
    if !(spec.decay > 0.0 && spec.decay < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "decay {} outside (0, 1)",
            spec.decay
        )));
    }
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let gamma = (0..spec.n)
        .map(|k| {
            let theta = rng.gen::<f64>() * std::f64::consts::TAU;
            let modulus = spec.amplitude * spec.decay.powi(k as i32);
            Complex::from_polar(T::lit(modulus), T::lit(theta))
        })
        .collect();
    SchurParams::new(gamma)
}

/// Pencil diagonals of the decaying-parameter experiment.
pub fn decaying_pencil<T: Real>(spec: &DecaySpec) -> Result<PencilDiagonals<T>> {
    Ok(pencil_from_wall(&wall_forward(
        &decaying_schur_params::<T>(spec)?,
    )?))
}

/// Sup of `|a_k|` and `|b_k - 1/2|` over `k0 ≤ k ≤ k1`.
///
/// With `N` parameters `a` has indices `0..=N` and `b` has `0..N`; the window is
/// clipped to what each diagonal holds.
pub fn denisov_rakhmanov_tail<T: Real>(
    spec: &DecaySpec,
    window: (usize, usize),
) -> Result<TailStats<T>> {
    let (k0, k1) = window;
    if k0 > k1 || k1 > spec.n {
        return Err(Error::InvalidArgument(format!(
            "window ({k0}, {k1}) not inside 0..={}",
            spec.n
        )));
    }
    let p = decaying_pencil::<T>(spec)?;
    let half = T::lit(0.5);
    let max_a = p.a[k0..=k1].iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let max_b_dev =
        p.b.iter()
            .take(k1 + 1)
            .skip(k0)
            .fold(T::zero(), |m, x| m.max((*x - half).abs()));
    Ok(TailStats { max_a, max_b_dev })
}
