//! Wall's transformation: Schur parameters `γ_k` to the real pairs `(g_k, r_k)`
//! and back, and the Cayley transform linking the disc and the half-plane.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{imag_unit, real, Real};
use crate::schur::SchurParams;
use crate::tol;

/// Wall parameters `g_1..g_N`, `r_1..r_N` with `0 < g_k < 1`.
///
/// Index 0 of the stored vectors holds `g_1`, `r_1`. The convention
/// `g_0 = r_0 = 0` is available through [`WallParams::g_at`] and [`WallParams::r_at`].
#[derive(Clone, Debug, PartialEq)]
pub struct WallParams<T> {
    g: Vec<T>,
    r: Vec<T>,
}

impl<T: Real> WallParams<T> {
    pub fn new(g: Vec<T>, r: Vec<T>) -> Result<Self> {
        if g.len() != r.len() {
            return Err(Error::InvalidWallParams {
                index: g.len().min(r.len()),
                reason: format!("g has {} entries but r has {}", g.len(), r.len()),
            });
        }
        for (k, (&gk, &rk)) in g.iter().zip(&r).enumerate() {
            if !(gk > T::zero() && gk < T::one()) {
                return Err(Error::InvalidWallParams {
                    index: k + 1,
                    reason: format!("g = {gk} outside (0, 1)"),
                });
            }
            if !rk.is_finite() {
                return Err(Error::InvalidWallParams {
                    index: k + 1,
                    reason: format!("r = {rk} not finite"),
                });
            }
        }
        Ok(WallParams { g, r })
    }

    /// `g_k = 1/2`, `r_k = 0`: the image of `γ ≡ 0`.
    pub fn reference(n: usize) -> Self {
        WallParams {
            g: vec![T::lit(0.5); n],
            r: vec![T::zero(); n],
        }
    }

    pub fn g(&self) -> &[T] {
        &self.g
    }

    pub fn r(&self) -> &[T] {
        &self.r
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    /// `g_k` for `k = 0..=N`, with `g_0 = 0`.
    pub fn g_at(&self, k: usize) -> T {
        if k == 0 {
            T::zero()
        } else {
            self.g[k - 1]
        }
    }

    /// `r_k` for `k = 0..=N`, with `r_0 = 0`.
    pub fn r_at(&self, k: usize) -> T {
        if k == 0 {
            T::zero()
        } else {
            self.r[k - 1]
        }
    }

    pub fn prefix(&self, n: usize) -> Self {
        let n = n.min(self.len());
        WallParams {
            g: self.g[..n].to_vec(),
            r: self.r[..n].to_vec(),
        }
    }

    pub fn max_diff(&self, other: &Self) -> T {
        self.g
            .iter()
            .zip(&other.g)
            .chain(self.r.iter().zip(&other.r))
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
    }
}

/// Unimodular sequence `δ_0 = 1, δ_1, ..., δ_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaSeq<T> {
    delta: Vec<Complex<T>>,
}

impl<T: Real> DeltaSeq<T> {
    pub fn delta(&self) -> &[Complex<T>] {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    /// Largest deviation of `|δ_k|` from one.
    pub fn max_unimodular_defect(&self) -> T {
        self.delta
            .iter()
            .fold(T::zero(), |m, d| m.max((d.norm() - T::one()).abs()))
    }
}

/// `δ_0 = 1`, `δ_k = (conj(γ_{k-1}) - δ_{k-1}) / (1 - γ_{k-1} δ_{k-1})`.
///
/// Each iterate is renormalized to unit modulus. The result has `len(p) + 1`
/// entries.
pub fn delta_sequence<T: Real>(p: &SchurParams<T>) -> Result<DeltaSeq<T>> {
    let mut delta = Vec::with_capacity(p.len() + 1);
    let mut d = Complex::<T>::one();
    delta.push(d);
    for (step, &g) in p.gamma().iter().enumerate() {
        let den = Complex::<T>::one() - g * d;
        if den.norm() < T::lit(tol::POLE) {
            return Err(Error::DivisionNearZero { step });
        }
        let next = (g.conj() - d) / den;
        d = next / next.norm();
        delta.push(d);
    }
    Ok(DeltaSeq { delta })
}

/// Forward Wall map `γ -> (g, r)` with `u_k = 1 - γ_k δ_k`,
/// `g_{k+1} = |u_k|^2 / (2 Re u_k)` and `r_{k+1} = -Im u_k / Re u_k`.
pub fn wall_forward<T: Real>(p: &SchurParams<T>) -> Result<WallParams<T>> {
    let delta = delta_sequence(p)?;
    let mut g = Vec::with_capacity(p.len());
    let mut r = Vec::with_capacity(p.len());
    for (step, (&gamma, &d)) in p.gamma().iter().zip(delta.delta()).enumerate() {
        let u = Complex::<T>::one() - gamma * d;
        // Re u > 0 whenever |γ| < 1 and |δ| = 1.
        if u.re <= T::zero() {
            return Err(Error::DivisionNearZero { step });
        }
        g.push(u.norm_sqr() / (T::lit(2.0) * u.re));
        r.push(-u.im / u.re);
    }
    WallParams::new(g, r)
}

/// Inverse Wall map `(g, r) -> γ`.
///
/// With `u_k = 2 g_{k+1} (1 - i r_{k+1}) / (1 + r_{k+1}^2)`, the forward
/// recursion gives `δ_{k+1} = -δ_k conj(u_k) / u_k`, so `γ_k = (1 - u_k) conj(δ_k)`.
/// Unrolled, `γ_{k+1} = (-1)^{k+1} (u_0...u_k) / conj(u_0...u_k) (1 - u_{k+1})`.
pub fn wall_inverse<T: Real>(w: &WallParams<T>) -> Result<SchurParams<T>> {
    let two = T::lit(2.0);
    let mut gamma = Vec::with_capacity(w.len());
    let mut d = Complex::<T>::one();
    for (k, (&g, &r)) in w.g().iter().zip(w.r()).enumerate() {
        if !(g > T::zero() && g < T::one()) {
            return Err(Error::InvalidWallParams {
                index: k + 1,
                reason: format!("g = {g} outside (0, 1)"),
            });
        }
        let scale = two * g / (T::one() + r * r);
        let u = Complex::new(scale, -scale * r);
        gamma.push((Complex::<T>::one() - u) * d.conj());
        let next = -d * u.conj() / u;
        d = next / next.norm();
    }
    SchurParams::new(gamma)
}

/// Cayley transform `z = (i - λ) / (i + λ)`, mapping the upper half-plane onto the disc.
pub fn cayley<T: Real>(lambda: Complex<T>) -> Result<Complex<T>> {
    let i = imag_unit::<T>();
    let den = i + lambda;
    if den.is_zero() || den.norm() < T::lit(tol::POLE) {
        return Err(Error::PoleAtInput(format!("lambda = {lambda}")));
    }
    Ok((i - lambda) / den)
}

/// Inverse Cayley transform `λ = i (1 - z) / (1 + z)`.
pub fn cayley_inverse<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let den = real(T::one()) + z;
    if den.is_zero() || den.norm() < T::lit(tol::POLE) {
        return Err(Error::PoleAtInput(format!("z = {z}")));
    }
    Ok(imag_unit::<T>() * (real(T::one()) - z) / den)
}
