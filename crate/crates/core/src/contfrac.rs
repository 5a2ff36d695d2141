//! Continued fractions on both sides of the Cayley transform and the
//! transfer-matrix polynomials behind their approximants.
//!
//! All fractions are evaluated by backward recurrence from a declared tail.
//! Depth counts the number of parameters consumed: depth `d` of a Schur
//! fraction uses `γ_0..γ_{d-1}`, depth `d` of a half-plane fraction uses
//! `g_1..g_d` and `r_1..r_d`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyC, PolyR, Side, TransferMatrix2};
use crate::scalar::{imag_unit, real, Real};
use crate::schur::{wall_product, SchurParams};
use crate::tol;
use crate::wall::{delta_sequence, WallParams};

/// Value placed below the last retained level of a fraction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tail<T> {
    Zero,
    Given(Complex<T>),
}

impl<T: Real> Tail<T> {
    fn value(self) -> Complex<T> {
        match self {
            Tail::Zero => Complex::zero(),
            Tail::Given(v) => v,
        }
    }
}

/// A finite truncation of a continued fraction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CFApproximant<T> {
    pub value: Complex<T>,
    pub depth: usize,
    pub tail: Tail<T>,
}

fn check_pole<T: Real>(den: Complex<T>, level: usize) -> Result<()> {
    if den.norm() < T::lit(tol::POLE) || !den.norm().is_finite() {
        Err(Error::PoleEncountered { level })
    } else {
        Ok(())
    }
}

fn check_disc<T: Real>(z: Complex<T>) -> Result<()> {
    if z.norm() < T::one() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "|z| = {} is not inside the unit disc",
            z.norm()
        )))
    }
}

fn check_upper<T: Real>(lambda: Complex<T>) -> Result<()> {
    if lambda.im > T::zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "lambda = {lambda} is not in the upper half-plane"
        )))
    }
}

fn check_depth(depth: usize, available: usize) -> Result<()> {
    if depth > available {
        Err(Error::InsufficientOrder {
            requested: depth,
            order: available,
        })
    } else {
        Ok(())
    }
}

/// Schur fraction `γ_0 + (1-|γ_0|^2) z / (conj(γ_0) z + 1/f_1)`, i.e. the
/// Schur steps `f_k = (γ_k + z f_{k+1}) / (1 + conj(γ_k) z f_{k+1})` unwound
/// from `f_depth = tail`.
pub fn eval_wall_fraction<T: Real>(
    p: &SchurParams<T>,
    z: Complex<T>,
    depth: usize,
    tail: Tail<T>,
) -> Result<CFApproximant<T>> {
    check_disc(z)?;
    check_depth(depth, p.len())?;
    let mut f = tail.value();
    for (level, &g) in p.gamma()[..depth].iter().enumerate().rev() {
        let zf = z * f;
        let den = Complex::<T>::one() + g.conj() * zf;
        check_pole(den, level)?;
        f = (g + zf) / den;
    }
    Ok(CFApproximant {
        value: f,
        depth,
        tail,
    })
}

/// `(1 + i r) - (1 - i r) z`
fn disc_denominator<T: Real>(r: T, z: Complex<T>) -> Complex<T> {
    Complex::new(T::one(), r) - Complex::new(T::one(), -r) * z
}

/// `h_0 = (1 - f) / (1 + z f)` through
/// `h_k = 2 g_{k+1} / ((1 + i r_{k+1}) - (1 - i r_{k+1}) z + 2 (1 - g_{k+1}) z h_{k+1})`
/// with `h_depth = tail`.
pub fn eval_h0_fraction<T: Real>(
    w: &WallParams<T>,
    z: Complex<T>,
    depth: usize,
    tail: Tail<T>,
) -> Result<CFApproximant<T>> {
    check_disc(z)?;
    check_depth(depth, w.len())?;
    let two = T::lit(2.0);
    let mut h = tail.value();
    for level in (0..depth).rev() {
        let (g, r) = (w.g()[level], w.r()[level]);
        let den = disc_denominator(r, z) + z * h * (two * (T::one() - g));
        check_pole(den, level + 1)?;
        h = real(two * g) / den;
    }
    Ok(CFApproximant {
        value: h,
        depth,
        tail,
    })
}

/// Carathéodory fraction `F = (1 + z) / (1 - z + 2 z h_0)` with `h_0` from
/// [`eval_h0_fraction`].
pub fn eval_caratheodory_fraction<T: Real>(
    w: &WallParams<T>,
    z: Complex<T>,
    depth: usize,
    tail: Tail<T>,
) -> Result<CFApproximant<T>> {
    let h0 = eval_h0_fraction(w, z, depth, tail)?.value;
    let one = real(T::one());
    let den = one - z + z * h0 * T::lit(2.0);
    check_pole(den, 0)?;
    Ok(CFApproximant {
        value: (one + z) / den,
        depth,
        tail,
    })
}

/// Half-plane fraction
/// `-1/λ - g_1(λ²+1)/(λ - r_1) - (1-g_1) g_2 (λ²+1)/(λ - r_2) - ...`.
///
/// A given tail `H` enters the last level as `λ - r_d + (1 - g_d)(i - λ) H`.
/// At `λ = i` the value is `i` for every depth and tail.
pub fn eval_nevanlinna_fraction<T: Real>(
    w: &WallParams<T>,
    lambda: Complex<T>,
    depth: usize,
    tail: Tail<T>,
) -> Result<CFApproximant<T>> {
    check_upper(lambda)?;
    check_depth(depth, w.len())?;
    let i = imag_unit::<T>();
    let lsq1 = lambda * lambda + T::one();
    let mut t = lambda - w.r_at(depth);
    if let Tail::Given(h) = tail {
        t += (i - lambda) * h * (T::one() - w.g_at(depth));
    }
    for level in (0..depth).rev() {
        check_pole(t, level + 1)?;
        let num = lsq1 * ((T::one() - w.g_at(level)) * w.g_at(level + 1));
        t = lambda - w.r_at(level) - num / t;
    }
    check_pole(t, 0)?;
    Ok(CFApproximant {
        value: -t.inv(),
        depth,
        tail,
    })
}

/// `𝒜_k`, `ℬ_k` for one index `k ≥ -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ABPair<T> {
    pub index: isize,
    pub a: PolyR<T>,
    pub b: PolyR<T>,
}

/// Real-coefficient recurrence
/// `X_k = (λ - r_k) X_{k-1} - (1 - g_{k-1}) g_k (λ² + 1) X_{k-2}`
/// from `𝒜_{-1} = 0, 𝒜_0 = -1, ℬ_{-1} = 1, ℬ_0 = λ`. Returns indices `-1..=n`.
pub fn ab_polynomials<T: Real>(w: &WallParams<T>, n: usize) -> Result<Vec<ABPair<T>>> {
    check_depth(n, w.len())?;
    let lsq1 = Poly::new(vec![T::one(), T::zero(), T::one()]);
    let mut out = vec![
        ABPair {
            index: -1,
            a: Poly::zero(),
            b: Poly::constant(T::one()),
        },
        ABPair {
            index: 0,
            a: Poly::constant(-T::one()),
            b: Poly::x(),
        },
    ];
    for k in 1..=n {
        let lin = Poly::linear(-w.r_at(k), T::one());
        let c = lsq1.scale(&((T::one() - w.g_at(k - 1)) * w.g_at(k)));
        let (p2, p1) = (&out[k - 1], &out[k]);
        let a = &(&lin * &p1.a) - &(&c * &p2.a);
        let b = &(&lin * &p1.b) - &(&c * &p2.b);
        out.push(ABPair {
            index: k as isize,
            a,
            b,
        });
    }
    Ok(out)
}

/// `(𝒜_{n-1}(λ), 𝒜_n(λ), ℬ_{n-1}(λ), ℬ_n(λ))` by the value recurrence.
pub fn ab_values<T: Real>(
    w: &WallParams<T>,
    n: usize,
    lambda: Complex<T>,
) -> Result<[Complex<T>; 4]> {
    check_depth(n, w.len())?;
    let lsq1 = lambda * lambda + T::one();
    let (mut a_prev, mut a) = (Complex::zero(), -Complex::one());
    let (mut b_prev, mut b) = (Complex::one(), lambda);
    for k in 1..=n {
        let lin = lambda - w.r_at(k);
        let c = lsq1 * ((T::one() - w.g_at(k - 1)) * w.g_at(k));
        let a_next = lin * a - c * a_prev;
        let b_next = lin * b - c * b_prev;
        (a_prev, a, b_prev, b) = (a, a_next, b, b_next);
    }
    Ok([a_prev, a, b_prev, b])
}

/// All approximants `𝒜_d / ℬ_d` for `d = 0..=max_depth` from one forward pass.
///
/// The running pairs are rescaled each step, which leaves the ratios intact.
/// Used for convergence diagnostics.
pub fn nevanlinna_approximants<T: Real>(
    w: &WallParams<T>,
    lambda: Complex<T>,
    max_depth: usize,
) -> Result<Vec<Complex<T>>> {
    check_upper(lambda)?;
    check_depth(max_depth, w.len())?;
    let lsq1 = lambda * lambda + T::one();
    let (mut a_prev, mut a) = (Complex::zero(), -Complex::<T>::one());
    let (mut b_prev, mut b) = (Complex::one(), lambda);
    let mut out = Vec::with_capacity(max_depth + 1);
    for k in 0..=max_depth {
        if k > 0 {
            let lin = lambda - w.r_at(k);
            let c = lsq1 * ((T::one() - w.g_at(k - 1)) * w.g_at(k));
            let a_next = lin * a - c * a_prev;
            let b_next = lin * b - c * b_prev;
            let s = b_next.norm().max(T::min_positive_value());
            (a_prev, a, b_prev, b) = (a / s, a_next / s, b / s, b_next / s);
        }
        check_pole(b, k)?;
        out.push(a / b);
    }
    Ok(out)
}

/// Parametrization of all Nevanlinna functions with the first `n + 1` Taylor
/// coefficients at `i` fixed by `w`:
/// `φ = [(1-g_n) 𝒜_{n-1} (1/τ + λ) - 𝒜_n] / [(1-g_n) ℬ_{n-1} (1/τ + λ) - ℬ_n]`.
pub fn nevanlinna_solution_family<T: Real>(
    w: &WallParams<T>,
    n: usize,
    lambda: Complex<T>,
    tau: Complex<T>,
) -> Result<Complex<T>> {
    check_upper(lambda)?;
    if tau.is_zero() {
        return Err(Error::InvalidArgument("tau must be nonzero".into()));
    }
    let [a_prev, a, b_prev, b] = ab_values(w, n, lambda)?;
    let s = (tau.inv() + lambda) * (T::one() - w.g_at(n));
    let den = b_prev * s - b;
    check_pole(den, n)?;
    Ok((a_prev * s - a) / den)
}

/// Baseline J-fraction `-1/(λ - a_0 - b_0²/(λ - a_1 - b_1²/(...)))` with zero tail.
/// Depth `d` uses `a_0..a_{d-1}` and `b_0..b_{d-2}`; depth 0 gives 0.
pub fn eval_j_fraction<T: Real>(
    a: &[T],
    b: &[T],
    lambda: Complex<T>,
    depth: usize,
) -> Result<Complex<T>> {
    if lambda.im == T::zero() {
        return Err(Error::RealAxisInput(format!("lambda = {lambda}")));
    }
    check_depth(depth, a.len())?;
    if depth > 0 {
        check_depth(depth - 1, b.len())?;
    } else {
        return Ok(Complex::zero());
    }
    let mut t = lambda - a[depth - 1];
    for j in (0..depth - 1).rev() {
        check_pole(t, j + 1)?;
        t = lambda - a[j] - real(b[j] * b[j]) / t;
    }
    check_pole(t, 0)?;
    Ok(-t.inv())
}

/// `𝒲_0 = [[0, -1], [i - λ, λ]]`.
pub fn halfplane_initial_matrix<T: Real>() -> TransferMatrix2<Complex<T>> {
    let i = imag_unit::<T>();
    TransferMatrix2::new(
        [
            [Poly::zero(), Poly::constant(-Complex::one())],
            [Poly::linear(i, -Complex::one()), Poly::x()],
        ],
        Side::HalfPlane,
    )
}

/// `𝒲_k = [[0, g_k (i + λ)], [(1 - g_k)(i - λ), λ - r_k]]`, `k ≥ 1`.
pub fn halfplane_step_matrix<T: Real>(g: T, r: T) -> TransferMatrix2<Complex<T>> {
    let i = imag_unit::<T>();
    let one = Complex::<T>::one();
    TransferMatrix2::new(
        [
            [Poly::zero(), Poly::linear(i * g, one * g)],
            [
                Poly::linear(i * (T::one() - g), -one * (T::one() - g)),
                Poly::linear(real(-r), one),
            ],
        ],
        Side::HalfPlane,
    )
}

/// `𝒲_{[0,n]} = 𝒲_0 𝒲_1 ... 𝒲_n`, whose second column is `(𝒜_n, ℬ_n)` and whose
/// first column is `(1 - g_n)(i - λ) (𝒜_{n-1}, ℬ_{n-1})`.
pub fn transfer_matrices_halfplane<T: Real>(
    w: &WallParams<T>,
    n: usize,
) -> Result<TransferMatrix2<Complex<T>>> {
    check_depth(n, w.len())?;
    Ok((1..=n).fold(halfplane_initial_matrix(), |acc, k| {
        acc.mul(&halfplane_step_matrix(w.g_at(k), w.r_at(k)))
    }))
}

/// Disc-side transfer matrix `W_n` with `F = (w11 + w12 h_{n+1}) / (w21 + w22 h_{n+1})`.
///
/// Built as `[[0, 1+z], [2z, 1-z]] · [[-1, 1], [z, 1]] · [[z B_n^*, A_n], [z A_n^*, B_n]] · R`
/// where `R = [[-1, 1], [-δ_{n+1}, -δ_{n+1} z]]` is the inverse of the Wall ansatz
/// matrix up to a scalar, with its columns ordered so that the column acting on
/// `h_{n+1}` comes second. Needs `γ_0..γ_n`.
pub fn caratheodory_transfer<T: Real>(
    p: &SchurParams<T>,
    n: usize,
) -> Result<TransferMatrix2<Complex<T>>> {
    check_depth(n + 1, p.len())?;
    let prefix = p.prefix(n + 1);
    let delta = delta_sequence(&prefix)?.delta()[n + 1];
    let one = Complex::<T>::one();
    let z = Poly::<Complex<T>>::x();
    let one_plus_z = Poly::linear(one, one);
    let left = TransferMatrix2::new(
        [
            [&z * &one_plus_z, one_plus_z.clone()],
            [-&(&z * &one_plus_z), one_plus_z],
        ],
        Side::Disc,
    );
    let right = TransferMatrix2::new(
        [
            [Poly::constant(-one), Poly::constant(one)],
            [Poly::constant(-delta), Poly::monomial(-delta, 1)],
        ],
        Side::Disc,
    );
    Ok(left.mul(&wall_product(&prefix)).mul(&right))
}

/// Convenience: `𝒜_n / ℬ_n` evaluated from the coefficient form.
pub fn ab_ratio<T: Real>(pair: &ABPair<T>, lambda: Complex<T>) -> Result<Complex<T>> {
    let den = pair.b.eval_complex(lambda);
    check_pole(den, pair.index.max(0) as usize)?;
    Ok(pair.a.eval_complex(lambda) / den)
}

/// Complex-coefficient copy of a real polynomial, for comparison with matrix entries.
pub fn complexify<T: Real>(p: &PolyR<T>) -> PolyC<T> {
    p.to_complex()
}
