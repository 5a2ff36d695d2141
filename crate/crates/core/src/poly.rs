//! Dense univariate polynomials in ascending coefficient order, and 2×2
//! matrices of polynomials used as transfer matrices.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Num;

use crate::scalar::Real;

/// Coefficient ring for [`Poly`].
pub trait Coeff: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<C: Clone + PartialEq + Debug + Num + Neg<Output = C>> Coeff for C {}

/// Polynomial `c[0] + c[1] x + ... + c[d] x^d`.
///
/// The representation is normalized: the last stored coefficient is nonzero,
/// and the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial with complex coefficients.
pub type PolyC<T> = Poly<Complex<T>>;
/// Polynomial with real coefficients.
pub type PolyR<T> = Poly<T>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c0 + c1 x`
    pub fn linear(c0: C, c1: C) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let mut k = C::zero();
        let coeffs = self
            .coeffs
            .iter()
            .skip(1)
            .map(|c| {
                k = k.clone() + C::one();
                c.clone() * k.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by `x^k`; `None` if any of the dropped coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Real> Poly<T> {
    /// Evaluates a real-coefficient polynomial at a complex point.
    pub fn eval_complex(&self, x: Complex<T>) -> Complex<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * x + c)
    }

    pub fn to_complex(&self) -> PolyC<T> {
        self.map(|&c| Complex::new(c, T::zero()))
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }
}

impl<T: Real> Poly<Complex<T>> {
    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// Reversed polynomial `x^n conj(p(1 / conj(x)))` for a nominal degree `n`.
    ///
    /// Returns `None` when `deg p > n`.
    pub fn reversed(&self, n: usize) -> Option<Self> {
        if self.degree().is_some_and(|d| d > n) {
            return None;
        }
        let coeffs = (0..=n).rev().map(|k| self.coeff(k).conj()).collect();
        Some(Self::new(coeffs))
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.norm()))
    }

    /// Largest imaginary part modulus over the coefficients.
    pub fn max_imag(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.im.abs()))
    }

    /// Real parts of the coefficients.
    pub fn re(&self) -> Poly<T> {
        self.map(|c| c.re)
    }

    /// Coefficientwise maximum distance between two polynomials.
    pub fn max_diff(&self, other: &Self) -> T {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).fold(T::zero(), |m, k| {
            m.max((self.coeff(k) - other.coeff(k)).norm())
        })
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;

            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Which variable the entries of a [`TransferMatrix2`] are written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Disc variable `z`.
    Disc,
    /// Half-plane variable `λ`.
    HalfPlane,
}

/// 2×2 matrix of polynomials representing a product of linear fractional maps.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix2<C> {
    pub entries: [[Poly<C>; 2]; 2],
    pub side: Side,
}

impl<C: Coeff> TransferMatrix2<C> {
    pub fn new(entries: [[Poly<C>; 2]; 2], side: Side) -> Self {
        TransferMatrix2 { entries, side }
    }

    pub fn identity(side: Side) -> Self {
        let one = Poly::constant(C::one());
        Self::new([[one.clone(), Poly::zero()], [Poly::zero(), one]], side)
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly<C> {
        &self.entries[row][col]
    }

    /// Matrix product; panics if the two sides differ.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.side, rhs.side,
            "transfer matrices in different variables"
        );
        let e = &self.entries;
        let f = &rhs.entries;
        let entry = |i: usize, j: usize| &(&e[i][0] * &f[0][j]) + &(&e[i][1] * &f[1][j]);
        Self::new(
            [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
            self.side,
        )
    }

    pub fn det(&self) -> Poly<C> {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Entries evaluated at a point.
    pub fn eval(&self, x: &C) -> [[C; 2]; 2] {
        let e = &self.entries;
        [
            [e[0][0].eval(x), e[0][1].eval(x)],
            [e[1][0].eval(x), e[1][1].eval(x)],
        ]
    }
}
