//! Truncated power series at the origin with explicit order bookkeeping.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::PolyC;
use crate::scalar::Real;

/// Coefficients `c_0, ..., c_order` of a power series known through `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorSeries<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> TaylorSeries<T> {
    /// A series must carry at least the constant term.
    pub fn new(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "series needs at least one coefficient".into(),
            ));
        }
        Ok(TaylorSeries { coeffs })
    }

    pub fn zeros(order: usize) -> Self {
        TaylorSeries {
            coeffs: vec![Complex::zero(); order + 1],
        }
    }

    /// The constant `c` known through `z^order`.
    pub fn constant(c: Complex<T>, order: usize) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = c;
        s
    }

    /// Taylor coefficients of a polynomial, padded or truncated to `order`.
    pub fn from_poly(p: &PolyC<T>, order: usize) -> Self {
        TaylorSeries {
            coeffs: (0..=order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TaylorSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Partial sum evaluated at `z`.
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, &c| acc * z + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TaylorSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k] + other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TaylorSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k] - other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        TaylorSeries {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn add_constant(&self, c: Complex<T>) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(Complex::zero(), |acc, j| {
                    acc + self.coeffs[j] * other.coeffs[k - j]
                })
            })
            .collect();
        TaylorSeries { coeffs }
    }

    /// Quotient `self / den` at the common order. The constant term of `den`
    /// must not vanish (threshold `1e-14` in modulus).
    pub fn div(&self, den: &Self) -> Result<Self> {
        let d0 = den.coeffs[0];
        if d0.norm() < T::lit(1e-14) {
            return Err(Error::DivisionNearZero { step: 0 });
        }
        let order = self.order().min(den.order());
        let mut q: Vec<Complex<T>> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let acc = (1..=k).fold(self.coeffs[k], |acc, j| acc - den.coeffs[j] * q[k - j]);
            q.push(acc / d0);
        }
        Ok(TaylorSeries { coeffs: q })
    }

    /// Multiplication by `z`; the result is known one order further.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex::zero());
        coeffs.extend_from_slice(&self.coeffs);
        TaylorSeries { coeffs }
    }

    /// Division by `z`, dropping the constant term; loses one order.
    /// Returns `None` for a series of order 0.
    pub fn div_z(&self) -> Option<Self> {
        if self.order() == 0 {
            return None;
        }
        Some(TaylorSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Largest coefficient distance over the common order.
    pub fn max_diff(&self, other: &Self) -> T {
        let order = self.order().min(other.order());
        (0..=order).fold(T::zero(), |m, k| {
            m.max((self.coeffs[k] - other.coeffs[k]).norm())
        })
    }
}
