//! JSON wire formats. Complex numbers travel as `[re, im]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::schur::SchurParams;
use crate::series::TaylorSeries;
use crate::wall::WallParams;

fn to_pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn from_pairs(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchurWire {
    pub gamma: Vec<[f64; 2]>,
}

impl SchurWire {
    pub fn from_params(p: &SchurParams<f64>) -> Self {
        SchurWire {
            gamma: to_pairs(p.gamma()),
        }
    }

    pub fn into_params(self) -> Result<SchurParams<f64>> {
        SchurParams::new(from_pairs(&self.gamma))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallWire {
    pub g: Vec<f64>,
    pub r: Vec<f64>,
}

impl WallWire {
    pub fn from_params(w: &WallParams<f64>) -> Self {
        WallWire {
            g: w.g().to_vec(),
            r: w.r().to_vec(),
        }
    }

    pub fn into_params(self) -> Result<WallParams<f64>> {
        WallParams::new(self.g, self.r)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesWire {
    pub coeffs: Vec<[f64; 2]>,
}

impl SeriesWire {
    pub fn from_series(s: &TaylorSeries<f64>) -> Self {
        SeriesWire {
            coeffs: to_pairs(s.coeffs()),
        }
    }

    pub fn into_series(self) -> Result<TaylorSeries<f64>> {
        TaylorSeries::new(from_pairs(&self.coeffs))
    }
}

/// Pencil diagonals given directly.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagonalsWire {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BsqWire {
    pub bsq: Vec<f64>,
}

/// Input of `eval --kind jfrac`: either Wall parameters or raw diagonals.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum JacobiInput {
    Wall(WallWire),
    Diagonals(DiagonalsWire),
}
