//! Lagrange basis coefficients `m_j(θ)` on the p-th roots of unity.
//!
//! Four algebraically equivalent evaluation routes are provided. They agree
//! to rounding and serve as cross-checks of one another.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{C64, I, ONE, ZERO};

/// Evaluation route for the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Formula {
    /// `Π_{k≠j}(x − ω^k) / Π_{k≠j}(ω^j − ω^k)`
    Direct,
    /// `(1/p) ω^j Π_{k≠j}(x − ω^k)`
    Compact,
    /// `(1/p) (x^p − 1) ω^j / (x − ω^j)`
    Barycentric,
    /// `(1/p) Σ_r ω^{−rj} x^r`
    #[default]
    Fourier,
}

impl Formula {
    pub const ALL: [Formula; 4] = [
        Formula::Direct,
        Formula::Compact,
        Formula::Barycentric,
        Formula::Fourier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Direct => "direct",
            Formula::Compact => "compact",
            Formula::Barycentric => "barycentric",
            Formula::Fourier => "fourier",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown formula `{s}` (expected direct, compact, barycentric or fourier)"
                ))
            })
    }
}

/// The `p` coefficients at one angle.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    pub theta: f64,
    pub coeffs: Vec<C64>,
}

impl CoefficientVector {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `Σ_j m_j`, identically 1.
    pub fn sum(&self) -> C64 {
        coefficient_sum(&self.coeffs)
    }

    /// `Σ_j |m_j|²`, identically 1.
    pub fn norm_sqr_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_distance(&self, other: &CoefficientVector) -> f64 {
        assert_eq!(self.order(), other.order());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

pub fn coefficient_sum(coeffs: &[C64]) -> C64 {
    coeffs.iter().sum()
}

/// `ω^k = exp(i 2π k / p)`, computed directly from `k mod p`; exact at
/// quarter turns.
pub fn root_of_unity(k: i64, p: usize) -> C64 {
    let k = k.rem_euclid(p as i64) as usize;
    if (4 * k).is_multiple_of(p) {
        return [ONE, I, -ONE, -I][4 * k / p];
    }
    C64::from_polar(1.0, TAU * k as f64 / p as f64)
}

/// `e^{iδ} − 1` without cancellation for small `δ`.
fn expm1_i(delta: f64) -> C64 {
    2.0 * I * (delta / 2.0).sin() * C64::from_polar(1.0, delta / 2.0)
}

/// Lagrange coefficients of order `p` at angle `theta` (radians).
pub fn lagrange_coefficients(p: usize, theta: f64, formula: Formula) -> Result<CoefficientVector> {
    if p == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if !theta.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "theta must be finite, got {theta}"
        )));
    }
    // every route is 2π-periodic; reducing first keeps phases small
    let reduced = theta.rem_euclid(TAU);
    let coeffs = match formula {
        Formula::Direct => direct(p, reduced),
        Formula::Compact => compact(p, reduced),
        Formula::Barycentric => barycentric(p, reduced),
        Formula::Fourier => fourier(p, reduced),
    };
    Ok(CoefficientVector { theta, coeffs })
}

fn direct(p: usize, theta: f64) -> Vec<C64> {
    let x = C64::from_polar(1.0, theta);
    let roots: Vec<C64> = (0..p as i64).map(|k| root_of_unity(k, p)).collect();
    (0..p)
        .map(|j| {
            let (mut num, mut den) = (ONE, ONE);
            for (k, &w) in roots.iter().enumerate() {
                if k != j {
                    num *= x - w;
                    den *= roots[j] - w;
                }
            }
            num / den
        })
        .collect()
}

fn compact(p: usize, theta: f64) -> Vec<C64> {
    let x = C64::from_polar(1.0, theta);
    let roots: Vec<C64> = (0..p as i64).map(|k| root_of_unity(k, p)).collect();
    (0..p)
        .map(|j| {
            let prod = roots
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .fold(ONE, |acc, (_, &w)| acc * (x - w));
            roots[j] * prod / p as f64
        })
        .collect()
}

/// With `δ_j = θ − 2πj/p`, `x − ω^j = ω^j (e^{iδ_j} − 1)` and
/// `x^p − 1 = e^{ipδ_k} − 1` for any node `k`, so
/// `m_j = (e^{ipδ_k} − 1) / (p (e^{iδ_j} − 1))`. Taking `k` as the nearest
/// node keeps both differences free of cancellation; the removable 0/0 is
/// hit only when `θ` sits exactly on node `k`.
fn barycentric(p: usize, theta: f64) -> Vec<C64> {
    let step = TAU / p as f64;
    let nearest = ((theta / step).round() as usize) % p;
    let offset = |j: usize| {
        let d = theta - j as f64 * step;
        // nearest node may be k = 0 approached from below 2π
        if d > std::f64::consts::PI {
            d - TAU
        } else {
            d
        }
    };
    let delta_k = offset(nearest);
    if (delta_k / 2.0).sin() == 0.0 {
        let mut node = vec![ZERO; p];
        node[nearest] = ONE;
        return node;
    }
    let numerator = expm1_i(p as f64 * delta_k);
    (0..p)
        .map(|j| numerator / (p as f64 * expm1_i(offset(j))))
        .collect()
}

fn fourier(p: usize, theta: f64) -> Vec<C64> {
    (0..p)
        .map(|j| {
            (0..p)
                .map(|r| {
                    let phase = r as f64 * theta - TAU * ((r * j) % p) as f64 / p as f64;
                    C64::from_polar(1.0, phase)
                })
                .sum::<C64>()
                / p as f64
        })
        .collect()
}

/// Coefficients of the product of `Σ a_m q^m` and `Σ b_m q^m` when `q^p = 1`:
/// `c_i = Σ_{m≤i} a_m b_{i−m} + Σ_{m>i} a_m b_{p+i−m}`.
pub fn cyclic_convolution(a: &[C64], b: &[C64]) -> Result<Vec<C64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let p = a.len();
    if p == 0 {
        return Err(Error::InvalidArgument(
            "convolution of empty vectors".into(),
        ));
    }
    Ok((0..p)
        .map(|i| {
            let head: C64 = (0..=i).map(|m| a[m] * b[i - m]).sum();
            let tail: C64 = (i + 1..p).map(|m| a[m] * b[p + i - m]).sum();
            head + tail
        })
        .collect())
}
