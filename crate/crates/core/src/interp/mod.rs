//! Interpolation of a finite cyclic group `{u, q, .., q^{p−1}}` by the
//! one-parameter unitary group `m(θ) = Σ_j m_j(θ) q^j`.
//!
//! `m(2πj/p) = q^j`, `m(θ₁)m(θ₂) = m(θ₁+θ₂)`, and `m(−θ) = m(θ)†`. When `q`
//! has unit line sums so does every `m(θ)`.

mod coefficients;

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance, C64, I, ONE};
use crate::perm::Permutation;

pub use coefficients::{
    coefficient_sum, cyclic_convolution, lagrange_coefficients, root_of_unity, CoefficientVector,
    Formula,
};

/// Default search bound for [`CyclicSubgroup::detect`]; covers `L(12) = 60`.
pub const DEFAULT_P_MAX: usize = 64;

/// Tolerance on `||q^p − u||_F` for accepting `p` as the order.
pub const ORDER_TOLERANCE: f64 = 1e-8;

/// Proper-divisor powers must stay at least this far from `u`.
pub const ORDER_GUARD: f64 = 1e-4;

/// A unitary `q` of verified finite order `p`, with cached powers.
#[derive(Debug, Clone)]
pub struct CyclicSubgroup {
    q: Matrix,
    powers: Vec<Matrix>,
}

impl CyclicSubgroup {
    /// Finds the smallest `p <= p_max` with `||q^p − u||_F <= 1e-8`.
    ///
    /// `q` must be unitary at `tol`. The detected order is rejected if some
    /// proper divisor `d` of `p` already has `||q^d − u||_F <= 1e-4`, which
    /// indicates a near-finite-order input.
    pub fn detect(q: Matrix, p_max: usize, tol: Tolerance) -> Result<Self> {
        let defect = q.unitarity_defect();
        if defect > tol.eps() {
            return Err(Error::NotUnitary { distance: defect });
        }
        let identity = Matrix::identity(q.n());
        let mut powers = vec![identity.clone()];
        let mut distances = Vec::with_capacity(p_max);
        for p in 1..=p_max {
            let next = q.mat_mul(powers.last().expect("non-empty"))?;
            let distance = next.frobenius_distance(&identity)?;
            distances.push(distance);
            if distance <= ORDER_TOLERANCE {
                divisor_guard(p, &distances)?;
                return Ok(CyclicSubgroup { q, powers });
            }
            powers.push(next);
        }
        Err(Error::OrderNotDetected { p_max })
    }

    /// The cyclic group generated by a permutation matrix.
    pub fn from_permutation(perm: &Permutation) -> Result<Self> {
        let order = usize::try_from(perm.order())
            .map_err(|_| Error::InvalidArgument("permutation order does not fit usize".into()))?;
        Self::detect(perm.to_matrix(), order, Tolerance::DEFAULT)
    }

    pub fn q(&self) -> &Matrix {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn dim(&self) -> usize {
        self.q.n()
    }

    /// `[q^0, q^1, .., q^{p−1}]`.
    pub fn powers(&self) -> &[Matrix] {
        &self.powers
    }

    /// `q^j` for any integer `j`.
    pub fn power(&self, j: i64) -> &Matrix {
        &self.powers[j.rem_euclid(self.order() as i64) as usize]
    }

    /// `ω = e^{i2π/p}`.
    pub fn omega(&self) -> C64 {
        root_of_unity(1, self.order())
    }

    pub fn coefficients(&self, theta: f64, formula: Formula) -> CoefficientVector {
        lagrange_coefficients(self.order(), theta, formula).expect("finite theta, p >= 1")
    }
}

/// `distances[k − 1] = ||q^k − u||_F`; every proper divisor of `order` must
/// stay further than [`ORDER_GUARD`] from the identity.
fn divisor_guard(order: usize, distances: &[f64]) -> Result<()> {
    match (1..order)
        .filter(|&d| order.is_multiple_of(d))
        .find(|&d| distances[d - 1] <= ORDER_GUARD)
    {
        Some(divisor) => Err(Error::AmbiguousOrder {
            order,
            divisor,
            distance: distances[divisor - 1],
        }),
        None => Ok(()),
    }
}

/// `θ ↦ m(θ)` for one cyclic subgroup.
#[derive(Debug, Clone)]
pub struct InterpolationCurve {
    subgroup: CyclicSubgroup,
}

impl InterpolationCurve {
    pub fn new(subgroup: CyclicSubgroup) -> Self {
        InterpolationCurve { subgroup }
    }

    pub fn from_permutation(perm: &Permutation) -> Result<Self> {
        CyclicSubgroup::from_permutation(perm).map(Self::new)
    }

    pub fn subgroup(&self) -> &CyclicSubgroup {
        &self.subgroup
    }

    pub fn order(&self) -> usize {
        self.subgroup.order()
    }

    pub fn dim(&self) -> usize {
        self.subgroup.dim()
    }

    /// `m(θ)`; panics if `theta` is not finite.
    pub fn evaluate(&self, theta: f64, formula: Formula) -> Matrix {
        self.try_evaluate(theta, formula).expect("finite theta")
    }

    pub fn try_evaluate(&self, theta: f64, formula: Formula) -> Result<Matrix> {
        let c = lagrange_coefficients(self.order(), theta, formula)?;
        Matrix::linear_combination(&c.coeffs, self.subgroup.powers())
    }

    /// `(p−1)/2 · u + Σ_{j≠0} ω^j/(1−ω^j) · q^j`.
    pub fn generator_closed_form(&self) -> Matrix {
        let p = self.order();
        let coeffs: Vec<C64> = (0..p)
            .map(|j| {
                if j == 0 {
                    C64::new((p as f64 - 1.0) / 2.0, 0.0)
                } else {
                    let w = root_of_unity(j as i64, p);
                    w / (ONE - w)
                }
            })
            .collect();
        Matrix::linear_combination(&coeffs, self.subgroup.powers()).expect("matching powers")
    }

    /// `(1/p) Σ_j q^j Σ_r r ω^{−rj}`.
    pub fn generator_fourier_form(&self) -> Matrix {
        let p = self.order();
        let coeffs: Vec<C64> = (0..p)
            .map(|j| {
                (0..p)
                    .map(|r| r as f64 * root_of_unity(-((r * j) as i64), p))
                    .sum::<C64>()
                    / p as f64
            })
            .collect();
        Matrix::linear_combination(&coeffs, self.subgroup.powers()).expect("matching powers")
    }

    /// Central difference `(m(ε) − m(−ε)) / (2iε)`, for `0 < ε <= 1e-3`.
    pub fn finite_difference_generator(&self, eps: f64) -> Result<Matrix> {
        if !(eps > 0.0 && eps <= 1e-3) {
            return Err(Error::InvalidArgument(format!(
                "finite-difference step must satisfy 0 < eps <= 1e-3, got {eps}"
            )));
        }
        let plus = self.evaluate(eps, Formula::Fourier);
        let minus = self.evaluate(-eps, Formula::Fourier);
        Ok(plus.sub(&minus)?.scale(ONE / (2.0 * I * eps)))
    }

    /// `2πj/p` for `j` in `0..p`.
    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let p = self.order();
        (0..p).map(move |j| TAU * j as f64 / p as f64)
    }
}
