//! Named gates and curves, all built through the generic engine.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::interp::{CyclicSubgroup, Formula, InterpolationCurve, DEFAULT_P_MAX};
use crate::linalg::{Matrix, Tolerance};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub enum GateKind {
    Matrix(Matrix),
    Curve(InterpolationCurve),
}

#[derive(Debug, Clone)]
pub struct NamedGate {
    pub name: &'static str,
    pub kind: GateKind,
    pub provenance: &'static str,
}

impl NamedGate {
    /// The curve through this entry: its own curve, or the curve seeded by
    /// the matrix.
    pub fn curve(&self) -> Result<InterpolationCurve> {
        match &self.kind {
            GateKind::Curve(c) => Ok(c.clone()),
            GateKind::Matrix(m) => {
                CyclicSubgroup::detect(m.clone(), DEFAULT_P_MAX, Tolerance::DEFAULT)
                    .map(InterpolationCurve::new)
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            GateKind::Matrix(_) => "matrix",
            GateKind::Curve(_) => "curve",
        }
    }
}

/// Catalog names in listing order.
pub const NAMES: [&str; 9] = [
    "negator",
    "p3-3cycle",
    "p4-4cycle",
    "q-2cycle",
    "v-gate",
    "not",
    "p3-2cycle-a",
    "p3-2cycle-b",
    "p3-2cycle-c",
];

fn perm(image: &[usize]) -> Permutation {
    Permutation::new(image.to_vec()).expect("catalog permutations are valid")
}

fn curve_of(image: &[usize]) -> InterpolationCurve {
    InterpolationCurve::from_permutation(&perm(image)).expect("permutation orders are exact")
}

/// 2x2 curve from IDENTITY (θ = 0) to NOT (θ = π).
pub fn negator_curve() -> InterpolationCurve {
    curve_of(&[1, 0])
}

/// Curve through the 3-cycle `(0 1 0 / 0 0 1 / 1 0 0)` of P(3).
pub fn p3_threecycle_curve() -> InterpolationCurve {
    curve_of(&[1, 2, 0])
}

/// Curve through the 4-cycle `(0 1 0 0 / 0 0 1 0 / 0 0 0 1 / 1 0 0 0)` of P(4).
pub fn p4_fourcycle_curve() -> InterpolationCurve {
    curve_of(&[1, 2, 3, 0])
}

/// Curve through `Q = q²` of the 4-cycle, seen as a 2-cycle `{u, Q}`.
pub fn q_twocycle_curve() -> InterpolationCurve {
    let q = p4_fourcycle_curve().subgroup().power(2).clone();
    CyclicSubgroup::detect(q, DEFAULT_P_MAX, Tolerance::DEFAULT)
        .map(InterpolationCurve::new)
        .expect("Q is an involution")
}

/// The NOT gate.
pub fn not_gate() -> Matrix {
    perm(&[1, 0]).to_matrix()
}

/// Square root of NOT: the NEGATOR curve at `θ = π/2`.
pub fn v_gate() -> Matrix {
    negator_curve().evaluate(FRAC_PI_2, Formula::Fourier)
}

/// The three transposition curves of P(3), in the order
/// `[0,2,1]`, `[1,0,2]`, `[2,1,0]`.
pub fn p3_twocycle_curves() -> [InterpolationCurve; 3] {
    [
        curve_of(&[0, 2, 1]),
        curve_of(&[1, 0, 2]),
        curve_of(&[2, 1, 0]),
    ]
}

/// Distance between two interpolations of the same pair `{u, Q}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonUniqueness {
    pub theta: f64,
    pub distance: f64,
}

/// `||m(θ) − M(θ)||_F` for the 4-cycle curve `m` and the 2-cycle curve `M`.
pub fn interpolation_gap(theta: f64) -> NonUniqueness {
    let m = p4_fourcycle_curve().evaluate(theta, Formula::Fourier);
    let big_m = q_twocycle_curve().evaluate(theta, Formula::Fourier);
    NonUniqueness {
        theta,
        distance: m.frobenius_distance(&big_m).expect("both 4x4"),
    }
}

/// Both curves pass through `u` and `Q` (at θ = 0 and π) but differ at π/2.
pub fn nonuniqueness_report() -> NonUniqueness {
    interpolation_gap(FRAC_PI_2)
}

/// Every catalog entry in [`NAMES`] order.
pub fn catalog() -> Vec<NamedGate> {
    let [a, b, c] = p3_twocycle_curves();
    vec![
        NamedGate {
            name: "negator",
            kind: GateKind::Curve(negator_curve()),
            provenance: "2x2 interpolation of IDENTITY and NOT (p = 2)",
        },
        NamedGate {
            name: "p3-3cycle",
            kind: GateKind::Curve(p3_threecycle_curve()),
            provenance: "3x3 interpolation of the 3-cycle 1,2,0 (p = 3)",
        },
        NamedGate {
            name: "p4-4cycle",
            kind: GateKind::Curve(p4_fourcycle_curve()),
            provenance: "4x4 interpolation of the 4-cycle 1,2,3,0 (p = 4)",
        },
        NamedGate {
            name: "q-2cycle",
            kind: GateKind::Curve(q_twocycle_curve()),
            provenance: "4x4 interpolation of Q = 2,3,0,1 as a non-maximal 2-cycle (p = 2)",
        },
        NamedGate {
            name: "v-gate",
            kind: GateKind::Matrix(v_gate()),
            provenance: "square root of NOT, the negator curve at theta = pi/2 (order 4)",
        },
        NamedGate {
            name: "not",
            kind: GateKind::Matrix(not_gate()),
            provenance: "2x2 permutation matrix 1,0",
        },
        NamedGate {
            name: "p3-2cycle-a",
            kind: GateKind::Curve(a),
            provenance: "3x3 interpolation of the transposition 0,2,1 (p = 2)",
        },
        NamedGate {
            name: "p3-2cycle-b",
            kind: GateKind::Curve(b),
            provenance: "3x3 interpolation of the transposition 1,0,2 (p = 2)",
        },
        NamedGate {
            name: "p3-2cycle-c",
            kind: GateKind::Curve(c),
            provenance: "3x3 interpolation of the transposition 2,1,0 (p = 2)",
        },
    ]
}

pub fn lookup(name: &str) -> Result<NamedGate> {
    catalog()
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::UnknownGate(name.to_string()))
}
