//! Dense complex matrices and the tolerance-aware predicates used throughout
//! the crate.
//!
//! Entries are stored row-major. Matrices are values: every operation returns
//! a fresh matrix and nothing is mutated in place through the public API.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Absolute tolerance used by the predicates, `0 < eps < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    /// Default for unitarity and XU checks.
    pub const DEFAULT: Tolerance = Tolerance(1e-9);
    /// Exact-structure checks on small matrices.
    pub const STRUCTURAL: Tolerance = Tolerance(1e-12);

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps < 1.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Dense `n x n` complex matrix.
///
/// The same type carries unitary group elements, interpolated matrices and
/// (Hermitian) generators.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    entries: Vec<C64>,
}

impl Matrix {
    /// Builds a matrix from row-major entries. Rejects `n == 0`, a wrong entry
    /// count and non-finite values.
    pub fn from_row_major(n: usize, entries: Vec<C64>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare {
                rows: n,
                cols: entries.len().checked_div(n).unwrap_or(0),
            });
        }
        if let Some(k) = entries
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite {
                row: k / n,
                col: k % n,
            });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Self::from_row_major(n, rows.into_iter().flatten().collect())
    }

    /// Convenience for real matrices such as permutation matrices.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of dimension 0");
        let mut entries = vec![ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = ONE;
        }
        Matrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "zero matrix of dimension 0");
        Matrix {
            n,
            entries: vec![ZERO; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.n + col]
    }

    /// Row-major view of the entries.
    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.entries.chunks(self.n)
    }

    fn check_dim(&self, other: &Matrix) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Matrix product `self · other`.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                for (o, b) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(Matrix { n, entries: out })
    }

    /// `self^k` for `k >= 0` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut acc = Matrix::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mat_mul(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.mat_mul(&base).expect("same dimension");
            }
        }
        acc
    }

    pub fn conj_transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.entries[j * n + i].conj();
            }
        }
        Matrix { n, entries: out }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, c: C64) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(C64, C64) -> C64) -> Matrix {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `Σ_k coeffs[k] · mats[k]`. All matrices must share one dimension.
    pub fn linear_combination(coeffs: &[C64], mats: &[Matrix]) -> Result<Matrix> {
        if coeffs.len() != mats.len() {
            return Err(Error::LengthMismatch {
                left: coeffs.len(),
                right: mats.len(),
            });
        }
        let first = mats
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty linear combination".into()))?;
        let mut out = vec![ZERO; first.n * first.n];
        for (c, m) in coeffs.iter().zip(mats) {
            first.check_dim(m)?;
            for (o, z) in out.iter_mut().zip(&m.entries) {
                *o += c * z;
            }
        }
        Ok(Matrix {
            n: first.n,
            entries: out,
        })
    }

    /// Frobenius norm of `self - other`.
    pub fn frobenius_distance(&self, other: &Matrix) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_entry_distance(&self, other: &Matrix) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `||a a† - u||_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self
            .mat_mul(&self.conj_transpose())
            .expect("same dimension");
        prod.frobenius_distance(&Matrix::identity(self.n))
            .expect("same dimension")
    }

    pub fn is_unitary(&self, tol: Tolerance) -> bool {
        self.unitarity_defect() <= tol.eps()
    }

    /// Row sums and column sums.
    pub fn line_sums(&self) -> LineSums {
        let n = self.n;
        let mut rows = vec![ZERO; n];
        let mut cols = vec![ZERO; n];
        for (row, sum) in self.rows().zip(rows.iter_mut()) {
            for (&z, col) in row.iter().zip(cols.iter_mut()) {
                *sum += z;
                *col += z;
            }
        }
        LineSums { rows, cols }
    }

    /// Unitary with every row and column sum within `tol` of 1.
    pub fn is_xu(&self, tol: Tolerance) -> bool {
        self.is_unitary(tol) && self.line_sums().max_deviation_from(ONE) <= tol.eps()
    }

    /// `||a - a†||_F`; zero for Hermitian matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        self.frobenius_distance(&self.conj_transpose())
            .expect("same dimension")
    }

    /// True when every entry is exactly 0 or 1 and each row and column holds
    /// a single 1.
    pub fn is_permutation_matrix(&self) -> bool {
        let n = self.n;
        let mut col_hits = vec![0usize; n];
        for row in self.rows() {
            let mut row_hits = 0;
            for (&z, hits) in row.iter().zip(col_hits.iter_mut()) {
                if z == ONE {
                    row_hits += 1;
                    *hits += 1;
                } else if z != ZERO {
                    return false;
                }
            }
            if row_hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&c| c == 1)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n, self.n)?;
        for row in self.rows() {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>9.5}{:+.5}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineSums {
    pub rows: Vec<C64>,
    pub cols: Vec<C64>,
}

impl LineSums {
    /// Largest `|s - target|` over all 2n sums.
    pub fn max_deviation_from(&self, target: C64) -> f64 {
        self.rows
            .iter()
            .chain(&self.cols)
            .map(|s| (s - target).norm())
            .fold(0.0, f64::max)
    }
}

/// Wire form: `{"n": <int>, "entries": [[[re, im], ...], ...]}`, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixWire {
    n: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire {
            n: self.n,
            entries: self
                .rows()
                .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(d)?;
        if wire.entries.len() != wire.n {
            return Err(serde::de::Error::custom(format!(
                "matrix declares n = {} but has {} rows",
                wire.n,
                wire.entries.len()
            )));
        }
        let rows = wire
            .entries
            .into_iter()
            .map(|r| r.into_iter().map(|[re, im]| C64::new(re, im)).collect())
            .collect();
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn v_gate() -> Matrix {
        let a = c(0.5, 0.5);
        let b = c(0.5, -0.5);
        Matrix::from_rows(vec![vec![a, b], vec![b, a]]).unwrap()
    }

    fn not_gate() -> Matrix {
        Matrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = v_gate();
        assert_eq!(Matrix::identity(2).mat_mul(&a).unwrap(), a);
    }

    #[test]
    fn four_cycle_squared() {
        let q = Matrix::from_real_rows(&[
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[1.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        let expected = Matrix::from_real_rows(&[
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
        ])
        .unwrap();
        assert_eq!(q.mat_mul(&q).unwrap(), expected);
    }

    #[test]
    fn v_squared_is_not() {
        // (1+i)^2 + (1-i)^2 = 0 and 2(1+i)(1-i) = 4, each divided by 4.
        let vv = v_gate().mat_mul(&v_gate()).unwrap();
        assert!(vv.frobenius_distance(&not_gate()).unwrap() < 1e-15);
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        let err = Matrix::identity(2)
            .mat_mul(&Matrix::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
        assert!(Matrix::identity(2)
            .frobenius_distance(&Matrix::identity(3))
            .is_err());
    }

    #[test]
    fn conj_transpose_of_v() {
        let expected = Matrix::from_rows(vec![
            vec![c(0.5, -0.5), c(0.5, 0.5)],
            vec![c(0.5, 0.5), c(0.5, -0.5)],
        ])
        .unwrap();
        assert_eq!(v_gate().conj_transpose(), expected);
    }

    #[test]
    fn distance_identity_to_not() {
        let d = Matrix::identity(2).frobenius_distance(&not_gate()).unwrap();
        assert_eq!(d, 2.0);
        assert_eq!(not_gate().frobenius_distance(&not_gate()).unwrap(), 0.0);
    }

    #[test]
    fn unitarity_predicate() {
        let tol = Tolerance::DEFAULT;
        assert!(not_gate().is_unitary(tol));
        assert!(v_gate().is_unitary(tol));
        assert!(!Matrix::identity(2).scale(c(2.0, 0.0)).is_unitary(tol));
    }

    #[test]
    fn the_v_gate_is_xu_but_a_phase_gate_is_not() {
        let tol = Tolerance::DEFAULT;
        assert!(v_gate().is_xu(tol));
        assert!(Matrix::identity(3).is_xu(tol));
        let phase = C64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        let diag = Matrix::from_rows(vec![vec![ONE, ZERO], vec![ZERO, phase]]).unwrap();
        assert!(diag.is_unitary(tol));
        assert!(!diag.is_xu(tol));
    }

    #[test]
    fn permutation_line_sums_are_one() {
        let s = not_gate().line_sums();
        assert_eq!(s.rows, vec![ONE, ONE]);
        assert_eq!(s.cols, vec![ONE, ONE]);
    }

    #[test]
    fn constructors_validate() {
        assert!(Matrix::from_row_major(0, vec![]).is_err());
        assert!(Matrix::from_row_major(2, vec![ONE; 3]).is_err());
        assert!(matches!(
            Matrix::from_row_major(1, vec![c(f64::NAN, 0.0)]),
            Err(Error::NonFinite { row: 0, col: 0 })
        ));
        assert!(Matrix::from_rows(vec![vec![ONE, ONE], vec![ONE]]).is_err());
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(1.0).is_err());
        assert!(Tolerance::new(1e-9).is_ok());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let v = v_gate();
        let v4 = v.pow(4);
        assert!(v4.frobenius_distance(&Matrix::identity(2)).unwrap() < 1e-15);
        assert_eq!(v.pow(0), Matrix::identity(2));
    }

    #[test]
    fn json_shape_and_round_trip() {
        let v = v_gate();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"entries":[[[0.5,0.5],[0.5,-0.5]],[[0.5,-0.5],[0.5,0.5]]]}"#
        );
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Matrix>(r#"{"n":2,"entries":[[[1,0]]]}"#).is_err());
    }
}
