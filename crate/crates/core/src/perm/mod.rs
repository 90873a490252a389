//! Permutations in 0-indexed one-line notation and their matrices.

mod cycle_graph;
mod landau;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, ONE, ZERO};

pub use cycle_graph::{
    all_permutations, enumerate_cycle_graph, Cycle, CycleGraph, CYCLE_GRAPH_CAP,
};
pub use landau::{landau, landau_with_cap, Landau, LANDAU_CAP};

/// A bijection on `{0, .., n-1}`; `image[i]` is where `i` is sent.
///
/// Ordering is lexicographic on the image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image".into()));
        }
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image value {x} out of range for n = {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image value {x} appears twice"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Apply `self` first, then `other`: `i ↦ other(self(i))`.
    ///
    /// With the matrix convention of [`Permutation::to_matrix`] this is a
    /// homomorphism: `a.then(b).to_matrix() == a.to_matrix() · b.to_matrix()`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// k-fold composition; negative `k` gives powers of the inverse.
    pub fn power(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Permutation::identity(self.len());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.then(&sq);
            }
        }
        acc
    }

    pub fn cycle_decomposition(&self) -> CycleType {
        let n = self.len();
        let mut visited = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.image[i];
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::new(lengths)
    }

    /// Least `p >= 1` with `self^p` the identity.
    pub fn order(&self) -> u128 {
        self.cycle_decomposition().lcm()
    }

    /// 0/1 matrix with `M[i][image[i]] = 1`; the image `[1, 2, 0]` maps to
    /// rows `(0 1 0 / 0 0 1 / 1 0 0)`.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.len();
        let mut entries = vec![ZERO; n * n];
        for (i, &x) in self.image.iter().enumerate() {
            entries[i * n + x] = ONE;
        }
        Matrix::from_row_major(n, entries).expect("square and finite")
    }

    /// Inverse of [`Permutation::to_matrix`] for exact 0/1 permutation matrices.
    pub fn from_matrix(m: &Matrix) -> Option<Permutation> {
        if !m.is_permutation_matrix() {
            return None;
        }
        let image = m
            .rows()
            .map(|row| row.iter().position(|&z| z == ONE).expect("one per row"))
            .collect();
        Some(Permutation { image })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated images, e.g. `1,2,3,0`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPermutation(format!(
                        "`{}` is not a non-negative integer",
                        t.trim()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(image)
    }
}

/// Multiset of cycle lengths, stored in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        assert!(
            lengths.iter().all(|&l| l >= 1),
            "cycle lengths must be positive"
        );
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn total(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn lcm(&self) -> u128 {
        self.lengths
            .iter()
            .fold(1u128, |acc, &l| lcm(acc, l as u128))
    }
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
