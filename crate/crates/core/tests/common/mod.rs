#![allow(dead_code)]

use std::f64::consts::TAU;

use interp_core::linalg::{Matrix, C64};
use interp_core::Permutation;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::new(image).unwrap()
}

/// Haar-ish random unitary: Gram-Schmidt on a random complex matrix.
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        for _ in 0..2 {
            for u in &cols {
                let dot: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= dot * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut entries = vec![C64::new(0.0, 0.0); n * n];
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            entries[i * n + j] = *z;
        }
    }
    Matrix::from_row_major(n, entries).unwrap()
}

/// Unitary DFT matrix; its first column is the normalised all-ones vector.
pub fn dft(n: usize) -> Matrix {
    let s = 1.0 / (n as f64).sqrt();
    let entries = (0..n * n)
        .map(|k| C64::from_polar(s, TAU * ((k / n) * (k % n)) as f64 / n as f64))
        .collect();
    Matrix::from_row_major(n, entries).unwrap()
}

/// Random element of XU(n): `F · diag(1, U') · F†`.
pub fn random_xu<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let f = dft(n);
    let mut block = vec![C64::new(0.0, 0.0); n * n];
    block[0] = C64::new(1.0, 0.0);
    if n > 1 {
        let inner = random_unitary(rng, n - 1);
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                block[(i + 1) * n + j + 1] = inner.get(i, j);
            }
        }
    }
    let d = Matrix::from_row_major(n, block).unwrap();
    f.mat_mul(&d).unwrap().mat_mul(&f.conj_transpose()).unwrap()
}

/// Enumerates the partitions of `n` (parts non-increasing).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Brute-force Landau: max lcm over all partitions.
pub fn landau_brute_force(n: usize) -> u128 {
    partitions(n)
        .iter()
        .map(|p| {
            p.iter()
                .fold(1u128, |l, &x| l / gcd(l, x as u128) * x as u128)
        })
        .max()
        .unwrap_or(1)
}

/// Order by repeated composition until the identity comes back.
pub fn order_brute_force(p: &Permutation) -> u128 {
    let mut k = 1;
    let mut cur = p.clone();
    while !cur.is_identity() {
        cur = cur.then(p);
        k += 1;
    }
    k
}

/// `(Σ a_i x^i)(Σ b_j x^j) mod (x^p − 1)` via the full product.
pub fn poly_mul_mod(a: &[C64], b: &[C64]) -> Vec<C64> {
    let p = a.len();
    let mut full = vec![C64::new(0.0, 0.0); 2 * p - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            full[i + j] += x * y;
        }
    }
    let mut folded = vec![C64::new(0.0, 0.0); p];
    for (k, z) in full.into_iter().enumerate() {
        folded[k % p] += z;
    }
    folded
}
