use crate::error::{Error, Result};

/// Largest `n` accepted by [`landau`].
pub const LANDAU_CAP: usize = 120;

/// `L(n)` together with a partition of `n` whose parts have lcm `L(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Landau {
    pub n: usize,
    pub value: u128,
    /// Non-decreasing parts summing to `n`: prime powers padded with 1s.
    pub witness: Vec<usize>,
}

/// Maximum order of an element of `S_n`, with `L(0) = 1`.
pub fn landau(n: usize) -> Result<Landau> {
    landau_with_cap(n, LANDAU_CAP)
}

pub fn landau_with_cap(n: usize, cap: usize) -> Result<Landau> {
    if n > cap {
        return Err(Error::LandauCap { n, cap });
    }
    // An optimal partition can always be taken to consist of powers of
    // distinct primes (plus 1s), so a knapsack over primes suffices:
    // best[s] is the largest product of such prime powers with sum <= s.
    let mut best: Vec<(u128, Vec<usize>)> = vec![(1, Vec::new()); n + 1];
    for p in primes_up_to(n) {
        let prev = best.clone();
        for s in 0..=n {
            let mut pk = p;
            while pk <= s {
                let (value, parts) = &prev[s - pk];
                let candidate = value * pk as u128;
                if candidate > best[s].0 {
                    let mut parts = parts.clone();
                    parts.push(pk);
                    best[s] = (candidate, parts);
                }
                pk *= p;
            }
        }
    }
    let (value, mut witness) = best.swap_remove(n);
    let used: usize = witness.iter().sum();
    witness.extend(std::iter::repeat_n(1, n - used));
    witness.sort_unstable();
    Ok(Landau { n, value, witness })
}

fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).collect()
}
