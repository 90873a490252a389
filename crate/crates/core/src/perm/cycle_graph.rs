use std::collections::BTreeMap;

use super::Permutation;
use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate_cycle_graph`] runs (6! = 720 elements).
pub const CYCLE_GRAPH_CAP: usize = 6;

/// One maximal cyclic subgroup, listed as `q, q^2, .., q^p = identity` where
/// `q` is the lexicographically smallest generator of the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    elements: Vec<Permutation>,
}

impl Cycle {
    fn generated_by(q: &Permutation) -> Cycle {
        let mut elements = vec![q.clone()];
        while !elements.last().expect("non-empty").is_identity() {
            let next = elements.last().expect("non-empty").then(q);
            elements.push(next);
        }
        Cycle { elements }
    }

    pub fn generator(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The maximal cyclic subgroups of `P(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleGraph {
    pub n: usize,
    pub cycles: Vec<Cycle>,
}

impl CycleGraph {
    pub fn max_cycle_length(&self) -> usize {
        self.cycles.iter().map(Cycle::len).max().unwrap_or(0)
    }

    /// Count of maximal cycles keyed by length.
    pub fn length_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.cycles {
            *h.entry(c.len()).or_insert(0) += 1;
        }
        h
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::new(current.clone()).expect("identity")];
    // next-permutation in lexicographic order
    while let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) {
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation::new(current.clone()).expect("bijection"));
    }
    out
}

/// Enumerates the maximal cyclic subgroups of `P(n)`, sorted by length
/// (descending) and then by generator image.
pub fn enumerate_cycle_graph(n: usize) -> Result<CycleGraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("cycle graph needs n >= 1".into()));
    }
    if n > CYCLE_GRAPH_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: CYCLE_GRAPH_CAP,
        });
    }
    let elements = all_permutations(n);
    let index: BTreeMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let words = elements.len().div_ceil(64);

    // Subgroup element set (as a bitset over `elements`) -> first generator
    // met. Iterating in lexicographic order makes that the smallest one.
    let mut subgroups: BTreeMap<Vec<u64>, Cycle> = BTreeMap::new();
    for q in &elements {
        if q.is_identity() && n > 1 {
            continue;
        }
        let cycle = Cycle::generated_by(q);
        let mut key = vec![0u64; words];
        for e in cycle.elements() {
            let k = index[e];
            key[k / 64] |= 1 << (k % 64);
        }
        subgroups.entry(key).or_insert(cycle);
    }

    let keys: Vec<&Vec<u64>> = subgroups.keys().collect();
    let is_proper_subset =
        |a: &[u64], b: &[u64]| a != b && a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut cycles: Vec<Cycle> = subgroups
        .iter()
        .filter(|(key, _)| !keys.iter().any(|other| is_proper_subset(key, other)))
        .map(|(_, c)| c.clone())
        .collect();
    cycles.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.generator().cmp(b.generator()))
    });
    Ok(CycleGraph { n, cycles })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_has_three_two_cycles_and_one_three_cycle() {
        let g = enumerate_cycle_graph(3).unwrap();
        assert_eq!(g.cycles.len(), 4);
        assert_eq!(g.length_histogram(), BTreeMap::from([(2, 3), (3, 1)]));
        // the 3-cycle subgroup has generators [1,2,0] and [2,0,1]
        assert_eq!(g.cycles[0].generator().image(), &[1, 2, 0]);
        let twos: Vec<_> = g.cycles[1..]
            .iter()
            .map(|c| c.generator().to_string())
            .collect();
        assert_eq!(twos, ["0,2,1", "1,0,2", "2,1,0"]);
    }

    #[test]
    fn p4_counts() {
        let g = enumerate_cycle_graph(4).unwrap();
        assert_eq!(
            g.length_histogram(),
            BTreeMap::from([(2, 6), (3, 4), (4, 3)])
        );
    }

    #[test]
    fn trivial_group() {
        let g = enumerate_cycle_graph(1).unwrap();
        assert_eq!(g.cycles.len(), 1);
        assert_eq!(g.cycles[0].elements(), &[Permutation::identity(1)]);
    }

    #[test]
    fn cycles_end_in_identity() {
        let g = enumerate_cycle_graph(4).unwrap();
        for c in &g.cycles {
            assert!(c.elements().last().unwrap().is_identity());
            assert_eq!(c.len() as u128, c.generator().order());
        }
    }

    #[test]
    fn cap() {
        assert_eq!(
            enumerate_cycle_graph(7),
            Err(Error::EnumerationCap { n: 7, cap: 6 })
        );
        assert!(enumerate_cycle_graph(0).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
