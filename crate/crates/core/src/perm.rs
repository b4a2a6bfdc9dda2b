//! Permutations of boundary indices and their cycle structure.
//!
//! Indices are 0-based internally; [`BilliardsPermutation::cycles_one_based`]
//! and the `Display` impl use the 1-based labels `1..=n`.

use std::collections::BTreeMap;
use std::fmt;

/// A permutation of `0..n` with its cycle decomposition.
///
/// Cycles are listed by increasing smallest element and each cycle starts at
/// its smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilliardsPermutation {
    next: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a permutation: {0}")]
pub struct NotAPermutation(String);

impl BilliardsPermutation {
    pub fn from_next(next: Vec<usize>) -> Result<Self, NotAPermutation> {
        let n = next.len();
        let mut hit = vec![false; n];
        for (i, &j) in next.iter().enumerate() {
            if j >= n {
                return Err(NotAPermutation(format!("{i} maps to {j} >= {n}")));
            }
            if std::mem::replace(&mut hit[j], true) {
                return Err(NotAPermutation(format!("{j} has two preimages")));
            }
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(at);
                at = next[at];
            }
            cycles.push(cycle);
        }
        Ok(BilliardsPermutation { next, cycles })
    }

    /// Build from 1-based cycle notation, e.g. `[[1, 7, 4], [2, 6]]`.
    pub fn from_cycles_one_based(n: usize, cycles: &[Vec<usize>]) -> Result<Self, NotAPermutation> {
        let mut next: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || y == 0 || x > n || y > n {
                    return Err(NotAPermutation(format!("label out of range in {cycle:?}")));
                }
                next[x - 1] = y - 1;
            }
        }
        BilliardsPermutation::from_next(next)
    }

    pub fn n(&self) -> usize {
        self.next.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.next[i]
    }

    pub fn next(&self) -> &[usize] {
        &self.next
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycles_one_based(&self) -> Vec<Vec<usize>> {
        self.cycles
            .iter()
            .map(|c| c.iter().map(|x| x + 1).collect())
            .collect()
    }

    pub fn cyc(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle sizes, largest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// `m → α_m`, the number of cycles of size `m`.
    pub fn alpha(&self) -> BTreeMap<usize, usize> {
        let mut alpha = BTreeMap::new();
        for c in &self.cycles {
            *alpha.entry(c.len()).or_insert(0) += 1;
        }
        alpha
    }

    /// Index of the cycle containing `i`.
    pub fn cycle_of(&self, i: usize) -> usize {
        self.cycles
            .iter()
            .position(|c| c.contains(&i))
            .expect("every index lies on a cycle")
    }

    pub fn inverse(&self) -> BilliardsPermutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.next.iter().enumerate() {
            inv[j] = i;
        }
        BilliardsPermutation::from_next(inv).expect("inverse of a permutation")
    }

    /// Relabel so that old index `start` becomes index 0 (labels shift
    /// cyclically, preserving clockwise order).
    pub fn relabeled_from(&self, start: usize) -> BilliardsPermutation {
        let n = self.n();
        let shift = |k: usize| (k + n - start % n) % n;
        let mut next = vec![0; n];
        for (i, &j) in self.next.iter().enumerate() {
            next[shift(i)] = shift(j);
        }
        BilliardsPermutation::from_next(next).expect("relabeling keeps a permutation")
    }
}

impl fmt::Display for BilliardsPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles_one_based() {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycle_notation() {
        let p = BilliardsPermutation::from_cycles_one_based(
            9,
            &[vec![1, 7, 4, 3, 5, 9], vec![2, 6, 8]],
        )
        .unwrap();
        assert_eq!(p.to_string(), "(1 7 4 3 5 9)(2 6 8)");
        assert_eq!(p.cycle_type(), vec![6, 3]);
        assert_eq!(p.alpha(), BTreeMap::from([(3, 1), (6, 1)]));
        assert_eq!(p.apply(0), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(BilliardsPermutation::from_next(vec![1, 1]).is_err());
        assert!(BilliardsPermutation::from_next(vec![3]).is_err());
    }

    proptest! {
        #[test]
        fn sizes_sum_and_inverse(seed in proptest::collection::vec(0usize..1000, 1..40)) {
            // a permutation from sorting random keys
            let mut idx: Vec<usize> = (0..seed.len()).collect();
            idx.sort_by_key(|&i| (seed[i], i));
            let p = BilliardsPermutation::from_next(idx).unwrap();
            prop_assert_eq!(p.cycle_type().iter().sum::<usize>(), p.n());
            prop_assert_eq!(p.alpha().values().sum::<usize>(), p.cyc());
            let inv = p.inverse();
            for i in 0..p.n() {
                prop_assert_eq!(inv.apply(p.apply(i)), i);
            }
            let r = p.relabeled_from(seed.len() / 2);
            prop_assert_eq!(r.cycle_type(), p.cycle_type());
        }
    }
}
