//! Deterministic enumeration: unordered partitions in restricted-growth
//! string order, ordered ones as every block permutation (lexicographic in
//! block indices) of each unordered partition in turn.

use super::{OrderedSetPartition, SetPartition};
use crate::{Limits, Result};

/// Restricted growth strings `a₁..aₙ` with `a₁ = 0` and
/// `a_{i+1} ≤ 1 + max(a₁..aᵢ)`.
pub struct SetPartitions {
    rgs: Vec<usize>,
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    fn new(n: usize) -> Self {
        SetPartitions {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn current(&self) -> SetPartition {
        let n = self.rgs.len();
        let count = self.prefix_max.last().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition::from_sorted(n, blocks)
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Lexicographic successor of a permutation, in place.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub struct OrderedSetPartitions {
    inner: SetPartitions,
    current: Option<SetPartition>,
    perm: Vec<usize>,
}

impl Iterator for OrderedSetPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        loop {
            if let Some(p) = &self.current {
                let blocks = self.perm.iter().map(|&i| p.blocks()[i].clone()).collect();
                let out = OrderedSetPartition::from_sorted(p.ground_size(), blocks);
                if !next_permutation(&mut self.perm) {
                    self.current = None;
                }
                return Some(out);
            }
            let p = self.inner.next()?;
            self.perm = (0..p.block_count()).collect();
            self.current = Some(p);
        }
    }
}

pub fn enumerate_partitions(n: usize) -> Result<SetPartitions> {
    enumerate_partitions_within(n, &Limits::default())
}

pub fn enumerate_partitions_within(n: usize, limits: &Limits) -> Result<SetPartitions> {
    Limits::check("set partitions", n, limits.partitions)?;
    Ok(SetPartitions::new(n))
}

pub fn enumerate_ordered_partitions(n: usize) -> Result<OrderedSetPartitions> {
    enumerate_ordered_partitions_within(n, &Limits::default())
}

pub fn enumerate_ordered_partitions_within(
    n: usize,
    limits: &Limits,
) -> Result<OrderedSetPartitions> {
    Limits::check("ordered set partitions", n, limits.ordered_partitions)?;
    Ok(OrderedSetPartitions {
        inner: SetPartitions::new(n),
        current: None,
        perm: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::partitions::type_of;

    /// Brute force: assign each element a block label, keep labellings whose
    /// labels are exactly `0..k`, and collect distinct block sets.
    fn brute_partitions(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
        let mut out = BTreeSet::new();
        let total = (n.max(1)).pow(n as u32);
        for code in 0..total {
            let mut labels = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                labels.push(c % n.max(1));
                c /= n.max(1);
            }
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (i, &l) in labels.iter().enumerate() {
                blocks[l].push(i + 1);
            }
            let mut blocks: Vec<Vec<usize>> =
                blocks.into_iter().filter(|b| !b.is_empty()).collect();
            blocks.sort();
            out.insert(blocks);
        }
        out
    }

    #[test]
    fn counts_match_bell_and_fubini() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        let fubini = [1usize, 1, 3, 13, 75, 541, 4683];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(enumerate_partitions(n).unwrap().count(), b, "n = {n}");
        }
        for (n, &f) in fubini.iter().enumerate() {
            assert_eq!(
                enumerate_ordered_partitions(n).unwrap().count(),
                f,
                "n = {n}"
            );
        }
    }

    #[test]
    fn each_partition_exactly_once() {
        for n in 0..=6 {
            let listed: Vec<Vec<Vec<usize>>> = enumerate_partitions(n)
                .unwrap()
                .map(|p| p.blocks().to_vec())
                .collect();
            let set: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len());
            if n > 0 {
                assert_eq!(set, brute_partitions(n));
            }
        }
    }

    #[test]
    fn empty_set_has_one_partition() {
        let all: Vec<_> = enumerate_partitions(0).unwrap().collect();
        assert_eq!(all, vec![SetPartition::empty()]);
        assert_eq!(enumerate_ordered_partitions(0).unwrap().count(), 1);
    }

    #[test]
    fn deterministic_rgs_order() {
        let listed: Vec<String> = enumerate_partitions(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            listed,
            ["{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"]
        );
        let ordered: Vec<String> = enumerate_ordered_partitions(2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(ordered, ["{1,2}", "{1}{2}", "{2}{1}"]);
    }

    #[test]
    fn ordered_preimages_are_block_count_factorial() {
        for n in 0..=6 {
            let mut preimages = std::collections::BTreeMap::new();
            for p in enumerate_ordered_partitions(n).unwrap() {
                *preimages.entry(p.forget_order()).or_insert(0usize) += 1;
            }
            for (q, count) in preimages {
                let k = q.block_count();
                assert_eq!(count, (1..=k).product::<usize>(), "{q}");
                assert_eq!(type_of(&q).block_count(), k);
            }
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(enumerate_partitions(13).err().unwrap().code(), "E_BOUND");
        assert_eq!(
            enumerate_ordered_partitions(10).err().unwrap().code(),
            "E_BOUND"
        );
    }
}
