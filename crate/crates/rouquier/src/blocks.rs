//! Partitions of finite label sets and the union-find used to fuse them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Union-find with path compression and union by size.
#[derive(Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// A partition of a finite set of labels into disjoint non-empty blocks.
///
/// Canonical form: every block is sorted ascending and blocks are sorted by
/// their least label, so equal partitions compare equal and serialisation is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition<L> {
    blocks: Vec<Vec<L>>,
}

impl<L: Ord + Clone> BlockPartition<L> {
    /// Build from an explicit list of classes; canonicalises.
    pub fn from_classes(classes: Vec<Vec<L>>) -> Self {
        let mut blocks: Vec<Vec<L>> = classes.into_iter().filter(|c| !c.is_empty()).collect();
        for block in &mut blocks {
            block.sort();
            block.dedup();
        }
        blocks.sort();
        Self { blocks }
    }

    /// The discrete partition.
    pub fn singletons(labels: impl IntoIterator<Item = L>) -> Self {
        Self::from_classes(labels.into_iter().map(|l| vec![l]).collect())
    }

    /// Group `labels` by a key function.
    pub fn from_key<K: Ord>(labels: impl IntoIterator<Item = L>, key: impl Fn(&L) -> K) -> Self {
        let mut buckets: BTreeMap<K, Vec<L>> = BTreeMap::new();
        for label in labels {
            buckets.entry(key(&label)).or_default().push(label);
        }
        Self::from_classes(buckets.into_values().collect())
    }

    pub fn blocks(&self) -> &[Vec<L>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// All labels, in canonical order.
    pub fn labels(&self) -> Vec<L> {
        let mut out: Vec<L> = self.blocks.iter().flatten().cloned().collect();
        out.sort();
        out
    }

    pub fn num_labels(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of the block containing `label`, if present.
    pub fn block_index_of(&self, label: &L) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(label).is_ok())
    }

    /// Whether two labels of the partition share a block.
    pub fn same_block(&self, a: &L, b: &L) -> Result<bool> {
        match (self.block_index_of(a), self.block_index_of(b)) {
            (Some(x), Some(y)) => Ok(x == y),
            _ => Err(Error::UnknownLabel("label not covered by partition".into())),
        }
    }

    /// The join (common coarsening by transitive closure) of `self` and
    /// `other`, which must cover the same label set.
    pub fn join(&self, other: &BlockPartition<L>) -> BlockPartition<L> {
        Self::join_all(self.labels(), [self, other])
    }

    /// Join an arbitrary family of partitions of the same label set, via
    /// union-find. The result is independent of the order of the family.
    pub fn join_all<'a>(
        labels: Vec<L>,
        parts: impl IntoIterator<Item = &'a BlockPartition<L>>,
    ) -> BlockPartition<L>
    where
        L: 'a,
    {
        let index: BTreeMap<&L, usize> = labels.iter().zip(0..).collect();
        let mut uf = UnionFind::new(labels.len());
        for part in parts {
            for block in part.blocks() {
                for pair in block.windows(2) {
                    uf.union(index[&pair[0]], index[&pair[1]]);
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<L>> = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            classes.entry(uf.find(i)).or_default().push(label.clone());
        }
        Self::from_classes(classes.into_values().collect())
    }

    /// Whether every block of `finer` is contained in a block of `self`.
    pub fn coarsens(&self, finer: &BlockPartition<L>) -> bool {
        finer.blocks().iter().all(|block| {
            let Some(target) = self.block_index_of(&block[0]) else {
                return false;
            };
            block
                .iter()
                .all(|l| self.block_index_of(l) == Some(target))
        })
    }

    /// Apply a label map blockwise, deduplicating within each block. Used for
    /// quotients by a group action whose orbits are unions inside blocks.
    pub fn map_labels<M: Ord + Clone>(&self, f: impl Fn(&L) -> M) -> BlockPartition<M> {
        BlockPartition::from_classes(
            self.blocks
                .iter()
                .map(|b| b.iter().map(&f).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = BlockPartition::from_classes(vec![vec![3, 1], vec![2], vec![]]);
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);
        assert_eq!(p.labels(), vec![1, 2, 3]);
    }

    #[test]
    fn join_is_transitive_closure() {
        let a = BlockPartition::from_classes(vec![vec![1, 2], vec![3], vec![4]]);
        let b = BlockPartition::from_classes(vec![vec![2, 3], vec![1], vec![4]]);
        let joined = a.join(&b);
        assert_eq!(joined.blocks(), &[vec![1, 2, 3], vec![4]]);
        assert_eq!(joined, b.join(&a));
        assert!(joined.coarsens(&a) && joined.coarsens(&b));
    }

    #[test]
    fn join_order_independent() {
        let parts = [
            BlockPartition::from_classes(vec![vec![1, 2], vec![3], vec![4], vec![5]]),
            BlockPartition::from_classes(vec![vec![3, 4], vec![1], vec![2], vec![5]]),
            BlockPartition::from_classes(vec![vec![2, 3], vec![1], vec![4], vec![5]]),
        ];
        let labels = vec![1, 2, 3, 4, 5];
        let fwd = BlockPartition::join_all(labels.clone(), parts.iter());
        let rev = BlockPartition::join_all(labels, parts.iter().rev());
        assert_eq!(fwd, rev);
        assert_eq!(fwd.blocks(), &[vec![1, 2, 3, 4], vec![5]]);
    }

    #[test]
    fn from_key_groups() {
        let p = BlockPartition::from_key(0..6, |n| n % 3);
        assert_eq!(p.blocks(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
    }
}
