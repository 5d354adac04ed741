//! Partitions, multipartitions, beta-numbers, symbols and charged contents.
//!
//! These are the combinatorial primitives behind the block criteria: a
//! partition is encoded by its beta-number `(h + λ_1 - 1, ..., h + λ_h - h)`,
//! beta-numbers are padded by shifting, and a multipartition charged by a
//! weight system produces a symbol whose multiset of entries (the charged
//! content) is the quantity compared across characters.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is allowed and represents the trivial label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build a partition, rejecting sequences that are not weakly decreasing
    /// or contain zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// The beta-number `(h + λ_1 - 1, h + λ_2 - 2, ..., h + λ_h - h)`.
    pub fn beta_number(&self) -> BetaNumber {
        let h = self.height() as u64;
        let entries = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| h + p as u64 - (i as u64 + 1))
            .collect();
        BetaNumber { entries }
    }

    /// All partitions of `n`, largest part first (reverse-lexicographic).
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let top = max_part.min(remaining);
            for p in (1..=top).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }
}

impl Ord for Partition {
    /// Reverse-lexicographic ordering: larger leading parts come first, a
    /// proper prefix before its extensions. On partitions of a fixed size
    /// this is the usual ordering `(n), (n-1,1), ..., (1^n)`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.parts.iter().zip(other.parts.iter()) {
            match b.cmp(a) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.parts.len().cmp(&other.parts.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A strictly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaNumber {
    entries: Vec<u64>,
}

impl BetaNumber {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The `m`-shifted beta-number `(β_1+m, ..., β_h+m, m-1, ..., 1, 0)`.
    pub fn shift(&self, m: u64) -> BetaNumber {
        let mut entries: Vec<u64> = self.entries.iter().map(|&b| b + m).collect();
        entries.extend((0..m).rev());
        BetaNumber { entries }
    }
}

/// A `d`-tuple of partitions, the label of an irreducible character of
/// `G(d,1,r)` when the total size is `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyMultiPartition);
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &Partition {
        &self.components[a]
    }

    /// Number of components `d`.
    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    /// All `d`-partitions of `r`, sorted canonically.
    pub fn enumerate(d: usize, r: u32) -> Vec<MultiPartition> {
        assert!(d >= 1, "need at least one component");
        let mut out = Vec::new();
        let mut components: Vec<Partition> = Vec::with_capacity(d);
        fn rec(
            remaining: u32,
            slots: usize,
            components: &mut Vec<Partition>,
            out: &mut Vec<MultiPartition>,
        ) {
            if slots == 1 {
                for p in Partition::all_of(remaining) {
                    components.push(p);
                    out.push(MultiPartition {
                        components: components.clone(),
                    });
                    components.pop();
                }
                return;
            }
            for here in 0..=remaining {
                for p in Partition::all_of(here) {
                    components.push(p);
                    rec(remaining - here, slots - 1, components, out);
                    components.pop();
                }
            }
        }
        rec(r, d, &mut components, &mut out);
        out.sort();
        out
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.components.cmp(&other.components)
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Integer weights `(m^(0), ..., m^(d-1))` charging a `d`-partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<i64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<i64>) -> Self {
        Self { weights }
    }

    pub fn zero(d: usize) -> Self {
        Self {
            weights: vec![0; d],
        }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// A symbol: one shifted beta-number row per component, together with the
/// common charged height (`shift_base`) the rows were normalised to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    rows: Vec<Vec<u64>>,
    shift_base: i64,
}

impl Symbol {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shift_base(&self) -> i64 {
        self.shift_base
    }

    /// Multiset union of all rows.
    pub fn content(&self) -> ContentMultiset {
        let mut counts = BTreeMap::new();
        for row in &self.rows {
            for &e in row {
                *counts.entry(e).or_insert(0usize) += 1;
            }
        }
        ContentMultiset { counts }
    }
}

/// The multiset of symbol entries, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ContentMultiset {
    counts: BTreeMap<u64, usize>,
}

impl ContentMultiset {
    pub fn counts(&self) -> &BTreeMap<u64, usize> {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// The charged height `max_a (h^(a) - m^(a))` of a charged multipartition.
pub fn charged_height(mp: &MultiPartition, w: &WeightSystem) -> Result<i64> {
    if w.len() != mp.d() {
        return Err(Error::WeightLengthMismatch {
            got: w.len(),
            expected: mp.d(),
        });
    }
    Ok(mp
        .components()
        .iter()
        .zip(w.weights())
        .map(|(p, &m)| p.height() as i64 - m)
        .max()
        .expect("multipartitions are non-empty"))
}

/// The `m`-charged standard symbol of a multipartition.
///
/// Row `a` is the beta-number of component `a` shifted by `B - hc^(a)`, where
/// `hc^(a) = h^(a) - m^(a)` and `B` is the supplied floor (defaulting to the
/// charged height `hc = max_a hc^(a)`). With all-zero weights and no floor
/// this is the ordinary standard symbol.
pub fn charged_symbol(
    mp: &MultiPartition,
    w: &WeightSystem,
    floor: Option<i64>,
) -> Result<Symbol> {
    let hc = charged_height(mp, w)?;
    let base = match floor {
        Some(b) if b < hc => return Err(Error::FloorTooSmall { floor: b, min: hc }),
        Some(b) => b,
        None => hc,
    };
    let rows = mp
        .components()
        .iter()
        .zip(w.weights())
        .map(|(p, &m)| {
            let shift = (base - (p.height() as i64 - m)) as u64;
            p.beta_number().shift(shift).entries().to_vec()
        })
        .collect();
    Ok(Symbol {
        rows,
        shift_base: base,
    })
}

/// The ordinary standard symbol (all weights zero, no floor).
pub fn ordinary_symbol(mp: &MultiPartition) -> Symbol {
    charged_symbol(mp, &WeightSystem::zero(mp.d()), None).expect("zero weights always match")
}

/// Whether two multipartitions of the same shape have equal charged contents
/// with respect to `w`.
///
/// Both symbols are recomputed at the common floor `max(hc_1, hc_2)` before
/// the multisets are compared; by floor stability the verdict does not depend
/// on the choice of common floor.
pub fn contents_equal(
    mp1: &MultiPartition,
    mp2: &MultiPartition,
    w: &WeightSystem,
) -> Result<bool> {
    if mp1.d() != mp2.d() {
        return Err(Error::ComponentCountMismatch(mp1.d(), mp2.d()));
    }
    if mp1.size() != mp2.size() {
        return Err(Error::SizeMismatch(mp1.size(), mp2.size()));
    }
    let floor = charged_height(mp1, w)?.max(charged_height(mp2, w)?);
    let c1 = charged_symbol(mp1, w, Some(floor))?.content();
    let c2 = charged_symbol(mp2, w, Some(floor))?.content();
    Ok(c1 == c2)
}

/// Convenience constructor used pervasively in tests: `mp(&[&[2], &[1,1]])`.
pub fn mp(components: &[&[u32]]) -> MultiPartition {
    MultiPartition::new(
        components
            .iter()
            .map(|parts| Partition::new(parts.to_vec()).expect("valid parts"))
            .collect(),
    )
    .expect("non-empty component list")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn beta_number_basics() {
        assert_eq!(Partition::empty().beta_number().entries(), &[] as &[u64]);
        assert_eq!(p(&[1]).beta_number().entries(), &[1]);
        // h = 2: (2+3-1, 2+2-2) = (4, 2)
        assert_eq!(p(&[3, 2]).beta_number().entries(), &[4, 2]);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Partition::empty().beta_number().shift(2).entries(), &[1, 0]);
        assert_eq!(p(&[1]).beta_number().shift(0).entries(), &[1]);
        assert_eq!(p(&[3, 2]).beta_number().shift(1).entries(), &[5, 3, 0]);
    }

    #[test]
    fn shift_composes() {
        for parts in [&[][..], &[1][..], &[3, 2][..], &[4, 2, 2, 1][..]] {
            let b = p(parts).beta_number();
            for m in 0..4u64 {
                for k in 0..4u64 {
                    assert_eq!(b.shift(m).shift(k).entries(), b.shift(m + k).entries());
                }
            }
        }
    }

    #[test]
    fn beta_round_trip() {
        // The partition is recoverable: β_i - (h - i) re-sorted gives the parts.
        for n in 0..=8u32 {
            for part in Partition::all_of(n) {
                let beta = part.beta_number();
                let h = beta.len();
                let recovered: Vec<u32> = beta
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (b - (h as u64 - (i as u64 + 1))) as u32)
                    .collect();
                assert_eq!(recovered, part.parts());
                assert!(beta.entries().windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn charged_symbol_examples() {
        let s = charged_symbol(&mp(&[&[1], &[1]]), &WeightSystem::zero(2), None).unwrap();
        assert_eq!(s.rows(), &[vec![1], vec![1]]);
        assert_eq!(s.shift_base(), 1);

        // hc = max(1 - 0, 0 - 1) = 1
        let s = charged_symbol(&mp(&[&[2], &[]]), &WeightSystem::new(vec![0, 1]), None).unwrap();
        assert_eq!(s.rows(), &[vec![2], vec![1, 0]]);
        assert_eq!(s.shift_base(), 1);

        let all_empty = mp(&[&[], &[], &[]]);
        let s = charged_symbol(&all_empty, &WeightSystem::zero(3), None).unwrap();
        assert_eq!(s.rows(), &[vec![], vec![], vec![]]);
        assert_eq!(s.shift_base(), 0);
    }

    #[test]
    fn floor_below_charged_height_rejected() {
        let err = charged_symbol(&mp(&[&[2], &[]]), &WeightSystem::new(vec![0, 1]), Some(0));
        assert_eq!(err.unwrap_err(), Error::FloorTooSmall { floor: 0, min: 1 });
    }

    #[test]
    fn content_examples() {
        let s = charged_symbol(&mp(&[&[1], &[1]]), &WeightSystem::zero(2), None).unwrap();
        let c = s.content();
        assert_eq!(c.counts().get(&1), Some(&2));
        assert_eq!(c.total(), 2);

        let s = charged_symbol(&mp(&[&[2], &[]]), &WeightSystem::new(vec![0, 1]), None).unwrap();
        let c = s.content();
        let expected: Vec<(u64, usize)> = vec![(0, 1), (1, 1), (2, 1)];
        assert_eq!(
            c.counts().iter().map(|(&k, &v)| (k, v)).collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn contents_equal_examples() {
        let w = WeightSystem::new(vec![0, 1]);
        assert!(contents_equal(&mp(&[&[2], &[]]), &mp(&[&[1], &[1]]), &w).unwrap());
        assert!(contents_equal(&mp(&[&[2], &[]]), &mp(&[&[], &[1, 1]]), &w).unwrap());
        assert!(!contents_equal(&mp(&[&[1], &[]]), &mp(&[&[], &[1]]), &w).unwrap());
    }

    #[test]
    fn contents_equal_rejects_mismatches() {
        let w = WeightSystem::new(vec![0, 0]);
        assert!(contents_equal(&mp(&[&[1]]), &mp(&[&[1], &[]]), &w).is_err());
        assert!(contents_equal(&mp(&[&[2], &[]]), &mp(&[&[1], &[]]), &w).is_err());
    }

    #[test]
    fn floor_stability() {
        // Raising the common floor shifts every entry and appends one zero per
        // row to both symbols, so the verdict is floor-independent.
        for r in 0..=4u32 {
            let labels = MultiPartition::enumerate(2, r);
            for k in -3i64..=3 {
                let w = WeightSystem::new(vec![0, k]);
                for a in &labels {
                    for b in &labels {
                        let base = charged_height(a, &w)
                            .unwrap()
                            .max(charged_height(b, &w).unwrap());
                        let verdicts: Vec<bool> = (0..3)
                            .map(|extra| {
                                let ca =
                                    charged_symbol(a, &w, Some(base + extra)).unwrap().content();
                                let cb =
                                    charged_symbol(b, &w, Some(base + extra)).unwrap().content();
                                ca == cb
                            })
                            .collect();
                        assert!(verdicts.windows(2).all(|v| v[0] == v[1]));
                        assert_eq!(verdicts[0], contents_equal(a, b, &w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn contents_equal_is_equivalence() {
        let labels = MultiPartition::enumerate(2, 3);
        let w = WeightSystem::new(vec![0, 2]);
        for a in &labels {
            assert!(contents_equal(a, a, &w).unwrap());
            for b in &labels {
                assert_eq!(
                    contents_equal(a, b, &w).unwrap(),
                    contents_equal(b, a, &w).unwrap()
                );
                for c in &labels {
                    if contents_equal(a, b, &w).unwrap() && contents_equal(b, c, &w).unwrap() {
                        assert!(contents_equal(a, c, &w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn zero_weight_content_is_permutation_invariant() {
        let labels = MultiPartition::enumerate(3, 3);
        let w = WeightSystem::zero(3);
        let perms: [[usize; 3]; 2] = [[1, 2, 0], [2, 1, 0]];
        for a in &labels {
            for perm in &perms {
                let permuted = MultiPartition::new(
                    perm.iter().map(|&i| a.component(i).clone()).collect(),
                )
                .unwrap();
                assert!(contents_equal(a, &permuted, &w).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = MultiPartition::enumerate(2, 2);
        assert_eq!(all.len(), 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|m| m.size() == 2));
        // partition counts for single-component enumerations
        assert_eq!(Partition::all_of(6).len(), 11);
        assert_eq!(
            Partition::all_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }
}
