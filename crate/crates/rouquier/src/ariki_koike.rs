//! Rouquier blocks for the cyclotomic Ariki-Koike algebras of `G(d,1,r)`.
//!
//! Irreducible characters are labelled by `d`-partitions of `r`. The block
//! partition attached to an essential hyperplane is combinatorial: on
//! `kN + M_s - M_t = 0` two labels fuse when they agree away from components
//! `s, t` and the pair `(λ^(s), λ^(t))` has the same charged content as
//! `(μ^(s), μ^(t))` for the weight system `(0, k)`; on `N = 0` they fuse when
//! all component sizes agree. The blocks of an arbitrary specialisation are
//! the transitive closure of the per-hyperplane partitions over the
//! hyperplanes its weights lie on, and are trivial when there is none.

use std::fmt;

use crate::blocks::BlockPartition;
use crate::cyclotomic::is_essential_pair;
use crate::error::{Error, Result};
use crate::partition::{charged_symbol, ContentMultiset, MultiPartition, Partition, WeightSystem};

/// An essential hyperplane for `G(d,1,r)` in the weight space
/// `(m_0, ..., m_(d-1), n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AkHyperplane {
    /// `N = 0`.
    NZero,
    /// `kN + M_s - M_t = 0` with `-r < k < r`, `0 <= s < t < d` and
    /// `ζ_d^s - ζ_d^t` a non-unit. The reflected equation is the same
    /// hyperplane, so `s < t` is canonical.
    Linear { k: i64, s: usize, t: usize },
}

impl fmt::Display for AkHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AkHyperplane::NZero => write!(f, "N=0"),
            AkHyperplane::Linear { k, s, t } => match k {
                0 => write!(f, "M{s}-M{t}=0"),
                1 => write!(f, "N+M{s}-M{t}=0"),
                -1 => write!(f, "-N+M{s}-M{t}=0"),
                _ => write!(f, "{k}N+M{s}-M{t}=0"),
            },
        }
    }
}

/// A cyclotomic specialisation `u_j ↦ ζ_d^j q^(m_j)`, `x ↦ q^n` for the
/// Ariki-Koike algebra of `G(d,1,r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AkSpecialization {
    pub d: usize,
    pub r: u32,
    pub m: Vec<i64>,
    pub n: i64,
}

impl AkSpecialization {
    pub fn new(d: usize, r: u32, m: Vec<i64>, n: i64) -> Result<Self> {
        if m.len() != d {
            return Err(Error::WeightLengthMismatch {
                got: m.len(),
                expected: d,
            });
        }
        assert!(d >= 1 && r >= 1);
        Ok(Self { d, r, m, n })
    }
}

/// All essential hyperplanes for `G(d,1,r)`: `N = 0` together with every
/// `kN + M_s - M_t = 0` for `-r < k < r` and essential pairs `s < t`.
pub fn enumerate_hyperplanes(d: usize, r: u32) -> Vec<AkHyperplane> {
    let mut out = vec![AkHyperplane::NZero];
    let r = r as i64;
    for k in (1 - r)..r {
        for s in 0..d {
            for t in (s + 1)..d {
                if is_essential_pair(d as u32, s as u32, t as u32) {
                    out.push(AkHyperplane::Linear { k, s, t });
                }
            }
        }
    }
    out.sort();
    out
}

/// The essential hyperplanes the weights of `spec` lie on.
pub fn hyperplanes_containing(spec: &AkSpecialization) -> Vec<AkHyperplane> {
    enumerate_hyperplanes(spec.d, spec.r)
        .into_iter()
        .filter(|h| match *h {
            AkHyperplane::NZero => spec.n == 0,
            AkHyperplane::Linear { k, s, t } => k * spec.n + spec.m[s] - spec.m[t] == 0,
        })
        .collect()
}

/// Charged content of the pair `(λ^(s), λ^(t))` for weights `(0, k)` at a
/// floor high enough to be common to every `d`-partition of `r`, so that
/// equal keys mean equal charged contents.
fn pair_content_key(label: &MultiPartition, s: usize, t: usize, k: i64, r: u32) -> ContentMultiset {
    let pair = MultiPartition::new(vec![label.component(s).clone(), label.component(t).clone()])
        .expect("two components");
    let w = WeightSystem::new(vec![0, k]);
    let floor = r as i64 + k.abs();
    charged_symbol(&pair, &w, Some(floor))
        .expect("floor dominates every charged height")
        .content()
}

/// The Rouquier blocks associated with a single essential hyperplane, as a
/// partition of the `d`-partitions of `r`.
pub fn blocks_for_hyperplane(h: AkHyperplane, d: usize, r: u32) -> BlockPartition<MultiPartition> {
    let labels = MultiPartition::enumerate(d, r);
    match h {
        AkHyperplane::NZero => BlockPartition::from_key(labels, |mp| {
            mp.components().iter().map(Partition::size).collect::<Vec<_>>()
        }),
        AkHyperplane::Linear { k, s, t } => BlockPartition::from_key(labels, |mp| {
            let rest: Vec<Partition> = mp
                .components()
                .iter()
                .enumerate()
                .filter(|(a, _)| *a != s && *a != t)
                .map(|(_, p)| p.clone())
                .collect();
            (rest, pair_content_key(mp, s, t, k, r))
        }),
    }
}

/// The Rouquier blocks of the cyclotomic Ariki-Koike algebra given by `spec`:
/// the join over all essential hyperplanes containing the weights, or the
/// trivial partition when the weights are generic.
pub fn rouquier_blocks(spec: &AkSpecialization) -> BlockPartition<MultiPartition> {
    let contained = hyperplanes_containing(spec);
    let labels = MultiPartition::enumerate(spec.d, spec.r);
    if contained.is_empty() {
        return BlockPartition::singletons(labels);
    }
    let parts: Vec<BlockPartition<MultiPartition>> = contained
        .into_iter()
        .map(|h| blocks_for_hyperplane(h, spec.d, spec.r))
        .collect();
    BlockPartition::join_all(labels, parts.iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::mp;

    #[test]
    fn hyperplane_enumeration() {
        assert_eq!(enumerate_hyperplanes(1, 3), vec![AkHyperplane::NZero]);

        let hs = enumerate_hyperplanes(2, 2);
        assert_eq!(
            hs,
            vec![
                AkHyperplane::NZero,
                AkHyperplane::Linear { k: -1, s: 0, t: 1 },
                AkHyperplane::Linear { k: 0, s: 0, t: 1 },
                AkHyperplane::Linear { k: 1, s: 0, t: 1 },
            ]
        );

        // ζ_6^0 - ζ_6^1 is a unit: no hyperplane on the pair (0, 1)
        let hs = enumerate_hyperplanes(6, 2);
        assert!(hs
            .iter()
            .all(|h| !matches!(h, AkHyperplane::Linear { s: 0, t: 1, .. })));
    }

    #[test]
    fn containment_by_direct_substitution() {
        let spec = AkSpecialization::new(2, 2, vec![0, 0], 1).unwrap();
        assert_eq!(
            hyperplanes_containing(&spec),
            vec![AkHyperplane::Linear { k: 0, s: 0, t: 1 }]
        );

        // k·1 + 0 - 1 = 0 forces k = 1
        let spec = AkSpecialization::new(2, 2, vec![0, 1], 1).unwrap();
        assert_eq!(
            hyperplanes_containing(&spec),
            vec![AkHyperplane::Linear { k: 1, s: 0, t: 1 }]
        );

        let spec = AkSpecialization::new(2, 2, vec![0, 5], 1).unwrap();
        assert!(hyperplanes_containing(&spec).is_empty());
    }

    #[test]
    fn blocks_on_n_zero() {
        let blocks = blocks_for_hyperplane(AkHyperplane::NZero, 2, 2);
        assert_eq!(
            blocks.blocks(),
            &[
                vec![mp(&[&[], &[2]]), mp(&[&[], &[1, 1]])],
                vec![mp(&[&[1], &[1]])],
                vec![mp(&[&[2], &[]]), mp(&[&[1, 1], &[]])],
            ]
        );
    }

    #[test]
    fn blocks_on_linear_hyperplanes() {
        let blocks = blocks_for_hyperplane(AkHyperplane::Linear { k: 0, s: 0, t: 1 }, 2, 2);
        assert_eq!(
            blocks.blocks(),
            &[
                vec![mp(&[&[], &[2]]), mp(&[&[2], &[]])],
                vec![mp(&[&[], &[1, 1]]), mp(&[&[1, 1], &[]])],
                vec![mp(&[&[1], &[1]])],
            ]
        );

        let blocks = blocks_for_hyperplane(AkHyperplane::Linear { k: 1, s: 0, t: 1 }, 2, 2);
        let big = vec![mp(&[&[], &[1, 1]]), mp(&[&[1], &[1]]), mp(&[&[2], &[]])];
        assert!(blocks.blocks().contains(&big));
        assert_eq!(blocks.num_blocks(), 3);
    }

    #[test]
    fn generic_weights_give_singletons() {
        let spec = AkSpecialization::new(2, 2, vec![0, 5], 1).unwrap();
        let blocks = rouquier_blocks(&spec);
        assert_eq!(blocks.num_blocks(), 5);
        assert!(blocks.blocks().iter().all(|b| b.len() == 1));
    }

    #[test]
    fn single_hyperplane_specialization() {
        let spec = AkSpecialization::new(2, 2, vec![0, 0], 1).unwrap();
        assert_eq!(
            rouquier_blocks(&spec),
            blocks_for_hyperplane(AkHyperplane::Linear { k: 0, s: 0, t: 1 }, 2, 2)
        );
    }

    #[test]
    fn d_one_n_zero_is_one_block() {
        for r in 1..=4u32 {
            let spec = AkSpecialization::new(1, r, vec![3], 0).unwrap();
            let blocks = rouquier_blocks(&spec);
            assert_eq!(blocks.num_blocks(), 1);
            assert_eq!(blocks.num_labels(), Partition::all_of(r).len());
        }
    }

    #[test]
    fn blocks_preserve_sizes_and_rest_components() {
        for h in enumerate_hyperplanes(3, 3) {
            let blocks = blocks_for_hyperplane(h, 3, 3);
            assert_eq!(blocks.num_labels(), MultiPartition::enumerate(3, 3).len());
            for block in blocks.blocks() {
                assert!(block.iter().all(|l| l.size() == 3));
                if let AkHyperplane::Linear { s, t, .. } = h {
                    let rest = |l: &MultiPartition| {
                        l.components()
                            .iter()
                            .enumerate()
                            .filter(|(a, _)| *a != s && *a != t)
                            .map(|(_, p)| p.clone())
                            .collect::<Vec<_>>()
                    };
                    assert!(block.iter().all(|l| rest(l) == rest(&block[0])));
                }
            }
        }
    }

    #[test]
    fn swap_invariance_for_symmetric_weights() {
        // m_s = m_t on an essential pair: swapping components s, t of every
        // label leaves the block partition invariant.
        let spec = AkSpecialization::new(2, 3, vec![4, 4], 1).unwrap();
        let blocks = rouquier_blocks(&spec);
        for block in blocks.blocks() {
            for label in block {
                let swapped = MultiPartition::new(vec![
                    label.component(1).clone(),
                    label.component(0).clone(),
                ])
                .unwrap();
                assert!(blocks.same_block(label, &swapped).unwrap());
            }
        }
    }
}
