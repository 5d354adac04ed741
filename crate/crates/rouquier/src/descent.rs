//! Clifford descent: blocks of `G(de,e,r)` from blocks of an ambient
//! algebra, via orbits of a cyclic group action on character labels.
//!
//! For `r > 2` (and `r = 2` with `e` odd) the ambient algebra is the
//! Ariki-Koike algebra of `G(de,1,r)` with the weight system repeated `e`
//! times; the acting group is cyclic of order `e` and acts by rotating
//! `de`-partitions by packages of `d = de/e` components. For `r = 2` with
//! `e = 2p` even the ambient algebra is the one of `G(2pd,2,2)` and the
//! action shifts the `C`-indices by `d`.
//!
//! Descent itself is label bookkeeping: a parent block that is a singleton
//! `{λ}` with `λ` fixed by the action splits into `stabiliser`-many
//! singleton characters downstairs, and any other (necessarily
//! action-stable) block maps to the single block collecting every character
//! over every orbit it meets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;

use crate::ariki_koike::{self, AkHyperplane, AkSpecialization};
use crate::blocks::BlockPartition;
use crate::error::{Error, Result};
use crate::partition::MultiPartition;
use crate::rank2::{self, Rank2Hyperplane, Rank2Label, Rank2Spec};

/// Parameters of a group `G(de,e,r)` of the infinite series, `r >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupParams {
    pub de: usize,
    pub e: usize,
    pub r: u32,
}

impl GroupParams {
    pub fn new(de: usize, e: usize, r: u32) -> Result<Self> {
        if e == 0 || de == 0 || de % e != 0 {
            return Err(Error::InvalidDivisor { de, e });
        }
        if r < 2 {
            return Err(Error::RankOutOfRange(r));
        }
        Ok(Self { de, e, r })
    }

    /// `d = de / e`, the number of independent weights.
    pub fn d(&self) -> usize {
        self.de / self.e
    }
}

/// Rotation of a `de`-partition by packages of `d` components: the last
/// package moves to the front.
pub fn tau_d(mp: &MultiPartition, d: usize) -> Result<MultiPartition> {
    let count = mp.d();
    if d == 0 || count % d != 0 {
        return Err(Error::PackageMismatch { d, count });
    }
    let mut components = mp.components()[count - d..].to_vec();
    components.extend_from_slice(&mp.components()[..count - d]);
    MultiPartition::new(components)
}

/// Whether the first `d` partitions repeat `e` times, i.e. the label is
/// fixed by `tau_d`.
pub fn is_d_stuttering(mp: &MultiPartition, d: usize, e: usize) -> Result<bool> {
    if mp.d() != d * e {
        return Err(Error::PackageMismatch { d, count: mp.d() });
    }
    Ok(tau_d(mp, d)? == *mp)
}

/// An orbit of a cyclic group action on labels, with the order of the
/// stabiliser of any member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<L> {
    pub members: Vec<L>,
    pub stabilizer_order: usize,
}

impl<L: Ord> Orbit<L> {
    /// The least member, used as the canonical orbit name.
    pub fn representative(&self) -> &L {
        &self.members[0]
    }
}

/// Orbit decomposition of `labels` under the cyclic group generated by
/// `action`, of order `group_order`. Orbit sizes must divide the group
/// order and `|orbit| * stabilizer_order = group_order`.
pub fn orbits<L: Ord + Clone>(
    labels: &[L],
    action: impl Fn(&L) -> L,
    group_order: usize,
) -> Result<Vec<Orbit<L>>> {
    let universe: BTreeSet<&L> = labels.iter().collect();
    let mut seen: BTreeSet<L> = BTreeSet::new();
    let mut out = Vec::new();
    for start in labels {
        if seen.contains(start) {
            continue;
        }
        let mut members = vec![start.clone()];
        let mut cur = action(start);
        while cur != *start {
            if !universe.contains(&cur) {
                return Err(Error::UnknownLabel(
                    "action leaves the label set".into(),
                ));
            }
            if members.len() >= group_order {
                return Err(Error::ActionNotClosing { order: group_order });
            }
            members.push(cur.clone());
            cur = action(&cur);
        }
        if group_order % members.len() != 0 {
            return Err(Error::OrbitSizeInvalid {
                size: members.len(),
                order: group_order,
            });
        }
        let stabilizer_order = group_order / members.len();
        members.sort();
        seen.extend(members.iter().cloned());
        out.push(Orbit {
            members,
            stabilizer_order,
        });
    }
    out.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    Ok(out)
}

/// A descended character: the orbit it restricts from (named by the least
/// parent label) and a copy index below the stabiliser order. Copy indices
/// are nominal; nothing downstream depends on which copy is which.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DescLabel<L> {
    pub orbit: L,
    pub copy: u32,
}

impl<L: fmt::Display> fmt::Display for DescLabel<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orb[{}]#{}", self.orbit, self.copy)
    }
}

/// Blocks of the Hecke algebra of `G(de,e,r)` from the blocks of the
/// Ariki-Koike algebra of `G(de,1,r)` at a repeated weight system.
///
/// The parent partition must be stable under `tau_d`; a singleton parent
/// block (its label is then forced to be `d`-stuttering) splits into `e`
/// singleton characters, every other block maps to the block of all
/// characters over the orbits it meets.
pub fn descend_ak(
    parent: &BlockPartition<MultiPartition>,
    d: usize,
    e: usize,
) -> Result<BlockPartition<DescLabel<MultiPartition>>> {
    let labels = parent.labels();
    for label in &labels {
        let image = tau_d(label, d)?;
        if !parent.same_block(label, &image)? {
            return Err(Error::UnstableParentBlocks);
        }
    }
    let orbs = orbits(&labels, |l| tau_d(l, d).expect("shape checked"), e)?;
    let mut orbit_index: BTreeMap<&MultiPartition, usize> = BTreeMap::new();
    for (i, orb) in orbs.iter().enumerate() {
        for member in &orb.members {
            orbit_index.insert(member, i);
        }
    }

    let mut classes: Vec<Vec<DescLabel<MultiPartition>>> = Vec::new();
    for block in parent.blocks() {
        if block.len() == 1 {
            let lone = &block[0];
            if !is_d_stuttering(lone, d, e)? {
                // a non-stuttering singleton contradicts tau-stability
                return Err(Error::UnstableParentBlocks);
            }
            for copy in 0..e {
                classes.push(vec![DescLabel {
                    orbit: lone.clone(),
                    copy: copy as u32,
                }]);
            }
        } else {
            let mut class = Vec::new();
            let mut used = BTreeSet::new();
            for label in block {
                let oi = orbit_index[label];
                if used.insert(oi) {
                    let orb = &orbs[oi];
                    for copy in 0..orb.stabilizer_order {
                        class.push(DescLabel {
                            orbit: orb.representative().clone(),
                            copy: copy as u32,
                        });
                    }
                }
            }
            classes.push(class);
        }
    }
    Ok(BlockPartition::from_classes(classes))
}

/// The generator of the cyclic action on the labels of `G(2pd,2,2)`:
/// `χ_ijk ↦ χ_(i,j,k+d)` and `χ_kl ↦ χ_(k+d,l+d)` with indices mod `pd`.
///
/// When reduction mod `pd` inverts the order of a degree-2 pair the
/// superscripts are exchanged; this makes every orbit have size exactly `p`,
/// including the pairs `{k, k + (p/2)d}` for even `p` that the plain index
/// rotation would fix early.
pub fn rank2_action(label: Rank2Label, p: usize, d: usize) -> Rank2Label {
    let pd = p * d;
    match label {
        Rank2Label::Lin { i, j, k } => Rank2Label::Lin {
            i,
            j,
            k: (k + d) % pd,
        },
        Rank2Label::Two { k, l, sup } => {
            let (k2, l2) = ((k + d) % pd, (l + d) % pd);
            if k2 < l2 {
                Rank2Label::Two { k: k2, l: l2, sup }
            } else {
                Rank2Label::Two {
                    k: l2,
                    l: k2,
                    sup: 3 - sup,
                }
            }
        }
    }
}

/// Blocks of the Hecke algebra of `G(2pd,2p,2)` from the blocks of the one
/// of `G(2pd,2,2)` at a `p`-fold repeated weight system.
///
/// Every orbit has size `p`, so each orbit carries exactly one descended
/// character and descent is the orbit-quotient map on the (stable) parent
/// partition. Descended characters are named by the least orbit member.
pub fn descend_rank2(
    parent: &BlockPartition<Rank2Label>,
    p: usize,
    d: usize,
) -> Result<BlockPartition<Rank2Label>> {
    let labels = parent.labels();
    for label in &labels {
        let image = rank2_action(*label, p, d);
        if !parent.same_block(label, &image)? {
            return Err(Error::UnstableParentBlocks);
        }
    }
    let orbs = orbits(&labels, |l| rank2_action(*l, p, d), p)?;
    for orb in &orbs {
        if orb.members.len() != p {
            return Err(Error::UnexpectedOrbitSize {
                expected: p,
                got: orb.members.len(),
            });
        }
    }
    let mut rep_of: BTreeMap<Rank2Label, Rank2Label> = BTreeMap::new();
    for orb in &orbs {
        for member in &orb.members {
            rep_of.insert(*member, *orb.representative());
        }
    }
    Ok(parent.map_labels(|l| rep_of[l]))
}

/// A character label of any group handled by the dispatcher.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CharLabel {
    /// A `d`-partition of `r`, for `G(d,1,r)`.
    Ak(MultiPartition),
    /// A label of the family `G(2d,2,2)`.
    Rank2(Rank2Label),
    /// A character of `G(de,e,r)` descended along the Ariki-Koike route.
    DescendedAk { orbit: MultiPartition, copy: u32 },
    /// A character of `G(2pd,2p,2)` descended from `G(2pd,2,2)`.
    DescendedRank2 { orbit: Rank2Label },
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Ak(mp) => write!(f, "{mp}"),
            CharLabel::Rank2(l) => write!(f, "{l}"),
            CharLabel::DescendedAk { orbit, copy } => write!(f, "orb[{orbit}]#{copy}"),
            CharLabel::DescendedRank2 { orbit } => write!(f, "orb[{orbit}]#0"),
        }
    }
}

/// Which computation produced the blocks of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `e = 1`: the group is `G(de,1,r)` itself.
    AkDirect,
    /// `r > 2`, or `r = 2` with `e` odd: Ariki-Koike parent plus descent.
    AkDescent { parent_d: usize, e: usize },
    /// `r = 2`, `e = 2`: the group is `G(2d',2,2)` itself.
    Rank2Direct { d: usize },
    /// `r = 2`, `e = 2p` with `p > 1`: rank-2 parent plus descent.
    Rank2Descent { p: usize, parent_d: usize },
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::AkDirect => write!(f, "ariki-koike"),
            Route::AkDescent { parent_d, e } => {
                write!(f, "ariki-koike parent G({parent_d},1,r) + order-{e} descent")
            }
            Route::Rank2Direct { d } => write!(f, "rank-2 family G({},2,2)", 2 * d),
            Route::Rank2Descent { p, parent_d } => {
                write!(f, "rank-2 parent G({},2,2) + order-{p} descent", 2 * parent_d)
            }
        }
    }
}

/// The essential hyperplanes the computed (parent) specialisation lies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContainedHyperplanes {
    Ak(Vec<AkHyperplane>),
    Rank2(Vec<Rank2Hyperplane>),
}

impl ContainedHyperplanes {
    pub fn rendered(&self) -> Vec<String> {
        match self {
            ContainedHyperplanes::Ak(hs) => hs.iter().map(|h| h.to_string()).collect(),
            ContainedHyperplanes::Rank2(hs) => hs.iter().map(|h| h.to_string()).collect(),
        }
    }
}

/// `a`/`A` invariants of one character, where available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AaEntry {
    pub label: CharLabel,
    pub a: Rational64,
    pub big_a: Rational64,
}

/// The result of the full pipeline for one group and weight system.
#[derive(Debug, Clone)]
pub struct GroupBlocks {
    pub params: GroupParams,
    pub route: Route,
    pub blocks: BlockPartition<CharLabel>,
    pub hyperplanes: ContainedHyperplanes,
    /// Present exactly for the rank-2 family and its descents.
    pub aa: Option<Vec<AaEntry>>,
}

/// Rouquier blocks of the cyclotomic Hecke algebra of `G(de,e,r)` for the
/// weight system `(m_0..m_(d-1))`, `n`, dispatching on the shape of the
/// group:
///
/// * `e = 1`: Ariki-Koike directly;
/// * `r > 2`, or `r = 2` with `e` odd: repeated-weight Ariki-Koike parent,
///   then cyclic descent of order `e`;
/// * `r = 2` with `e = 2p`: rank-2 parent `G(de,2,2)` with weights
///   `a = b = (pn, 0)` and the `c`-vector repeated `p`-fold, then cyclic
///   descent of order `p` (none needed for `e = 2`).
pub fn blocks_for_group(params: GroupParams, m: &[i64], n: i64) -> Result<GroupBlocks> {
    let d = params.d();
    if m.len() != d {
        return Err(Error::WeightLengthMismatch {
            got: m.len(),
            expected: d,
        });
    }

    if params.e == 1 {
        let spec = AkSpecialization::new(params.de, params.r, m.to_vec(), n)?;
        let contained = ariki_koike::hyperplanes_containing(&spec);
        let blocks = ariki_koike::rouquier_blocks(&spec).map_labels(|l| CharLabel::Ak(l.clone()));
        return Ok(GroupBlocks {
            params,
            route: Route::AkDirect,
            blocks,
            hyperplanes: ContainedHyperplanes::Ak(contained),
            aa: None,
        });
    }

    if params.r > 2 || params.e % 2 == 1 {
        let mut repeated = Vec::with_capacity(params.de);
        for _ in 0..params.e {
            repeated.extend_from_slice(m);
        }
        let spec = AkSpecialization::new(params.de, params.r, repeated, params.e as i64 * n)?;
        let contained = ariki_koike::hyperplanes_containing(&spec);
        let parent = ariki_koike::rouquier_blocks(&spec);
        let desc = descend_ak(&parent, d, params.e)?;
        let blocks = desc.map_labels(|l| CharLabel::DescendedAk {
            orbit: l.orbit.clone(),
            copy: l.copy,
        });
        return Ok(GroupBlocks {
            params,
            route: Route::AkDescent {
                parent_d: params.de,
                e: params.e,
            },
            blocks,
            hyperplanes: ContainedHyperplanes::Ak(contained),
            aa: None,
        });
    }

    // r = 2, e = 2p even: through the rank-2 family.
    let p = params.e / 2;
    let parent_d = params.de / 2; // = p * d
    let scale = p as i64;
    let mut c = Vec::with_capacity(parent_d);
    for _ in 0..p {
        c.extend_from_slice(m);
    }
    let spec = Rank2Spec::new(parent_d, [scale * n, 0], [scale * n, 0], c)?;
    let contained = rank2::hyperplanes_containing(&spec);
    let parent = rank2::blocks(&spec);

    if p == 1 {
        let aa = rank2::labels(parent_d)
            .into_iter()
            .map(|l| AaEntry {
                label: CharLabel::Rank2(l),
                a: rank2::a_value(l, &spec),
                big_a: rank2::big_a_value(l, &spec),
            })
            .collect();
        return Ok(GroupBlocks {
            params,
            route: Route::Rank2Direct { d: parent_d },
            blocks: parent.map_labels(|l| CharLabel::Rank2(*l)),
            hyperplanes: ContainedHyperplanes::Rank2(contained),
            aa: Some(aa),
        });
    }

    let desc = descend_rank2(&parent, p, d)?;
    // Schur elements scale by the orbit size under restriction, which moves
    // neither valuation nor degree: a descended character inherits the
    // a/A values of its orbit at the parent specialisation.
    let aa = desc
        .labels()
        .into_iter()
        .map(|rep| AaEntry {
            label: CharLabel::DescendedRank2 { orbit: rep },
            a: rank2::a_value(rep, &spec),
            big_a: rank2::big_a_value(rep, &spec),
        })
        .collect();
    Ok(GroupBlocks {
        params,
        route: Route::Rank2Descent { p, parent_d },
        blocks: desc.map_labels(|l| CharLabel::DescendedRank2 { orbit: *l }),
        hyperplanes: ContainedHyperplanes::Rank2(contained),
        aa: Some(aa),
    })
}
