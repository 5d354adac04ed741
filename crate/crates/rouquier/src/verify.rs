//! Property suites with independent oracles, runnable from the CLI.
//!
//! Each check replays one of the structural claims the implementation rests
//! on, at bounded sizes and with a fixed seed, against a route that does not
//! share code with the implementation it checks: the cyclotomic criterion is
//! compared with prime divisors of `Φ_n(1)` computed by integer polynomial
//! division, and the union-find block fusion is compared with a braced
//! breadth-first closure of the raw fusion relation.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ariki_koike::{self, AkHyperplane, AkSpecialization};
use crate::blocks::BlockPartition;
use crate::cyclotomic::{prime_divisors_of_root_difference, RootDifference};
use crate::descent::{self, GroupParams};
use crate::partition::{contents_equal, MultiPartition, Partition, WeightSystem};
use crate::rank2::{self, Rank2Hyperplane, Rank2Label, Rank2Spec};
use crate::schur::{specialize_monomial, CycloFactor, ExponentVector, FactoredSchurElement, Specialization};

/// Outcome of one property check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: String) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail,
        }
    }

    fn from_count(name: &str, failures: usize, cases: usize) -> Self {
        if failures == 0 {
            Self::pass(name, format!("{cases} cases"))
        } else {
            Self::fail(name, format!("{failures} of {cases} cases failed"))
        }
    }
}

/// Size and seed bounds for a suite run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_d: usize,
    pub max_r: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_d: 4,
            max_r: 4,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Combinatorics,
    Cyclotomic,
    Schur,
    ArikiKoike,
    Rank2,
    Descent,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "all" => Suite::All,
            "combinatorics" => Suite::Combinatorics,
            "cyclotomic" => Suite::Cyclotomic,
            "schur" => Suite::Schur,
            "ariki-koike" => Suite::ArikiKoike,
            "rank2" => Suite::Rank2,
            "descent" => Suite::Descent,
            _ => return None,
        })
    }
}

/// Run a suite and return its checks in order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::Combinatorics) {
        checks.extend(combinatorics_suite(cfg));
    }
    if matches!(suite, Suite::All | Suite::Cyclotomic) {
        checks.extend(cyclotomic_suite());
    }
    if matches!(suite, Suite::All | Suite::Schur) {
        checks.extend(schur_suite(cfg));
    }
    if matches!(suite, Suite::All | Suite::ArikiKoike) {
        checks.extend(ariki_koike_suite(cfg));
    }
    if matches!(suite, Suite::All | Suite::Rank2) {
        checks.extend(rank2_suite(cfg));
    }
    if matches!(suite, Suite::All | Suite::Descent) {
        checks.extend(descent_suite(cfg));
    }
    checks
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Coefficients (ascending) of the `n`-th cyclotomic polynomial, by exact
/// division of `x^n - 1` by the lower cyclotomic polynomials.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut quotient = num;
    for divisor in 1..n {
        if n % divisor == 0 {
            quotient = poly_div_exact(&quotient, &cyclotomic_polynomial(divisor));
        }
    }
    quotient
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut out = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let coeff = rem[i] / lead;
        debug_assert_eq!(rem[i] % lead, 0, "division must be exact");
        out[i - dd] = coeff;
        for (j, &dc) in den.iter().enumerate() {
            rem[i - dd + j] -= coeff * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    out
}

/// Prime divisors of the field norm of `1 - ζ_d^(t-s)`, through `Φ_n(1)` for
/// `n` the order of the ratio. This is the independent route for the
/// prime-power criterion.
pub fn norm_prime_divisors(d: u32, s: u32, t: u32) -> BTreeSet<u64> {
    let rd = RootDifference::new(d, s, t).expect("distinct residues");
    let n = rd.order_of_ratio();
    let value: i64 = cyclotomic_polynomial(n).iter().sum(); // evaluation at 1
    let mut primes = BTreeSet::new();
    let mut v = value.unsigned_abs();
    let mut p = 2u64;
    while p * p <= v {
        if v % p == 0 {
            primes.insert(p);
            while v % p == 0 {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        primes.insert(v);
    }
    primes
}

/// Whether two labels are directly fused by a single essential hyperplane,
/// straight from the combinatorial criteria.
fn directly_related(a: &MultiPartition, b: &MultiPartition, h: AkHyperplane) -> bool {
    match h {
        AkHyperplane::NZero => (0..a.d()).all(|i| a.component(i).size() == b.component(i).size()),
        AkHyperplane::Linear { k, s, t } => {
            let rest_equal = (0..a.d())
                .filter(|&i| i != s && i != t)
                .all(|i| a.component(i) == b.component(i));
            if !rest_equal {
                return false;
            }
            let pa = MultiPartition::new(vec![a.component(s).clone(), a.component(t).clone()])
                .expect("two components");
            let pb = MultiPartition::new(vec![b.component(s).clone(), b.component(t).clone()])
                .expect("two components");
            contents_equal(&pa, &pb, &WeightSystem::new(vec![0, k])).expect("same shape")
        }
    }
}

/// Breadth-first fixpoint oracle for the Rouquier blocks of an Ariki-Koike
/// specialisation: join labels whenever some contained hyperplane relates
/// them directly.
pub fn bfs_rouquier_blocks(spec: &AkSpecialization) -> BlockPartition<MultiPartition> {
    let labels = MultiPartition::enumerate(spec.d, spec.r);
    let contained = ariki_koike::hyperplanes_containing(spec);
    let mut assigned: Vec<Option<usize>> = vec![None; labels.len()];
    let mut classes: Vec<Vec<MultiPartition>> = Vec::new();
    for start in 0..labels.len() {
        if assigned[start].is_some() {
            continue;
        }
        let class_id = classes.len();
        assigned[start] = Some(class_id);
        let mut queue = vec![start];
        let mut members = vec![labels[start].clone()];
        while let Some(i) = queue.pop() {
            for j in 0..labels.len() {
                if assigned[j].is_none()
                    && contained
                        .iter()
                        .any(|&h| directly_related(&labels[i], &labels[j], h))
                {
                    assigned[j] = Some(class_id);
                    queue.push(j);
                    members.push(labels[j].clone());
                }
            }
        }
        classes.push(members);
    }
    BlockPartition::from_classes(classes)
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

fn combinatorics_suite(_cfg: &VerifyConfig) -> Vec<Check> {
    let mut checks = Vec::new();

    // beta round trip for |p| <= 12
    let mut cases = 0;
    let mut failures = 0;
    for n in 0..=12u32 {
        for part in Partition::all_of(n) {
            cases += 1;
            let beta = part.beta_number();
            let h = beta.len() as u64;
            let ok = beta.entries().windows(2).all(|w| w[0] > w[1])
                && beta.len() == part.height()
                && beta
                    .entries()
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| b + i as u64 + 1 - h)
                    .eq(part.parts().iter().map(|&p| p as u64));
            if !ok {
                failures += 1;
            }
        }
    }
    checks.push(Check::from_count("combinatorics/beta-round-trip", failures, cases));

    // floor stability of contents_equal on 2-partitions of size <= 6
    let mut cases = 0;
    let mut failures = 0;
    for r in 0..=6u32 {
        let labels = MultiPartition::enumerate(2, r);
        for k in -3i64..=3 {
            let w = WeightSystem::new(vec![0, k]);
            for a in &labels {
                for b in &labels {
                    cases += 1;
                    let base = crate::partition::charged_height(a, &w)
                        .unwrap()
                        .max(crate::partition::charged_height(b, &w).unwrap());
                    let at = |floor: i64| {
                        crate::partition::charged_symbol(a, &w, Some(floor))
                            .unwrap()
                            .content()
                            == crate::partition::charged_symbol(b, &w, Some(floor))
                                .unwrap()
                                .content()
                    };
                    let expected = contents_equal(a, b, &w).unwrap();
                    if at(base) != expected || at(base + 1) != expected || at(base + 2) != expected
                    {
                        failures += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("combinatorics/floor-stability", failures, cases));

    // equivalence relation at small size
    let mut failures = 0;
    let mut cases = 0;
    let labels = MultiPartition::enumerate(2, 4);
    let w = WeightSystem::new(vec![0, 1]);
    for a in &labels {
        if !contents_equal(a, a, &w).unwrap() {
            failures += 1;
        }
        for b in &labels {
            cases += 1;
            if contents_equal(a, b, &w).unwrap() != contents_equal(b, a, &w).unwrap() {
                failures += 1;
            }
            for c in &labels {
                if contents_equal(a, b, &w).unwrap()
                    && contents_equal(b, c, &w).unwrap()
                    && !contents_equal(a, c, &w).unwrap()
                {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("combinatorics/equivalence-relation", failures, cases));

    checks
}

fn cyclotomic_suite() -> Vec<Check> {
    let mut cases = 0;
    let mut failures = 0;
    for d in 2..=24u32 {
        for s in 0..d {
            for t in (s + 1)..d {
                cases += 1;
                let fast =
                    prime_divisors_of_root_difference(RootDifference::new(d, s, t).unwrap());
                let oracle = norm_prime_divisors(d, s, t);
                if fast != oracle || fast.len() > 1 {
                    failures += 1;
                }
            }
        }
    }
    vec![Check::from_count("cyclotomic/norm-oracle", failures, cases)]
}

fn schur_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..50 {
        // random zero-sum factors over blocks [2, 2, 3]
        let blocks = vec![2usize, 2, 3];
        let vars = 7;
        let mut factors = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let mut exps = vec![0i64; vars];
            // a difference inside one random block keeps sums zero
            let mut start = 0;
            for &len in &blocks {
                if rng.gen_bool(0.6) && len >= 2 {
                    let i = rng.gen_range(0..len);
                    let mut j = rng.gen_range(0..len);
                    while j == i {
                        j = rng.gen_range(0..len);
                    }
                    exps[start + i] += 1;
                    exps[start + j] -= 1;
                }
                start += len;
            }
            let m = ExponentVector::new(exps);
            if !m.is_primitive() {
                continue;
            }
            factors.push(
                CycloFactor::new(m, rng.gen_range(1..=2), Some(2), rng.gen_range(1..=3)).unwrap(),
            );
        }
        let element = FactoredSchurElement::new(
            BTreeSet::new(),
            ExponentVector::zero(vars),
            factors,
            blocks,
        )
        .unwrap();
        let weights: Vec<i64> = (0..vars).map(|_| rng.gen_range(-5..=5)).collect();
        let spec = Specialization::new(weights.clone());
        let (val, deg) = element.valuation_and_degree(&spec).unwrap();
        let linear: i64 = element
            .factors()
            .iter()
            .map(|f| {
                f.multiplicity as i64
                    * f.degree as i64
                    * specialize_monomial(&f.monomial, &spec).unwrap()
            })
            .sum();
        cases += 1;
        if val + deg != linear || val > deg {
            failures += 1;
        }
        let tripled = Specialization::new(weights.iter().map(|w| 3 * w).collect());
        let (v3, d3) = element.valuation_and_degree(&tripled).unwrap();
        if (v3, d3) != (3 * val, 3 * deg) {
            failures += 1;
        }
        let constant = Specialization::new(vec![4, 4, -1, -1, 9, 9, 9]);
        if element.valuation_and_degree(&constant).unwrap() != (0, 0) {
            failures += 1;
        }
    }
    vec![Check::from_count("schur/val-deg-identities", failures, cases)]
}

fn ariki_koike_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa41c);
    let mut checks = Vec::new();

    let mut cases = 0;
    let mut failures = 0;
    for d in 1..=cfg.max_d.min(3) {
        for r in 1..=cfg.max_r.min(4) {
            for _ in 0..8 {
                let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
                let n: i64 = rng.gen_range(-2..=2);
                let spec = AkSpecialization::new(d, r, m, n).unwrap();
                cases += 1;
                if ariki_koike::rouquier_blocks(&spec) != bfs_rouquier_blocks(&spec) {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("ariki-koike/bfs-oracle", failures, cases));

    // join is order independent
    let mut cases = 0;
    let mut failures = 0;
    for d in 1..=cfg.max_d.min(3) {
        for r in 1..=cfg.max_r.min(3) {
            let labels = MultiPartition::enumerate(d, r);
            let parts: Vec<_> = ariki_koike::enumerate_hyperplanes(d, r)
                .into_iter()
                .map(|h| ariki_koike::blocks_for_hyperplane(h, d, r))
                .collect();
            cases += 1;
            let fwd = BlockPartition::join_all(labels.clone(), parts.iter());
            let rev = BlockPartition::join_all(labels, parts.iter().rev());
            if fwd != rev {
                failures += 1;
            }
        }
    }
    checks.push(Check::from_count("ariki-koike/join-order-independence", failures, cases));

    // fused blocks coarsen each contained per-hyperplane partition
    let mut cases = 0;
    let mut failures = 0;
    for _ in 0..10 {
        let d = rng.gen_range(1..=cfg.max_d.min(3));
        let r = rng.gen_range(1..=cfg.max_r.min(4));
        let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
        let n = rng.gen_range(-1..=1);
        let spec = AkSpecialization::new(d, r, m, n).unwrap();
        let fused = ariki_koike::rouquier_blocks(&spec);
        for h in ariki_koike::hyperplanes_containing(&spec) {
            cases += 1;
            if !fused.coarsens(&ariki_koike::blocks_for_hyperplane(h, d, r)) {
                failures += 1;
            }
        }
    }
    checks.push(Check::from_count("ariki-koike/union-of-hyperplane-blocks", failures, cases));

    checks
}

fn random_rank2_spec(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Rank2Spec {
    Rank2Spec::new(
        d,
        [rng.gen_range(-range..=range), rng.gen_range(-range..=range)],
        [rng.gen_range(-range..=range), rng.gen_range(-range..=range)],
        (0..d).map(|_| rng.gen_range(-range..=range)).collect(),
    )
    .unwrap()
}

/// Try to sample a spec lying on `h` and on no other essential hyperplane.
fn spec_on_single_hyperplane(
    rng: &mut ChaCha8Rng,
    h: Rank2Hyperplane,
    d: usize,
) -> Option<Rank2Spec> {
    for _ in 0..400 {
        let mut spec = random_rank2_spec(rng, d, 9);
        match h {
            Rank2Hyperplane::AEq => spec.a[1] = spec.a[0],
            Rank2Hyperplane::BEq => spec.b[1] = spec.b[0],
            Rank2Hyperplane::CEq { k, l } => spec.c[l] = spec.c[k],
            Rank2Hyperplane::Quad { i, j, k, l } => {
                spec.c[l] = spec.a[i as usize] - spec.a[1 - i as usize] + spec.b[j as usize]
                    - spec.b[1 - j as usize]
                    + spec.c[k];
            }
        }
        if rank2::hyperplanes_containing(&spec) == vec![h] {
            return Some(spec);
        }
    }
    None
}

fn rank2_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4a2);
    let mut checks = Vec::new();

    // a + A constant on the blocks of each hyperplane, for specs on exactly
    // that hyperplane
    let mut cases = 0;
    let mut failures = 0;
    for d in 1..=cfg.max_d.min(5) {
        for h in rank2::hyperplanes(d) {
            let Some(spec) = spec_on_single_hyperplane(&mut rng, h, d) else {
                failures += 1;
                cases += 1;
                continue;
            };
            for block in rank2::blocks_for_hyperplane(h, d).blocks() {
                cases += 1;
                let v = rank2::a_plus_a_value(block[0], &spec);
                if block.iter().any(|&l| rank2::a_plus_a_value(l, &spec) != v) {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("rank2/a-plus-A-constant-per-hyperplane", failures, cases));

    // a and A separately constant on fused blocks; closed form = Schur route
    let mut cases = 0;
    let mut failures = 0;
    for d in 1..=cfg.max_d.min(5) {
        for _ in 0..20 {
            let spec = random_rank2_spec(&mut rng, d, 5);
            for label in rank2::labels(d) {
                cases += 1;
                let closed = (rank2::a_value(label, &spec), rank2::big_a_value(label, &spec));
                if rank2::a_big_a_from_schur(label, &spec) != closed {
                    failures += 1;
                }
            }
            for block in rank2::blocks(&spec).blocks() {
                cases += 1;
                let a0 = rank2::a_value(block[0], &spec);
                let big0 = rank2::big_a_value(block[0], &spec);
                if block
                    .iter()
                    .any(|&l| rank2::a_value(l, &spec) != a0 || rank2::big_a_value(l, &spec) != big0)
                {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("rank2/a-A-constant-on-blocks", failures, cases));

    // degree-2 superscript pairs always share a block; linear characters on
    // no essential hyperplane for their Schur element are singletons
    let mut cases = 0;
    let mut failures = 0;
    for d in 1..=cfg.max_d.min(4) {
        for _ in 0..10 {
            let spec = random_rank2_spec(&mut rng, d, 3);
            let blocks = rank2::blocks(&spec);
            for k in 0..d {
                for l in (k + 1)..d {
                    cases += 1;
                    if !blocks
                        .same_block(&Rank2Label::two(k, l, 1), &Rank2Label::two(k, l, 2))
                        .unwrap()
                    {
                        failures += 1;
                    }
                }
            }
            let contained = rank2::hyperplanes_containing(&spec);
            for label in rank2::labels(d) {
                if matches!(label, Rank2Label::Two { .. }) {
                    continue;
                }
                let element = rank2::schur_element(label, d);
                let on_essential = contained.iter().any(|&h| {
                    let (m, p) = rank2::hyperplane_monomial(h, d);
                    element.is_essential_for(&m, p)
                });
                if !on_essential {
                    cases += 1;
                    let idx = blocks.block_index_of(&label).unwrap();
                    if blocks.blocks()[idx].len() != 1 {
                        failures += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("rank2/pairs-and-singletons", failures, cases));

    checks
}

fn descent_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xde5c);
    let mut checks = Vec::new();

    // tau-stability and exchange invariance of repeated-weight parents
    let mut cases = 0;
    let mut failures = 0;
    for de in 1..=cfg.max_d.min(4) {
        for e in (1..=de).filter(|e| de % e == 0) {
            let d = de / e;
            for r in 1..=cfg.max_r.min(4) {
                for _ in 0..3 {
                    let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
                    let n: i64 = rng.gen_range(-2..=2);
                    let mut repeated = Vec::new();
                    for _ in 0..e {
                        repeated.extend_from_slice(&m);
                    }
                    let spec =
                        AkSpecialization::new(de, r, repeated, e as i64 * n).unwrap();
                    let parent = ariki_koike::rouquier_blocks(&spec);
                    for label in parent.labels() {
                        cases += 1;
                        let rotated = descent::tau_d(&label, d).unwrap();
                        if !parent.same_block(&label, &rotated).unwrap() {
                            failures += 1;
                        }
                        for j in 0..d {
                            for k in 1..e {
                                let mut components = label.components().to_vec();
                                components.swap(j, j + k * d);
                                let swapped = MultiPartition::new(components).unwrap();
                                if !parent.same_block(&label, &swapped).unwrap() {
                                    failures += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("descent/tau-and-exchange-stability", failures, cases));

    // stuttering count identity
    let mut cases = 0;
    let mut failures = 0;
    for de in 1..=cfg.max_d.min(6) {
        for e in (1..=de).filter(|e| de % e == 0) {
            let d = de / e;
            for r in 0..=cfg.max_r.min(6) {
                cases += 1;
                let count = MultiPartition::enumerate(de, r)
                    .iter()
                    .filter(|mp| descent::is_d_stuttering(mp, d, e).unwrap())
                    .count();
                let expected = if r % e as u32 == 0 {
                    MultiPartition::enumerate(d, r / e as u32).len()
                } else {
                    0
                };
                if count != expected {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("descent/stuttering-count", failures, cases));

    // counting identity and known character counts
    let mut cases = 0;
    let mut failures = 0;
    let known = [
        (GroupParams::new(2, 2, 2).unwrap(), 4usize),
        (GroupParams::new(3, 3, 2).unwrap(), 3),
        (GroupParams::new(4, 4, 2).unwrap(), 5),
    ];
    for (params, want) in known {
        cases += 1;
        let m: Vec<i64> = vec![0; params.d()];
        let got = descent::blocks_for_group(params, &m, 1)
            .map(|g| g.blocks.num_labels())
            .unwrap_or(0);
        if got != want {
            failures += 1;
        }
    }
    for de in 1..=cfg.max_d.min(6) {
        for e in (2..=de).filter(|e| de % e == 0) {
            let d = de / e;
            for r in 2..=cfg.max_r.min(4) {
                if r == 2 && e % 2 == 0 {
                    continue; // rank-2 route, counted above
                }
                let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
                let mut repeated = Vec::new();
                for _ in 0..e {
                    repeated.extend_from_slice(&m);
                }
                let n: i64 = rng.gen_range(-1..=1);
                let spec = AkSpecialization::new(de, r, repeated, e as i64 * n).unwrap();
                let parent = ariki_koike::rouquier_blocks(&spec);
                let orbs =
                    descent::orbits(&parent.labels(), |l| descent::tau_d(l, d).unwrap(), e)
                        .unwrap();
                let total: usize = orbs.iter().map(|o| o.stabilizer_order).sum();
                let desc = descent::descend_ak(&parent, d, e).unwrap();
                cases += 1;
                if total != desc.num_labels() {
                    failures += 1;
                }
            }
        }
    }
    checks.push(Check::from_count("descent/counting-identity", failures, cases));

    // last lemma: non-singleton blocks with a non-stuttering member contain,
    // for each prime p | e, a member with stabiliser order prime to p
    let mut cases = 0;
    let mut failures = 0;
    for de in 2..=cfg.max_d.min(4) {
        for e in (2..=de).filter(|e| de % e == 0) {
            let d = de / e;
            for r in 1..=cfg.max_r.min(3) {
                let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
                let mut repeated = Vec::new();
                for _ in 0..e {
                    repeated.extend_from_slice(&m);
                }
                let spec = AkSpecialization::new(de, r, repeated, 0).unwrap();
                let parent = ariki_koike::rouquier_blocks(&spec);
                let orbs =
                    descent::orbits(&parent.labels(), |l| descent::tau_d(l, d).unwrap(), e)
                        .unwrap();
                let stab_of = |label: &MultiPartition| {
                    orbs.iter()
                        .find(|o| o.members.binary_search(label).is_ok())
                        .map(|o| o.stabilizer_order)
                        .unwrap()
                };
                for block in parent.blocks() {
                    if block.len() < 2
                        || !block
                            .iter()
                            .any(|l| !descent::is_d_stuttering(l, d, e).unwrap())
                    {
                        continue;
                    }
                    let mut p = 2;
                    let mut rest = e;
                    while rest > 1 {
                        if rest % p == 0 {
                            cases += 1;
                            if !block.iter().any(|l| stab_of(l) % p != 0) {
                                failures += 1;
                            }
                            while rest % p == 0 {
                                rest /= p;
                            }
                        }
                        p += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("descent/last-lemma", failures, cases));

    // three-hyperplane closure on rank-2 parents of even-e descents
    let mut cases = 0;
    let mut failures = 0;
    for pd in 2..=cfg.max_d.min(4) {
        for _ in 0..6 {
            let spec = random_rank2_spec(&mut rng, pd, 2);
            let parent = rank2::blocks(&spec);
            let ceq = |k: usize, l: usize| {
                let (k, l) = if k < l { (k, l) } else { (l, k) };
                rank2::blocks_for_hyperplane(Rank2Hyperplane::CEq { k, l }, pd)
            };
            for k1 in 0..pd {
                for k2 in 0..pd {
                    for k3 in 0..pd {
                        if k1 == k2 || k2 == k3 || k1 == k3 {
                            continue;
                        }
                        if parent.coarsens(&ceq(k1, k2)) && parent.coarsens(&ceq(k2, k3)) {
                            cases += 1;
                            if !parent.coarsens(&ceq(k1, k3)) {
                                failures += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("descent/three-hyperplane-closure", failures, cases));

    // a/A constant on descended rank-2 blocks
    let mut cases = 0;
    let mut failures = 0;
    for p in 2..=3usize {
        for d in 1..=cfg.max_d.min(2) {
            for _ in 0..5 {
                let e = 2 * p;
                let de = e * d;
                let m: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
                let n = rng.gen_range(-3..=3);
                let params = GroupParams::new(de, e, 2).unwrap();
                let g = descent::blocks_for_group(params, &m, n).unwrap();
                let aa = g.aa.expect("rank-2 route carries a/A");
                let value_of = |label: &descent::CharLabel| {
                    aa.iter()
                        .find(|entry| entry.label == *label)
                        .map(|entry| (entry.a, entry.big_a))
                        .unwrap()
                };
                for block in g.blocks.blocks() {
                    cases += 1;
                    let v = value_of(&block[0]);
                    if block.iter().any(|l| value_of(l) != v) {
                        failures += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::from_count("descent/a-A-on-descended-blocks", failures, cases));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_p(1) = p, Φ_(p^a)(1) = p, composite orders give 1
        let at_one = |n: u32| cyclotomic_polynomial(n).iter().sum::<i64>();
        assert_eq!(at_one(5), 5);
        assert_eq!(at_one(8), 2);
        assert_eq!(at_one(9), 3);
        assert_eq!(at_one(10), 1);
        assert_eq!(at_one(12), 1);
    }

    #[test]
    fn norm_oracle_examples() {
        assert_eq!(norm_prime_divisors(2, 0, 1), BTreeSet::from([2]));
        assert!(norm_prime_divisors(6, 0, 1).is_empty());
        assert_eq!(norm_prime_divisors(6, 0, 2), BTreeSet::from([3]));
    }

    #[test]
    fn bfs_oracle_on_known_case() {
        let spec = AkSpecialization::new(2, 2, vec![0, 0], 1).unwrap();
        assert_eq!(
            bfs_rouquier_blocks(&spec),
            ariki_koike::rouquier_blocks(&spec)
        );
    }

    #[test]
    fn default_suite_passes() {
        let cfg = VerifyConfig {
            max_d: 2,
            max_r: 2,
            seed: 7,
        };
        for check in run_suite(Suite::All, &cfg) {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
