//! The family `G(2d,2,2)`: character labels, factored Schur elements,
//! essential hyperplanes, per-hyperplane blocks and the `a`/`A` invariants.
//!
//! The group has `4d` linear characters `χ_ijk` and `d(d-1)` characters
//! `χ¹_kl, χ²_kl` of degree 2 (with `χ_kl = χ_lk`, so `k < l` is the
//! canonical form). A cyclotomic specialisation is a triple of integer
//! weight vectors `a = (a_0, a_1)`, `b = (b_0, b_1)`, `c = (c_0..c_(d-1))`.
//!
//! Schur elements are stored over the `d + 4` variables `(a_0, a_1, b_0,
//! b_1, c_*)` with a global denominator of 2: every full-strength cyclotomic
//! bundle carries degree 2 and the four half-exponent factors of the
//! degree-2 characters carry degree 1, so `valuation_and_degree` returns
//! exactly `2a` and `2A` in `q`-units and all arithmetic stays integral.
//! Halving at the end can leave a genuinely half-integral `a` for the
//! degree-2 characters, hence the rational-valued interface.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;

use crate::blocks::BlockPartition;
use crate::cyclotomic::{essential_prime, is_essential_pair};
use crate::error::{Error, Result};
use crate::schur::{neg_part, CycloFactor, ExponentVector, FactoredSchurElement, Specialization};

/// An irreducible character of `G(2d,2,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank2Label {
    /// Linear character `χ_ijk`, `0 <= i, j <= 1`, `0 <= k < d`.
    Lin { i: u8, j: u8, k: usize },
    /// Degree-2 character `χ^sup_kl`, `0 <= k < l < d`, `sup ∈ {1, 2}`.
    Two { k: usize, l: usize, sup: u8 },
}

impl Rank2Label {
    /// Degree-2 label with the pair normalised to `k < l`.
    pub fn two(k: usize, l: usize, sup: u8) -> Self {
        let (k, l) = if k < l { (k, l) } else { (l, k) };
        Rank2Label::Two { k, l, sup }
    }
}

impl fmt::Display for Rank2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rank2Label::Lin { i, j, k } => write!(f, "chi[{i},{j},{k}]"),
            Rank2Label::Two { k, l, sup } => write!(f, "chi2[{k},{l},{sup}]"),
        }
    }
}

/// All `4d + d(d-1)` labels for `G(2d,2,2)`, in canonical order.
pub fn labels(d: usize) -> Vec<Rank2Label> {
    let mut out = Vec::with_capacity(4 * d + d * d - d);
    for i in 0..2u8 {
        for j in 0..2u8 {
            for k in 0..d {
                out.push(Rank2Label::Lin { i, j, k });
            }
        }
    }
    for k in 0..d {
        for l in (k + 1)..d {
            for sup in 1..=2u8 {
                out.push(Rank2Label::Two { k, l, sup });
            }
        }
    }
    out.sort();
    out
}

/// An essential hyperplane for `G(2d,2,2)` in the weight space
/// `(A_0, A_1, B_0, B_1, C_0..C_(d-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rank2Hyperplane {
    /// `A_0 = A_1`, essential above 2.
    AEq,
    /// `B_0 = B_1`, essential above 2.
    BEq,
    /// `C_k = C_l` for an essential pair `k < l`.
    CEq { k: usize, l: usize },
    /// `A_i - A_(1-i) + B_j - B_(1-j) + C_k - C_l = 0`, `k < l` essential.
    Quad { i: u8, j: u8, k: usize, l: usize },
}

impl fmt::Display for Rank2Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rank2Hyperplane::AEq => write!(f, "A0=A1"),
            Rank2Hyperplane::BEq => write!(f, "B0=B1"),
            Rank2Hyperplane::CEq { k, l } => write!(f, "C{k}=C{l}"),
            Rank2Hyperplane::Quad { i, j, k, l } => write!(
                f,
                "A{i}-A{}+B{j}-B{}+C{k}-C{l}=0",
                1 - i,
                1 - j
            ),
        }
    }
}

/// A cyclotomic specialisation `x_i ↦ (-1)^i q^(a_i)`, `y_j ↦ (-1)^j
/// q^(b_j)`, `z_k ↦ ζ_d^k q^(c_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Spec {
    pub d: usize,
    pub a: [i64; 2],
    pub b: [i64; 2],
    pub c: Vec<i64>,
}

impl Rank2Spec {
    pub fn new(d: usize, a: [i64; 2], b: [i64; 2], c: Vec<i64>) -> Result<Self> {
        if c.len() != d {
            return Err(Error::WeightLengthMismatch {
                got: c.len(),
                expected: d,
            });
        }
        assert!(d >= 1);
        Ok(Self { d, a, b, c })
    }

    /// The weights as a flat specialisation over `(a_0, a_1, b_0, b_1, c_*)`.
    pub fn flat(&self) -> Specialization {
        let mut w = vec![self.a[0], self.a[1], self.b[0], self.b[1]];
        w.extend_from_slice(&self.c);
        Specialization::new(w)
    }
}

// Variable indices in the flat exponent vectors.
fn num_vars(d: usize) -> usize {
    d + 4
}

fn x_diff(d: usize, i: u8) -> Vec<i64> {
    let mut v = vec![0; num_vars(d)];
    v[i as usize] = 1;
    v[1 - i as usize] = -1;
    v
}

fn y_diff(d: usize, j: u8) -> Vec<i64> {
    let mut v = vec![0; num_vars(d)];
    v[2 + j as usize] = 1;
    v[2 + (1 - j as usize)] = -1;
    v
}

fn c_diff(d: usize, k: usize, l: usize) -> Vec<i64> {
    let mut v = vec![0; num_vars(d)];
    v[4 + k] = 1;
    v[4 + l] = -1;
    v
}

fn add(mut u: Vec<i64>, v: &[i64]) -> Vec<i64> {
    for (a, b) in u.iter_mut().zip(v) {
        *a += b;
    }
    u
}

fn sub(mut u: Vec<i64>, v: &[i64]) -> Vec<i64> {
    for (a, b) in u.iter_mut().zip(v) {
        *a -= b;
    }
    u
}

/// The primitive monomial of an essential hyperplane and the prime it is
/// essential for.
pub fn hyperplane_monomial(h: Rank2Hyperplane, d: usize) -> (ExponentVector, u64) {
    match h {
        Rank2Hyperplane::AEq => (ExponentVector::new(x_diff(d, 0)), 2),
        Rank2Hyperplane::BEq => (ExponentVector::new(y_diff(d, 0)), 2),
        Rank2Hyperplane::CEq { k, l } => (
            ExponentVector::new(c_diff(d, k, l)),
            essential_prime(d as u32, k as u32, l as u32).expect("essential pair"),
        ),
        Rank2Hyperplane::Quad { i, j, k, l } => (
            ExponentVector::new(add(add(x_diff(d, i), &y_diff(d, j)), &c_diff(d, k, l))),
            essential_prime(d as u32, k as u32, l as u32).expect("essential pair"),
        ),
    }
}

fn root_prime(d: usize, k: usize, l: usize) -> Option<u64> {
    essential_prime(d as u32, k as u32, l as u32)
}

/// The factored generic Schur element of a character, over the flat variable
/// list with blocks `[2, 2, d]`. See the module notes for the degree
/// bookkeeping that makes `valuation_and_degree` return `2a` and `2A`.
pub fn schur_element(label: Rank2Label, d: usize) -> FactoredSchurElement {
    let mut factors: Vec<CycloFactor> = Vec::new();
    let mut leading = BTreeSet::new();
    match label {
        Rank2Label::Lin { i, j, k } => {
            let x = x_diff(d, i);
            let y = y_diff(d, j);
            factors.push(CycloFactor::new(ExponentVector::new(x.clone()), 2, Some(2), 1).unwrap());
            factors.push(CycloFactor::new(ExponentVector::new(y.clone()), 2, Some(2), 1).unwrap());
            for m in 0..d {
                if m == k {
                    continue;
                }
                let z = c_diff(d, k, m);
                let p = root_prime(d, k, m);
                factors.push(CycloFactor::new(ExponentVector::new(z.clone()), 2, p, 1).unwrap());
                let quad = add(add(x.clone(), &y), &z);
                factors.push(CycloFactor::new(ExponentVector::new(quad), 2, p, 1).unwrap());
            }
        }
        Rank2Label::Two { k, l, .. } => {
            leading.insert(2);
            for m in 0..d {
                if m == k || m == l {
                    continue;
                }
                for first in [k, l] {
                    let z = c_diff(d, first, m);
                    let p = root_prime(d, first, m);
                    factors.push(CycloFactor::new(ExponentVector::new(z), 2, p, 1).unwrap());
                }
            }
            // The four half-exponent factors, at degree 1 each.
            let p = root_prime(d, k, l);
            for h in 0..2u8 {
                let plus = add(add(x_diff(d, h), &y_diff(d, h)), &c_diff(d, k, l));
                let minus = sub(sub(x_diff(d, h), &y_diff(d, h)), &c_diff(d, k, l));
                factors.push(CycloFactor::new(ExponentVector::new(plus), 1, p, 1).unwrap());
                factors.push(CycloFactor::new(ExponentVector::new(minus), 1, p, 1).unwrap());
            }
        }
    }
    FactoredSchurElement::new(
        leading,
        ExponentVector::zero(num_vars(d)),
        factors,
        vec![2, 2, d],
    )
    .expect("factors are primitive and block-balanced")
}

/// `a + A` in closed form.
pub fn a_plus_a_value(label: Rank2Label, spec: &Rank2Spec) -> i64 {
    let d = spec.d as i64;
    let csum: i64 = spec.c.iter().sum();
    match label {
        Rank2Label::Lin { i, j, k } => {
            let da = spec.a[i as usize] - spec.a[1 - i as usize];
            let db = spec.b[j as usize] - spec.b[1 - j as usize];
            d * (da + db + 2 * spec.c[k]) - 2 * csum
        }
        Rank2Label::Two { k, l, .. } => d * (spec.c[k] + spec.c[l]) - 2 * csum,
    }
}

/// The valuation `a` of the specialised Schur element, in closed form.
pub fn a_value(label: Rank2Label, spec: &Rank2Spec) -> Rational64 {
    match label {
        Rank2Label::Lin { i, j, k } => {
            let da = spec.a[i as usize] - spec.a[1 - i as usize];
            let db = spec.b[j as usize] - spec.b[1 - j as usize];
            let mut a = neg_part(da) + neg_part(db);
            for m in 0..spec.d {
                if m == k {
                    continue;
                }
                let dc = spec.c[k] - spec.c[m];
                a += neg_part(dc) + neg_part(da + db + dc);
            }
            Rational64::from_integer(a)
        }
        Rank2Label::Two { k, l, .. } => {
            let mut whole = 0i64;
            for m in 0..spec.d {
                if m == k || m == l {
                    continue;
                }
                whole += neg_part(spec.c[k] - spec.c[m]) + neg_part(spec.c[l] - spec.c[m]);
            }
            let dc = spec.c[k] - spec.c[l];
            let mut half = 0i64;
            for h in 0..2 {
                let da = spec.a[h] - spec.a[1 - h];
                let db = spec.b[h] - spec.b[1 - h];
                half += neg_part(da + db + dc) + neg_part(da - db - dc);
            }
            Rational64::from_integer(whole) + Rational64::new(half, 2)
        }
    }
}

/// The degree `A`, via `A = (a + A) - a`.
pub fn big_a_value(label: Rank2Label, spec: &Rank2Spec) -> Rational64 {
    Rational64::from_integer(a_plus_a_value(label, spec)) - a_value(label, spec)
}

/// `a` and `A` through the factored Schur element instead of the closed
/// forms; the two routes must agree.
pub fn a_big_a_from_schur(label: Rank2Label, spec: &Rank2Spec) -> (Rational64, Rational64) {
    let element = schur_element(label, spec.d);
    let (val, deg) = element
        .valuation_and_degree(&spec.flat())
        .expect("flat spec length matches");
    (Rational64::new(val, 2), Rational64::new(deg, 2))
}

/// All essential hyperplanes for `G(2d,2,2)`.
pub fn hyperplanes(d: usize) -> Vec<Rank2Hyperplane> {
    let mut out = vec![Rank2Hyperplane::AEq, Rank2Hyperplane::BEq];
    for k in 0..d {
        for l in (k + 1)..d {
            if is_essential_pair(d as u32, k as u32, l as u32) {
                out.push(Rank2Hyperplane::CEq { k, l });
                for i in 0..2u8 {
                    for j in 0..2u8 {
                        out.push(Rank2Hyperplane::Quad { i, j, k, l });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The essential hyperplanes the weights of `spec` lie on.
pub fn hyperplanes_containing(spec: &Rank2Spec) -> Vec<Rank2Hyperplane> {
    hyperplanes(spec.d)
        .into_iter()
        .filter(|h| match *h {
            Rank2Hyperplane::AEq => spec.a[0] == spec.a[1],
            Rank2Hyperplane::BEq => spec.b[0] == spec.b[1],
            Rank2Hyperplane::CEq { k, l } => spec.c[k] == spec.c[l],
            Rank2Hyperplane::Quad { i, j, k, l } => {
                spec.a[i as usize] - spec.a[1 - i as usize] + spec.b[j as usize]
                    - spec.b[1 - j as usize]
                    + spec.c[k]
                    - spec.c[l]
                    == 0
            }
        })
        .collect()
}

fn classes_to_partition(
    d: usize,
    classes: Vec<Vec<Rank2Label>>,
) -> BlockPartition<Rank2Label> {
    let mut used: BTreeSet<Rank2Label> = BTreeSet::new();
    for class in &classes {
        for l in class {
            assert!(used.insert(*l), "label {l} listed twice");
        }
    }
    let mut all = classes;
    for label in labels(d) {
        if !used.contains(&label) {
            all.push(vec![label]);
        }
    }
    BlockPartition::from_classes(all)
}

/// The Rouquier blocks associated with no essential hyperplane: every pair
/// `{χ¹_kl, χ²_kl}` fuses (the leading coefficient -2 is never invertible)
/// and the linear characters are singletons.
pub fn no_hyperplane_blocks(d: usize) -> BlockPartition<Rank2Label> {
    let mut classes = Vec::new();
    for k in 0..d {
        for l in (k + 1)..d {
            classes.push(vec![Rank2Label::two(k, l, 1), Rank2Label::two(k, l, 2)]);
        }
    }
    classes_to_partition(d, classes)
}

/// The Rouquier blocks associated with a single essential hyperplane.
pub fn blocks_for_hyperplane(h: Rank2Hyperplane, d: usize) -> BlockPartition<Rank2Label> {
    let mut classes: Vec<Vec<Rank2Label>> = Vec::new();
    let all_two_pairs = |classes: &mut Vec<Vec<Rank2Label>>, skip: &dyn Fn(usize, usize) -> bool| {
        for r in 0..d {
            for s in (r + 1)..d {
                if !skip(r, s) {
                    classes.push(vec![Rank2Label::two(r, s, 1), Rank2Label::two(r, s, 2)]);
                }
            }
        }
    };
    match h {
        Rank2Hyperplane::AEq => {
            for j in 0..2u8 {
                for k in 0..d {
                    classes.push(vec![
                        Rank2Label::Lin { i: 0, j, k },
                        Rank2Label::Lin { i: 1, j, k },
                    ]);
                }
            }
            all_two_pairs(&mut classes, &|_, _| false);
        }
        Rank2Hyperplane::BEq => {
            for i in 0..2u8 {
                for k in 0..d {
                    classes.push(vec![
                        Rank2Label::Lin { i, j: 0, k },
                        Rank2Label::Lin { i, j: 1, k },
                    ]);
                }
            }
            all_two_pairs(&mut classes, &|_, _| false);
        }
        Rank2Hyperplane::CEq { k, l } => {
            for i in 0..2u8 {
                for j in 0..2u8 {
                    classes.push(vec![
                        Rank2Label::Lin { i, j, k },
                        Rank2Label::Lin { i, j, k: l },
                    ]);
                }
            }
            for m in 0..d {
                if m == k || m == l {
                    continue;
                }
                classes.push(vec![
                    Rank2Label::two(k, m, 1),
                    Rank2Label::two(k, m, 2),
                    Rank2Label::two(l, m, 1),
                    Rank2Label::two(l, m, 2),
                ]);
            }
            classes.push(vec![Rank2Label::two(k, l, 1), Rank2Label::two(k, l, 2)]);
            all_two_pairs(&mut classes, &|r, s| {
                r == k || r == l || s == k || s == l
            });
        }
        Rank2Hyperplane::Quad { i, j, k, l } => {
            classes.push(vec![
                Rank2Label::Lin { i, j, k },
                Rank2Label::Lin {
                    i: 1 - i,
                    j: 1 - j,
                    k: l,
                },
                Rank2Label::two(k, l, 1),
                Rank2Label::two(k, l, 2),
            ]);
            all_two_pairs(&mut classes, &|r, s| (r, s) == (k, l));
        }
    }
    classes_to_partition(d, classes)
}

/// The Rouquier blocks of the cyclotomic Hecke algebra of `G(2d,2,2)` given
/// by `spec`: the join over all contained essential hyperplanes, or the
/// no-hyperplane partition for generic weights.
pub fn blocks(spec: &Rank2Spec) -> BlockPartition<Rank2Label> {
    let contained = hyperplanes_containing(spec);
    if contained.is_empty() {
        return no_hyperplane_blocks(spec.d);
    }
    let parts: Vec<BlockPartition<Rank2Label>> = contained
        .into_iter()
        .map(|h| blocks_for_hyperplane(h, spec.d))
        .collect();
    BlockPartition::join_all(labels(spec.d), parts.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn label_census() {
        for d in 1..=5 {
            let ls = labels(d);
            assert_eq!(ls.len(), 4 * d + d * (d - 1));
            assert!(ls.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn schur_element_shapes() {
        // d = 1: empty product over l != k leaves only the X and Y bundles.
        let s = schur_element(Rank2Label::Lin { i: 0, j: 0, k: 0 }, 1);
        assert_eq!(s.factors().len(), 2);
        assert!(s.leading_primes().is_empty());

        let s = schur_element(Rank2Label::Lin { i: 0, j: 0, k: 0 }, 2);
        let monomials: Vec<&[i64]> = s.factors().iter().map(|f| f.monomial.exps()).collect();
        assert_eq!(
            monomials,
            vec![
                &[1, -1, 0, 0, 0, 0][..],
                &[0, 0, 1, -1, 0, 0][..],
                &[0, 0, 0, 0, 1, -1][..],
                &[1, -1, 1, -1, 1, -1][..],
            ]
        );

        let s = schur_element(Rank2Label::Two { k: 0, l: 1, sup: 1 }, 2);
        assert_eq!(s.leading_primes().iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(s.factors().len(), 4);
        assert!(s.factors().iter().all(|f| f.degree == 1));
    }

    #[test]
    fn aa_examples() {
        let spec = Rank2Spec::new(1, [0, 0], [0, 0], vec![0]).unwrap();
        let lin = Rank2Label::Lin { i: 0, j: 0, k: 0 };
        assert_eq!(a_value(lin, &spec), rat(0));
        assert_eq!(a_plus_a_value(lin, &spec), 0);
        assert_eq!(big_a_value(lin, &spec), rat(0));

        let spec = Rank2Spec::new(2, [0, 0], [0, 0], vec![0, 0]).unwrap();
        assert_eq!(a_plus_a_value(Rank2Label::two(0, 1, 1), &spec), 0);

        let spec = Rank2Spec::new(2, [1, 0], [0, 0], vec![0, 0]).unwrap();
        let lin = Rank2Label::Lin { i: 0, j: 0, k: 0 };
        assert_eq!(a_plus_a_value(lin, &spec), 2);
        assert_eq!(a_value(lin, &spec), rat(0));
        assert_eq!(big_a_value(lin, &spec), rat(2));
        let (a, big_a) = a_big_a_from_schur(lin, &spec);
        assert_eq!((a, big_a), (rat(0), rat(2)));
    }

    #[test]
    fn half_integral_a_for_degree_two() {
        // The four half-exponent summands need not pair up to an even total.
        let spec = Rank2Spec::new(2, [2, 0], [1, 0], vec![2, 0]).unwrap();
        let two = Rank2Label::two(0, 1, 1);
        assert_eq!(a_value(two, &spec), Rational64::new(-5, 2));
        assert_eq!(a_plus_a_value(two, &spec), 0);
        assert_eq!(big_a_value(two, &spec), Rational64::new(5, 2));
        let (a, big_a) = a_big_a_from_schur(two, &spec);
        assert_eq!(a, Rational64::new(-5, 2));
        assert_eq!(big_a, Rational64::new(5, 2));
    }

    #[test]
    fn closed_forms_match_schur_route() {
        let specs = [
            Rank2Spec::new(3, [1, -2], [0, 3], vec![2, 0, -1]).unwrap(),
            Rank2Spec::new(4, [0, 0], [5, -5], vec![1, 1, -3, 2]).unwrap(),
            Rank2Spec::new(1, [4, -1], [2, 2], vec![-3]).unwrap(),
        ];
        for spec in &specs {
            for label in labels(spec.d) {
                let (a, big_a) = a_big_a_from_schur(label, spec);
                assert_eq!(a, a_value(label, spec), "a mismatch for {label}");
                assert_eq!(big_a, big_a_value(label, spec), "A mismatch for {label}");
                assert_eq!(
                    a + big_a,
                    rat(a_plus_a_value(label, spec)),
                    "a+A mismatch for {label}"
                );
            }
        }
    }

    #[test]
    fn hyperplane_lists() {
        assert_eq!(
            hyperplanes(1),
            vec![Rank2Hyperplane::AEq, Rank2Hyperplane::BEq]
        );
        let hs = hyperplanes(2);
        assert_eq!(hs.len(), 7);
        assert!(hs.contains(&Rank2Hyperplane::CEq { k: 0, l: 1 }));

        // d = 6: the pair (0,1) is not essential, the pair (0,2) is.
        let hs = hyperplanes(6);
        assert!(!hs.contains(&Rank2Hyperplane::CEq { k: 0, l: 1 }));
        assert!(hs.contains(&Rank2Hyperplane::CEq { k: 0, l: 2 }));
    }

    #[test]
    fn containment_example() {
        let spec = Rank2Spec::new(2, [0, 0], [1, 0], vec![0, 0]).unwrap();
        assert_eq!(
            hyperplanes_containing(&spec),
            vec![
                Rank2Hyperplane::AEq,
                Rank2Hyperplane::CEq { k: 0, l: 1 },
                Rank2Hyperplane::Quad { i: 0, j: 1, k: 0, l: 1 },
                Rank2Hyperplane::Quad { i: 1, j: 0, k: 0, l: 1 },
            ]
        );
    }

    #[test]
    fn no_hyperplane_partition() {
        let p = no_hyperplane_blocks(2);
        assert_eq!(p.num_blocks(), 9);
        assert!(p
            .same_block(&Rank2Label::two(0, 1, 1), &Rank2Label::two(0, 1, 2))
            .unwrap());
    }

    #[test]
    fn quad_block_contents() {
        let h = Rank2Hyperplane::Quad { i: 0, j: 1, k: 0, l: 1 };
        let p = blocks_for_hyperplane(h, 3);
        let quad_block = vec![
            Rank2Label::Lin { i: 0, j: 1, k: 0 },
            Rank2Label::Lin { i: 1, j: 0, k: 1 },
            Rank2Label::two(0, 1, 1),
            Rank2Label::two(0, 1, 2),
        ];
        assert!(p.blocks().contains(&{
            let mut b = quad_block.clone();
            b.sort();
            b
        }));
    }

    #[test]
    fn ceq_block_contents() {
        let p = blocks_for_hyperplane(Rank2Hyperplane::CEq { k: 0, l: 2 }, 3);
        let quadruple = {
            let mut b = vec![
                Rank2Label::two(0, 1, 1),
                Rank2Label::two(0, 1, 2),
                Rank2Label::two(2, 1, 1),
                Rank2Label::two(2, 1, 2),
            ];
            b.sort();
            b
        };
        assert!(p.blocks().contains(&quadruple));
        assert!(p
            .same_block(
                &Rank2Label::Lin { i: 1, j: 0, k: 0 },
                &Rank2Label::Lin { i: 1, j: 0, k: 2 }
            )
            .unwrap());
    }

    #[test]
    fn generic_spec_gives_no_hyperplane_blocks() {
        let spec = Rank2Spec::new(3, [9, 0], [25, 0], vec![1, 4, 16]).unwrap();
        assert!(hyperplanes_containing(&spec).is_empty());
        assert_eq!(blocks(&spec), no_hyperplane_blocks(3));
    }

    #[test]
    fn two_pairs_always_fused() {
        let specs = [
            Rank2Spec::new(3, [0, 0], [0, 0], vec![0, 0, 0]).unwrap(),
            Rank2Spec::new(3, [7, 0], [0, 2], vec![5, -1, 3]).unwrap(),
        ];
        for spec in &specs {
            let p = blocks(spec);
            for k in 0..spec.d {
                for l in (k + 1)..spec.d {
                    assert!(p
                        .same_block(&Rank2Label::two(k, l, 1), &Rank2Label::two(k, l, 2))
                        .unwrap());
                }
            }
        }
    }
}
