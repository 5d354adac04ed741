//! Factored Schur elements and the valuation/degree bookkeeping.
//!
//! A generic Schur element is stored through the only data its consumers
//! need: the rational primes dividing the leading coefficient, a leading
//! monomial, and a list of cyclotomic factors `Ψ(M)^n` each reduced to its
//! primitive monomial `M`, the degree of `Ψ`, the prime dividing `Ψ(1)`
//! when there is one, and the multiplicity `n`. Valuations and degrees of a
//! specialised element then come from sign-splitting the specialised
//! exponents, with no polynomial arithmetic at all.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Positive part: `n` if `n > 0`, else `0`.
pub fn pos_part(n: i64) -> i64 {
    n.max(0)
}

/// Negative part: `n` if `n < 0`, else `0`.
pub fn neg_part(n: i64) -> i64 {
    n.min(0)
}

/// Integer exponents of a Laurent monomial in a fixed list of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExponentVector {
    exps: Vec<i64>,
}

impl ExponentVector {
    pub fn new(exps: Vec<i64>) -> Self {
        Self { exps }
    }

    pub fn zero(len: usize) -> Self {
        Self {
            exps: vec![0; len],
        }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|&e| -e).collect(),
        }
    }

    /// gcd of the absolute exponents; 0 for the zero vector.
    pub fn content(&self) -> i64 {
        self.exps.iter().fold(0i64, |g, &e| g.gcd(&e))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Equality up to global inversion of the monomial.
    pub fn eq_up_to_negation(&self, other: &Self) -> bool {
        self == other || *self == other.negated()
    }
}

/// One factor `Ψ(M)^multiplicity` of a Schur element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloFactor {
    pub monomial: ExponentVector,
    pub degree: u32,
    pub psi_at_one_prime: Option<u64>,
    pub multiplicity: u32,
}

impl CycloFactor {
    pub fn new(
        monomial: ExponentVector,
        degree: u32,
        psi_at_one_prime: Option<u64>,
        multiplicity: u32,
    ) -> Result<Self> {
        if !monomial.is_primitive() {
            return Err(Error::ImprimitiveMonomial(monomial.exps().to_vec()));
        }
        assert!(degree >= 1 && multiplicity >= 1);
        Ok(Self {
            monomial,
            degree,
            psi_at_one_prime,
            multiplicity,
        })
    }
}

/// A Schur element in factored form, over `m` variables grouped into
/// hyperplane-orbit blocks. Every monomial must have zero exponent sum on
/// each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredSchurElement {
    leading_primes: BTreeSet<u64>,
    leading_monomial: ExponentVector,
    factors: Vec<CycloFactor>,
    block_sizes: Vec<usize>,
}

impl FactoredSchurElement {
    pub fn new(
        leading_primes: BTreeSet<u64>,
        leading_monomial: ExponentVector,
        factors: Vec<CycloFactor>,
        block_sizes: Vec<usize>,
    ) -> Result<Self> {
        let m = leading_monomial.len();
        if block_sizes.iter().sum::<usize>() != m {
            return Err(Error::BlockCoverMismatch {
                got: block_sizes.iter().sum(),
                expected: m,
            });
        }
        check_block_sums(&leading_monomial, &block_sizes)?;
        for f in &factors {
            if f.monomial.len() != m {
                return Err(Error::ExponentLengthMismatch {
                    got: f.monomial.len(),
                    expected: m,
                });
            }
            check_block_sums(&f.monomial, &block_sizes)?;
        }
        Ok(Self {
            leading_primes,
            leading_monomial,
            factors,
            block_sizes,
        })
    }

    pub fn leading_primes(&self) -> &BTreeSet<u64> {
        &self.leading_primes
    }

    pub fn leading_monomial(&self) -> &ExponentVector {
        &self.leading_monomial
    }

    pub fn factors(&self) -> &[CycloFactor] {
        &self.factors
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// `(val, deg)` of the specialisation of this element, where each
    /// variable `v_i` is sent to `y^(weights[i])`:
    ///
    /// `val = φ(N) + Σ n_i · deg(Ψ_i) · φ(M_i)^-` and
    /// `deg = φ(N) + Σ n_i · deg(Ψ_i) · φ(M_i)^+`.
    pub fn valuation_and_degree(&self, spec: &Specialization) -> Result<(i64, i64)> {
        let n = specialize_monomial(&self.leading_monomial, spec)?;
        let mut val = pos_part(n) + neg_part(n);
        let mut deg = val;
        for f in &self.factors {
            let e = specialize_monomial(&f.monomial, spec)?;
            let weight = f.multiplicity as i64 * f.degree as i64;
            val += weight * neg_part(e);
            deg += weight * pos_part(e);
        }
        Ok((val, deg))
    }

    /// Whether the primitive monomial `m` is `p`-essential for this element:
    /// some factor carries `m` up to inversion and has `Ψ(1)` divisible
    /// by `p`.
    pub fn is_essential_for(&self, m: &ExponentVector, p: u64) -> bool {
        self.factors.iter().any(|f| {
            f.psi_at_one_prime == Some(p) && f.monomial.eq_up_to_negation(m)
        })
    }
}

fn check_block_sums(m: &ExponentVector, block_sizes: &[usize]) -> Result<()> {
    let mut start = 0;
    for (i, &len) in block_sizes.iter().enumerate() {
        let sum: i64 = m.exps()[start..start + len].iter().sum();
        if sum != 0 {
            return Err(Error::NonZeroBlockSum { block: i });
        }
        start += len;
    }
    Ok(())
}

/// Images `v_i ↦ y^(n_i)` of the algebra variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    weights: Vec<i64>,
}

impl Specialization {
    pub fn new(weights: Vec<i64>) -> Self {
        Self { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

/// The exponent of `y` in the image of a monomial: the dot product of the
/// exponent vector with the specialisation weights.
pub fn specialize_monomial(m: &ExponentVector, spec: &Specialization) -> Result<i64> {
    if m.len() != spec.weights.len() {
        return Err(Error::ExponentLengthMismatch {
            got: m.len(),
            expected: spec.weights.len(),
        });
    }
    Ok(m.exps()
        .iter()
        .zip(&spec.weights)
        .map(|(&e, &w)| e * w)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(exps: &[i64]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    #[test]
    fn sign_parts() {
        assert_eq!((pos_part(0), neg_part(0)), (0, 0));
        assert_eq!((pos_part(5), neg_part(5)), (5, 0));
        assert_eq!((pos_part(-3), neg_part(-3)), (0, -3));
    }

    #[test]
    fn specialization_examples() {
        let m = ev(&[1, -1]);
        assert_eq!(specialize_monomial(&m, &Specialization::new(vec![3, 3])).unwrap(), 0);
        assert_eq!(specialize_monomial(&m, &Specialization::new(vec![5, 2])).unwrap(), 3);
        let m = ev(&[2, -1, -1]);
        assert_eq!(
            specialize_monomial(&m, &Specialization::new(vec![1, 1, 1])).unwrap(),
            0
        );
        assert!(specialize_monomial(&m, &Specialization::new(vec![1, 1])).is_err());
    }

    fn single_factor_element() -> FactoredSchurElement {
        FactoredSchurElement::new(
            BTreeSet::new(),
            ExponentVector::zero(2),
            vec![CycloFactor::new(ev(&[1, -1]), 1, Some(2), 1).unwrap()],
            vec![2],
        )
        .unwrap()
    }

    #[test]
    fn valuation_and_degree_examples() {
        let unit = FactoredSchurElement::new(
            BTreeSet::new(),
            ExponentVector::zero(2),
            vec![],
            vec![2],
        )
        .unwrap();
        assert_eq!(
            unit.valuation_and_degree(&Specialization::new(vec![7, -4])).unwrap(),
            (0, 0)
        );

        let f = single_factor_element();
        assert_eq!(
            f.valuation_and_degree(&Specialization::new(vec![2, 5])).unwrap(),
            (-3, 0)
        );
        assert_eq!(
            f.valuation_and_degree(&Specialization::new(vec![5, 2])).unwrap(),
            (0, 3)
        );
    }

    #[test]
    fn essentiality_up_to_inversion() {
        let f = single_factor_element();
        assert!(f.is_essential_for(&ev(&[1, -1]), 2));
        assert!(!f.is_essential_for(&ev(&[1, -1]), 3));
        assert!(f.is_essential_for(&ev(&[-1, 1]), 2));
    }

    #[test]
    fn rejects_malformed_elements() {
        assert!(CycloFactor::new(ev(&[2, -2]), 1, None, 1).is_err());
        // non-zero block sum
        let bad = FactoredSchurElement::new(
            BTreeSet::new(),
            ev(&[1, 0]),
            vec![],
            vec![2],
        );
        assert_eq!(bad.unwrap_err(), Error::NonZeroBlockSum { block: 0 });
        // blocks must cover the variables
        let bad = FactoredSchurElement::new(BTreeSet::new(), ev(&[0, 0]), vec![], vec![1]);
        assert!(bad.is_err());
    }

    #[test]
    fn sum_identity_and_scaling() {
        // deg + val = 2 φ(N) + Σ n_i deg(Ψ_i) φ(M_i), and both scale linearly.
        let f = FactoredSchurElement::new(
            BTreeSet::from([2]),
            ev(&[1, -1, 0, 0]),
            vec![
                CycloFactor::new(ev(&[1, -1, 0, 0]), 2, Some(2), 1).unwrap(),
                CycloFactor::new(ev(&[0, 0, 1, -1]), 1, None, 3).unwrap(),
                CycloFactor::new(ev(&[1, -1, 1, -1]), 2, Some(3), 2).unwrap(),
            ],
            vec![2, 2],
        )
        .unwrap();
        for weights in [[3, -1, 0, 2], [0, 0, 0, 0], [-5, 4, 4, -5], [1, 2, 3, 4]] {
            let spec = Specialization::new(weights.to_vec());
            let (val, deg) = f.valuation_and_degree(&spec).unwrap();
            let phi_n = specialize_monomial(f.leading_monomial(), &spec).unwrap();
            let linear: i64 = f
                .factors()
                .iter()
                .map(|fac| {
                    fac.multiplicity as i64
                        * fac.degree as i64
                        * specialize_monomial(&fac.monomial, &spec).unwrap()
                })
                .sum();
            assert_eq!(val + deg, 2 * phi_n + linear);
            assert!(val <= deg);

            let scaled = Specialization::new(weights.iter().map(|w| 3 * w).collect());
            let (sval, sdeg) = f.valuation_and_degree(&scaled).unwrap();
            assert_eq!((sval, sdeg), (3 * val, 3 * deg));
        }
        // constant on each block -> everything collapses to zero
        let (val, deg) = f
            .valuation_and_degree(&Specialization::new(vec![4, 4, -7, -7]))
            .unwrap();
        assert_eq!((val, deg), (0, 0));
    }
}
