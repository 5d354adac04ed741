//! The single number-theoretic predicate behind every essentiality condition:
//! whether `ζ_d^s - ζ_d^t` lies in some prime ideal of `Z[ζ_d]`.
//!
//! Writing `ζ_d^s - ζ_d^t = ζ_d^s (1 - ζ_d^(t-s))` reduces the question to
//! when `1 - ζ_n` is a non-unit, for `n` the order of `ζ_d^(t-s)`. That
//! happens exactly when `n` is a prime power `p^a`, and then `p` is the only
//! rational prime below a qualifying ideal (`Φ_n(1) = p` for prime powers and
//! `1` otherwise). The norm-based oracle in [`crate::verify`] checks this
//! reduction independently.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// The data of a difference `ζ_d^s - ζ_d^t` with `s ≠ t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootDifference {
    d: u32,
    s: u32,
    t: u32,
}

impl RootDifference {
    pub fn new(d: u32, s: u32, t: u32) -> Result<Self> {
        if s >= d {
            return Err(Error::ResidueOutOfRange {
                residue: s,
                order: d,
            });
        }
        if t >= d {
            return Err(Error::ResidueOutOfRange {
                residue: t,
                order: d,
            });
        }
        if s == t {
            return Err(Error::EqualResidues(s));
        }
        Ok(Self { d, s, t })
    }

    /// The order of `ζ_d^(t-s)`, always `> 1`.
    pub fn order_of_ratio(&self) -> u32 {
        let diff = (self.t as i64 - self.s as i64).rem_euclid(self.d as i64) as u32;
        self.d / self.d.gcd(&diff)
    }
}

/// Set of rational primes; here always empty or a singleton.
pub type PrimeSet = BTreeSet<u64>;

/// If `n = p^a` with `a >= 1`, returns `p`.
pub fn prime_power_base(n: u32) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return (m == 1).then_some(p as u64);
        }
        p += 1;
    }
    Some(n as u64) // n itself is prime
}

/// The primes `p` such that `ζ_d^s - ζ_d^t` lies in a prime ideal of
/// `Z[ζ_d]` above `p`. The result has at most one element.
pub fn prime_divisors_of_root_difference(rd: RootDifference) -> PrimeSet {
    let mut out = PrimeSet::new();
    if let Some(p) = prime_power_base(rd.order_of_ratio()) {
        out.insert(p);
    }
    out
}

/// Whether `(s, t)` is a pair on which essential hyperplanes exist, i.e.
/// whether `ζ_d^s - ζ_d^t` is a non-unit. Requires `0 <= s < t < d`.
pub fn is_essential_pair(d: u32, s: u32, t: u32) -> bool {
    debug_assert!(s < t && t < d);
    let rd = RootDifference::new(d, s, t).expect("s < t < d");
    prime_power_base(rd.order_of_ratio()).is_some()
}

/// The unique prime under the qualifying ideal for the pair `(s, t)`, if any.
pub fn essential_prime(d: u32, s: u32, t: u32) -> Option<u64> {
    let rd = RootDifference::new(d, s, t).expect("distinct residues");
    prime_power_base(rd.order_of_ratio())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_examples() {
        // 1 - ζ_2 = 2
        let rd = RootDifference::new(2, 0, 1).unwrap();
        assert_eq!(
            prime_divisors_of_root_difference(rd),
            PrimeSet::from([2u64])
        );
        // order 6 is not a prime power: Φ_6(1) = 1
        let rd = RootDifference::new(6, 0, 1).unwrap();
        assert!(prime_divisors_of_root_difference(rd).is_empty());
        // order 3: Φ_3(1) = 3
        let rd = RootDifference::new(6, 0, 2).unwrap();
        assert_eq!(
            prime_divisors_of_root_difference(rd),
            PrimeSet::from([3u64])
        );
    }

    #[test]
    fn essential_pair_examples() {
        assert!(is_essential_pair(2, 0, 1));
        assert!(!is_essential_pair(6, 0, 1));
        // ζ_4^1 - ζ_4^3: ratio has order 2
        assert!(is_essential_pair(4, 1, 3));
    }

    #[test]
    fn rejects_degenerate_differences() {
        assert_eq!(RootDifference::new(5, 3, 3), Err(Error::EqualResidues(3)));
        assert!(RootDifference::new(5, 5, 0).is_err());
    }

    #[test]
    fn symmetry_and_translation_invariance() {
        for d in 2..=16u32 {
            for s in 0..d {
                for t in 0..d {
                    if s == t {
                        continue;
                    }
                    let st = prime_divisors_of_root_difference(RootDifference::new(d, s, t).unwrap());
                    let ts = prime_divisors_of_root_difference(RootDifference::new(d, t, s).unwrap());
                    assert_eq!(st, ts);
                    assert!(st.len() <= 1);
                    let shifted = RootDifference::new(d, (s + 1) % d, (t + 1) % d);
                    if let Ok(sh) = shifted {
                        assert_eq!(st, prime_divisors_of_root_difference(sh));
                    }
                }
            }
        }
    }

    #[test]
    fn prime_power_base_small_values() {
        let expected: [(u32, Option<u64>); 11] = [
            (2, Some(2)),
            (3, Some(3)),
            (4, Some(2)),
            (5, Some(5)),
            (6, None),
            (7, Some(7)),
            (8, Some(2)),
            (9, Some(3)),
            (10, None),
            (12, None),
            (27, Some(3)),
        ];
        for (n, want) in expected {
            assert_eq!(prime_power_base(n), want, "n = {n}");
        }
    }
}
