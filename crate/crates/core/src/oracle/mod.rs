//! Brute-force oracle: enumerate labeled structures on small sets and count
//! fixed points to get cycle indices with no algebra involved.

mod families;
mod graph;
mod verify;

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::PowerSumPoly;
use crate::Rational;

pub use families::{
    BicoloredFamily, Cycles, Endofunctions, GraphFamily, LinearOrders, Permutations, RootedTrees,
    SetPartitions, Sets, Subsets,
};
pub use graph::{ColoredGraph, SmallGraph, MAX_VERTICES};
pub use verify::{
    compare_components, verify_families, verify_functor_laws, Check, Discrepancy, VerifyReport,
};

/// A permutation of `0..n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Self(images.into_iter().map(|i| i as u8).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Self::identity(n));
        std::iter::from_fn(move || {
            let current = next.take()?;
            next = current.successor();
            Some(current)
        })
    }

    fn successor(&self) -> Option<Self> {
        let mut v = self.0.clone();
        let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])?;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1])?;
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Self(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// Image of a subset given as a bitmask.
    pub fn apply_mask(&self, mask: u8) -> u8 {
        let mut out = 0u8;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            out |= 1 << self.0[i];
            rest &= rest - 1;
        }
        out
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Self(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.len()];
        let mut parts = Vec::new();
        for start in 0..self.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::new(parts).expect("cycle lengths are positive")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A species restricted to small label sets, given by explicit enumeration.
pub trait StructureFamily {
    type Structure: Clone + Eq + Hash + fmt::Debug;

    fn name(&self) -> &str;

    /// Largest label-set size this family agrees to enumerate.
    fn budget(&self) -> usize;

    /// Every structure on `0..n`, each exactly once.
    fn enumerate(&self, n: usize) -> Vec<Self::Structure>;

    /// Transport of `s` along the relabeling `sigma`.
    fn act(&self, sigma: &Permutation, s: &Self::Structure) -> Self::Structure;
}

/// A family with an extra involution commuting with relabeling.
pub trait TwistedFamily: StructureFamily {
    fn twist(&self, s: &Self::Structure) -> Self::Structure;
}

fn structures_within_budget<F: StructureFamily>(family: &F, n: usize) -> Result<Vec<F::Structure>> {
    if n > family.budget() {
        return Err(Error::OverBudget {
            family: family.name().to_string(),
            degree: n,
            budget: family.budget(),
        });
    }
    Ok(family.enumerate(n))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn index_from_fixed_points<S>(
    n: usize,
    structures: &[S],
    fixed: impl Fn(&Permutation, &S) -> bool,
) -> PowerSumPoly<Rational> {
    let mut totals: Vec<(Partition, BigInt)> = Vec::new();
    for sigma in Permutation::all(n) {
        let count = structures.iter().filter(|s| fixed(&sigma, s)).count();
        if count == 0 {
            continue;
        }
        let shape = sigma.cycle_type();
        match totals.iter_mut().find(|(p, _)| *p == shape) {
            Some((_, total)) => *total += count,
            None => totals.push((shape, BigInt::from(count))),
        }
    }
    let n_fact = factorial(n);
    let terms = totals
        .into_iter()
        .map(|(p, total)| (p, Rational::new(total, n_fact.clone())));
    PowerSumPoly::from_terms(n, terms).expect("every cycle type has size n")
}

/// `Σ_σ fix(σ) p_{type σ} / n!` over all of `S_n`.
pub fn empirical_cycle_index<F: StructureFamily>(
    family: &F,
    n: usize,
) -> Result<PowerSumPoly<Rational>> {
    let structures = structures_within_budget(family, n)?;
    Ok(index_from_fixed_points(n, &structures, |sigma, s| {
        family.act(sigma, s) == *s
    }))
}

/// As [`empirical_cycle_index`], counting structures fixed by the twist
/// followed by `σ`.
pub fn empirical_twisted_index<F: TwistedFamily>(
    family: &F,
    n: usize,
) -> Result<PowerSumPoly<Rational>> {
    let structures = structures_within_budget(family, n)?;
    Ok(index_from_fixed_points(n, &structures, |sigma, s| {
        family.twist(&family.act(sigma, s)) == *s
    }))
}

pub fn labeled_count<F: StructureFamily>(family: &F, n: usize) -> Result<BigInt> {
    Ok(BigInt::from(structures_within_budget(family, n)?.len()))
}

/// Isomorphism classes, found by sweeping out whole orbits.
pub fn unlabeled_count<F: StructureFamily>(family: &F, n: usize) -> Result<BigInt> {
    let structures = structures_within_budget(family, n)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut seen: HashSet<F::Structure> = HashSet::new();
    let mut orbits = BigInt::zero();
    for s in &structures {
        if seen.contains(s) {
            continue;
        }
        orbits += 1;
        for sigma in &perms {
            seen.insert(family.act(sigma, s));
        }
    }
    Ok(orbits)
}

/// Identity and composition laws of transport, plus closure of the
/// enumerated set, over every structure and every pair of permutations.
/// Returns a description of the first violation.
pub fn functor_law_check<F: StructureFamily>(
    family: &F,
    n: usize,
) -> Result<std::result::Result<(), String>> {
    let structures = structures_within_budget(family, n)?;
    let members: HashSet<&F::Structure> = structures.iter().collect();
    if members.len() != structures.len() {
        return Ok(Err(format!(
            "{} lists a structure twice on {n} points",
            family.name()
        )));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let id = Permutation::identity(n);
    for s in &structures {
        if family.act(&id, s) != *s {
            return Ok(Err(format!("identity moves {s:?}")));
        }
        for sigma in &perms {
            let moved = family.act(sigma, s);
            if !members.contains(&moved) {
                return Ok(Err(format!("{sigma:?} sends {s:?} outside the family")));
            }
            for tau in &perms {
                let twice = family.act(tau, &moved);
                let once = family.act(&tau.compose(sigma), s);
                if twice != once {
                    return Ok(Err(format!(
                        "transport along {tau:?} after {sigma:?} differs on {s:?}"
                    )));
                }
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_enumerate() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let distinct: HashSet<_> = Permutation::all(5).collect();
        assert_eq!(distinct.len(), 120);
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::new(vec![1, 2, 0]);
        let b = Permutation::transposition(3, 0, 1);
        assert_eq!(a.compose(&b).images().collect::<Vec<_>>(), [2, 1, 0]);
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.cycle_type().to_string(), "[3]");
        assert_eq!(b.cycle_type().to_string(), "[2,1]");
        assert_eq!(a.apply_mask(0b011), 0b110);
    }

    #[test]
    fn permutation_transport_example() {
        // one-line [1,3,2] moved along (1 2) is [3,2,1]
        let pi = Permutation::new(vec![0, 2, 1]);
        let sigma = Permutation::transposition(3, 0, 1);
        let moved = Permutations.act(&sigma, &pi);
        assert_eq!(moved, Permutation::new(vec![2, 1, 0]));
    }

    #[test]
    fn budgets_are_enforced() {
        let err = empirical_cycle_index(&GraphFamily::graphs(), 9).unwrap_err();
        assert!(matches!(err, Error::OverBudget { degree: 9, .. }));
    }

    #[test]
    fn burnside_matches_orbits() {
        for n in 0..=4 {
            let z = empirical_cycle_index(&GraphFamily::graphs(), n).unwrap();
            let burnside = z.tgf_coefficient();
            let orbits = unlabeled_count(&GraphFamily::graphs(), n).unwrap();
            assert_eq!(burnside, Rational::from_integer(orbits));
        }
    }
}
