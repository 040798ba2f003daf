//! Integer partitions, used both as permutation cycle types and as power-sum
//! monomial indices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
    size: usize,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// `parts` must already be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().map(|&p| p as usize).sum();
        Self { parts, size }
    }

    /// `[1, 1, …, 1]` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The one-part partition `[n]`, or `[]` for zero.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// the product of `i^m_i · m_i!` over distinct parts `i`.
    pub fn z_aut(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(k);
            }
        }
        z
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition {
            parts,
            size: self.size + other.size,
        }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: u32) -> Result<Partition> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
            size: self.size * k as usize,
        })
    }

    /// The partition with one part equal to 1 removed, if there is one.
    pub fn without_one(&self) -> Option<Partition> {
        if self.parts.last() == Some(&1) {
            let mut parts = self.parts.clone();
            parts.pop();
            Some(Partition {
                parts,
                size: self.size - 1,
            })
        } else {
            None
        }
    }

    /// The partition with one extra part equal to 1.
    pub fn with_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition {
            parts,
            size: self.size + 1,
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed partition {0:?}")]
pub struct ParsePartitionError(pub String);

/// Parses `[3,2,1]` (spaces allowed). Parts may come in any order.
impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParsePartitionError(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n` in decreasing lexicographic order, `[n]` first.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn of(n: usize) -> Self {
        let first = if n == 0 { vec![] } else { vec![n as u32] };
        Self { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: strip trailing ones, decrement the last part above one,
        // then refill greedily with parts no larger than the decremented one.
        let mut succ = current.clone();
        let mut freed = 0u32;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.pop() {
            let cap = last - 1;
            freed += last;
            while freed > 0 {
                let part = cap.min(freed);
                succ.push(part);
                freed -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted(current))
    }
}

/// Pairs `(μ, ν)` with `|μ| + |ν| = n`, streamed without materializing.
pub fn partition_pairs(n: usize) -> impl Iterator<Item = (Partition, Partition)> {
    (0..=n).flat_map(move |k| {
        Partitions::of(k).flat_map(move |mu| Partitions::of(n - k).map(move |nu| (mu.clone(), nu)))
    })
}
