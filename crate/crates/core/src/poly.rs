//! Homogeneous polynomials in the power-sum basis.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;

/// A homogeneous element of degree `degree` of the power-sum ring, stored as
/// a map from partitions `λ ⊢ degree` to the coefficient of `p_λ`.
///
/// Zero coefficients are never stored, so the zero polynomial of any degree
/// has an empty term map.
#[derive(Clone, PartialEq)]
pub struct PowerSumPoly<T> {
    degree: usize,
    terms: HashMap<Partition, T>,
}

impl<T: Scalar> PowerSumPoly<T> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: HashMap::new(),
        }
    }

    /// The constant `1 = p_[]`.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), T::one())
    }

    pub fn monomial(partition: Partition, coeff: T) -> Self {
        let mut poly = Self::zero(partition.size());
        if !coeff.is_zero() {
            poly.terms.insert(partition, coeff);
        }
        poly
    }

    /// Collects terms of the given degree, summing repeated partitions.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, T)>,
    {
        let mut poly = Self::zero(degree);
        for (partition, coeff) in terms {
            if partition.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: partition.size(),
                });
            }
            poly.add_term(partition, coeff);
        }
        Ok(poly)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, partition: &Partition) -> T {
        self.terms.get(partition).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    /// Terms with partitions in decreasing lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &T)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        terms
    }

    /// Coefficient of `p_1^n`: the exponential generating series coefficient.
    pub fn egf_coefficient(&self) -> T {
        self.coefficient(&Partition::ones(self.degree))
    }

    /// Sum of all coefficients: the value at `p_i = x^i`.
    pub fn tgf_coefficient(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    pub(crate) fn add_term(&mut self, partition: Partition, coeff: T) {
        debug_assert_eq!(partition.size(), self.degree);
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(partition) {
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (partition, coeff) in &other.terms {
            out.add_term(partition.clone(), -coeff.clone());
        }
        Ok(out)
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (partition, coeff) in &other.terms {
            self.add_term(partition.clone(), coeff.clone());
        }
    }

    /// Adds `scale · other` in place. Degrees must agree.
    pub(crate) fn add_scaled(&mut self, other: &Self, scale: &T) {
        debug_assert_eq!(self.degree, other.degree);
        for (partition, coeff) in &other.terms {
            self.add_term(partition.clone(), coeff.clone() * scale.clone());
        }
    }

    /// Adds `a · b` in place; `a.degree + b.degree` must equal `self.degree`.
    pub(crate) fn add_product(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(self.degree, a.degree + b.degree);
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                self.add_term(pa.union(pb), ca.clone() * cb.clone());
            }
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c.clone() * factor.clone()))
                .collect(),
        }
    }

    /// Ring product; `p_μ · p_ν = p_{μ∪ν}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        out.add_product(self, other);
        out
    }

    /// Substitutes `p_i ↦ p_{ik}` in every monomial.
    pub fn stretch(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        let mut terms = HashMap::with_capacity(self.terms.len());
        for (p, c) in &self.terms {
            terms.insert(p.scale(k)?, c.clone());
        }
        Ok(Self {
            degree: self.degree * k as usize,
            terms,
        })
    }

    /// Formal partial derivative with respect to `p_1`. The result has degree
    /// one less; a degree-0 input has no `p_1` and maps to the zero of degree 0.
    pub fn derivative_p1(&self) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (p, c) in &self.terms {
            if let Some(rest) = p.without_one() {
                let m = p.multiplicity(1) as i64;
                out.add_term(rest, c.clone() * T::from_i64(m));
            }
        }
        out
    }

    /// `p_1 · ∂/∂p_1`: each monomial scaled by its number of parts equal to 1.
    pub fn pointed(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, c) in &self.terms {
            let m = p.multiplicity(1) as i64;
            out.add_term(p.clone(), c.clone() * T::from_i64(m));
        }
        out
    }

    /// Parses the [`Display`](fmt::Display) form back, e.g.
    /// `1/2*p[1,1] - p[2]` or `0`.
    pub fn parse(degree: usize, text: &str) -> std::result::Result<Self, ParsePolyError>
    where
        T: FromStr,
    {
        let bad = |why: &str| ParsePolyError(format!("{why} in {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(degree));
        }
        let mut poly = Self::zero(degree);
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                _ => false,
            };
            let end = rest.find(']').ok_or_else(|| bad("unterminated term"))? + 1;
            let term = &rest[..end];
            rest = &rest[end..];
            let (coeff, mono) = match term.find("p[") {
                Some(0) => (T::one(), term),
                Some(i) if term[..i].ends_with('*') => {
                    let c = term[..i - 1]
                        .parse::<T>()
                        .map_err(|_| bad("bad coefficient"))?;
                    (c, &term[i..])
                }
                _ => return Err(bad("expected p[...]")),
            };
            let partition: Partition = mono[1..].parse().map_err(|_| bad("bad partition"))?;
            if partition.size() != degree {
                return Err(bad("term of the wrong degree"));
            }
            poly.add_term(partition, if negative { -coeff } else { coeff });
        }
        Ok(poly)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed power-sum polynomial: {0}")]
pub struct ParsePolyError(pub String);

impl<T: Scalar> fmt::Debug for PowerSumPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSumPoly(deg {}: {})", self.degree, self)
    }
}

/// Canonical form: partitions in decreasing lexicographic order, coefficient
/// `1` omitted, `0` for the zero polynomial.
impl<T: Scalar> fmt::Display for PowerSumPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.sorted_terms().into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "p{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;
    type Poly = PowerSumPoly<Q>;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn mono(parts: &[u32], c: Q) -> Poly {
        Poly::monomial(part(parts), c)
    }

    #[test]
    fn add_examples() {
        let sum = mono(&[1, 1], q(1, 1))
            .try_add(&mono(&[2], q(1, 1)))
            .unwrap();
        assert_eq!(sum.len(), 2);
        assert_eq!(sum.coefficient(&part(&[2])), q(1, 1));

        let f = sum.clone();
        assert!(f.try_add(&f.neg()).unwrap().is_zero());

        let half = mono(&[1, 1], q(1, 2));
        assert_eq!(half.try_add(&half).unwrap(), mono(&[1, 1], q(1, 1)));
    }

    #[test]
    fn add_rejects_degree_mismatch() {
        let err = mono(&[1], q(1, 1)).try_add(&mono(&[2], q(1, 1)));
        assert_eq!(err, Err(Error::DegreeMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            mono(&[1], q(1, 1)).mul(&mono(&[1], q(1, 1))),
            mono(&[1, 1], q(1, 1))
        );
        assert_eq!(
            mono(&[2], q(1, 2)).mul(&mono(&[1], q(1, 1))),
            mono(&[2, 1], q(1, 2))
        );
        let prod = Poly::zero(2).mul(&mono(&[3], q(5, 1)));
        assert!(prod.is_zero());
        assert_eq!(prod.degree(), 5);
    }

    #[test]
    fn stretch_examples() {
        assert_eq!(mono(&[1], q(1, 1)).stretch(2).unwrap(), mono(&[2], q(1, 1)));
        assert_eq!(
            mono(&[2, 1], q(3, 7)).stretch(3).unwrap(),
            mono(&[6, 3], q(3, 7))
        );
        let f = mono(&[2, 1], q(1, 3))
            .try_add(&mono(&[3], q(-2, 1)))
            .unwrap();
        assert_eq!(f.stretch(1).unwrap(), f);
        assert_eq!(f.stretch(0), Err(Error::ZeroScale));
    }

    #[test]
    fn derivative_and_pointing() {
        let d = mono(&[1, 1], q(1, 2)).derivative_p1();
        assert_eq!(d, mono(&[1], q(1, 1)));
        assert!(mono(&[2], q(1, 1)).derivative_p1().is_zero());
        let pt = mono(&[2, 1, 1], q(1, 4)).pointed();
        assert_eq!(pt, mono(&[2, 1, 1], q(1, 2)));
    }

    #[test]
    fn display_and_parse() {
        let f = Poly::from_terms(
            3,
            [
                (part(&[1, 1, 1]), q(4, 3)),
                (part(&[2, 1]), q(2, 1)),
                (part(&[3]), q(-2, 3)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "-2/3*p[3] + 2*p[2,1] + 4/3*p[1,1,1]");
        assert_eq!(Poly::parse(3, &f.to_string()).unwrap(), f);
        assert_eq!(Poly::one().to_string(), "p[]");
        assert_eq!(Poly::zero(4).to_string(), "0");
        assert_eq!(Poly::parse(4, "0").unwrap(), Poly::zero(4));
        assert!(Poly::parse(2, "p[3]").is_err());
    }

    fn arb_poly(degree: usize) -> impl Strategy<Value = Poly> {
        let parts: Vec<Partition> = crate::partition::Partitions::of(degree).collect();
        let n = parts.len();
        proptest::collection::vec((-3i64..4, 1i64..4), n).prop_map(move |cs| {
            Poly::from_terms(
                degree,
                parts
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(|(a, b)| q(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            (a, b, c) in (0usize..=4, 0usize..=4, 0usize..=4)
                .prop_flat_map(|(i, j, k)| (arb_poly(i), arb_poly(j), arb_poly(k)))
        ) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn stretch_composes(f in (0usize..=4).prop_flat_map(arb_poly), a in 1u32..=4, b in 1u32..=4) {
            prop_assert_eq!(
                f.stretch(a).unwrap().stretch(b).unwrap(),
                f.stretch(a * b).unwrap()
            );
        }

        #[test]
        fn display_parse_round_trip(f in (0usize..=5).prop_flat_map(arb_poly)) {
            let back = Poly::parse(f.degree(), &f.to_string()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
