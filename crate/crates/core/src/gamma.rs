//! Γ-species at the cycle index level: one series per group element.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{CycleIndexSeries, Plethysm};

/// A finite group given by its multiplication table over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses exhaustively.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("no elements".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        if table.iter().flatten().any(|&g| g >= n) {
            return Err(Error::InvalidGroup("not closed".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::InvalidGroup(format!("{} has no inverse", names[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup("not associative".into()));
                    }
                }
            }
        }
        Ok(Self {
            names,
            table,
            identity,
        })
    }

    /// `S₂ = {e, t}`; element 1 is the swap.
    pub fn symmetric2() -> Self {
        Self::cyclic(2)
            .map(|mut g| {
                g.names = vec!["e".into(), "t".into()];
                g
            })
            .expect("Z/2 is a group")
    }

    /// `Z/n` with element `k` standing for `k` mod `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let names = (0..n).map(|k| format!("g{k}")).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(names, table)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.multiply(acc, g))
    }
}

/// Γ-cycle index: `at(γ)` is `Z_F^Γ(γ)`.
#[derive(Debug, Clone)]
pub struct GammaCis<T> {
    group: Arc<FiniteGroup>,
    at: Vec<CycleIndexSeries<T>>,
}

impl<T: Scalar> GammaCis<T> {
    /// `at[γ]` for each element index `γ`.
    pub fn new(group: Arc<FiniteGroup>, at: Vec<CycleIndexSeries<T>>) -> Result<Self> {
        if at.len() != group.order() {
            return Err(Error::GroupMismatch);
        }
        Ok(Self { group, at })
    }

    /// An ordinary species with the trivial action.
    pub fn lift(series: &CycleIndexSeries<T>, group: Arc<FiniteGroup>) -> Self {
        let at = vec![series.clone(); group.order()];
        Self { group, at }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn at(&self, element: usize) -> &CycleIndexSeries<T> {
        &self.at[element]
    }

    /// The ordinary cycle index of the underlying species.
    pub fn at_identity(&self) -> CycleIndexSeries<T> {
        self.at[self.group.identity()].clone()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn pointwise<F>(&self, other: &Self, op: F) -> Result<Self>
    where
        F: Fn(&CycleIndexSeries<T>, &CycleIndexSeries<T>) -> CycleIndexSeries<T>,
    {
        self.same_group(other)?;
        let at = self
            .at
            .iter()
            .zip(&other.at)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(Self {
            group: Arc::clone(&self.group),
            at,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |a, b| a + b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |a, b| a * b)
    }

    /// Γ-plethysm: at `γ`, `p_i` in `self.at(γ)` is replaced by
    /// `inner.at(γ^i)` with every `p_j` stretched to `p_{ij}`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.same_group(inner)?;
        let group = Arc::clone(&self.group);
        let at = (0..group.order())
            .map(|gamma| {
                let inner_at = inner.at.clone();
                let powers = Arc::clone(&group);
                CycleIndexSeries::from_generator(Plethysm::new(self.at[gamma].clone(), move |i| {
                    inner_at[powers.power(gamma, i as usize)].clone()
                }))
            })
            .collect();
        Ok(Self { group, at })
    }

    /// Cycle index of the quotient species: the average over the group.
    pub fn quotient(&self) -> CycleIndexSeries<T> {
        CycleIndexSeries::average(self.at.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use num_rational::BigRational;

    type Q = BigRational;

    fn s2() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric2())
    }

    #[test]
    fn s2_structure() {
        let g = s2();
        let t = g.element("t").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.power(t, 2), g.identity());
        assert_eq!(g.power(t, 3), t);
        assert_eq!(g.power(t, 0), g.identity());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table(names.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(names.clone(), vec![vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table(names, vec![vec![0, 2], vec![1, 0]]).is_err());
        assert!(FiniteGroup::cyclic(5).is_ok());
    }

    #[test]
    fn lift_and_quotient() {
        let omega = catalog::omega::<Q>();
        let lifted = GammaCis::lift(&omega, s2());
        assert!(lifted.at(1).agrees_with(&omega, 6).unwrap());
        assert!(lifted.quotient().agrees_with(&omega, 6).unwrap());
        let zero = GammaCis::lift(&catalog::zero::<Q>(), s2());
        assert!(zero.quotient().agrees_with(&catalog::zero(), 4).unwrap());
    }

    #[test]
    fn trivial_action_reduces_to_plethysm() {
        let e = catalog::sets::<Q>();
        let ep = catalog::sets_plus::<Q>();
        let gamma = GammaCis::lift(&e, s2())
            .compose(&GammaCis::lift(&ep, s2()))
            .unwrap();
        let plain = e.compose(&ep);
        for g in 0..2 {
            assert!(gamma.at(g).agrees_with(&plain, 6).unwrap());
        }
    }

    #[test]
    fn pointwise_operations() {
        let g = s2();
        let x = GammaCis::lift(&catalog::singleton::<Q>(), Arc::clone(&g));
        let one = GammaCis::lift(&catalog::one::<Q>(), Arc::clone(&g));
        let f = GammaCis::new(
            Arc::clone(&g),
            vec![catalog::sets::<Q>(), catalog::linear_orders::<Q>()],
        )
        .unwrap();
        assert!(f.mul(&one).unwrap().at(1).agrees_with(f.at(1), 5).unwrap());
        let xx = x.mul(&x).unwrap();
        let x2 = catalog::singleton::<Q>() * catalog::singleton::<Q>();
        assert!(xx.at(0).agrees_with(&x2, 4).unwrap());
        let fx = f.add(&x).unwrap();
        let xf = x.add(&f).unwrap();
        for e in 0..2 {
            assert!(fx.at(e).agrees_with(xf.at(e), 5).unwrap());
        }
    }

    #[test]
    fn group_mismatch() {
        let z3 = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let a = GammaCis::lift(&catalog::sets::<Q>(), s2());
        let b = GammaCis::lift(&catalog::sets::<Q>(), z3);
        assert_eq!(a.add(&b).unwrap_err(), Error::GroupMismatch);
        assert_eq!(a.compose(&b).unwrap_err(), Error::GroupMismatch);
        assert_eq!(
            GammaCis::new(s2(), vec![catalog::sets::<Q>()]).unwrap_err(),
            Error::GroupMismatch
        );
    }

    #[test]
    fn quotient_is_linear() {
        let g = s2();
        let f = GammaCis::new(
            Arc::clone(&g),
            vec![catalog::simple_graphs::<Q>(), catalog::linear_orders::<Q>()],
        )
        .unwrap();
        let h = GammaCis::new(
            Arc::clone(&g),
            vec![catalog::cycles::<Q>(), catalog::permutations::<Q>()],
        )
        .unwrap();
        let lhs = f.add(&h).unwrap().quotient();
        let rhs = &f.quotient() + &h.quotient();
        assert!(lhs.agrees_with(&rhs, 8).unwrap());
    }
}
