//! Point-determining bipartite graphs.
//!
//! The chain is
//!
//! ```text
//! BC  (Γ-cycle index over S₂, color swap as the action)
//! CBC = Ω ∘_Γ BC
//! CBP = CBC / S₂
//! BP  = E ∘ CBP
//! PBP = BP ∘ Ω
//! CPBP = CBP ∘ Ω − Ω + X
//! ```
//!
//! `BC` is built without a constant term, so it already plays the role of
//! the nonempty bicolored graphs in `Ω ∘ BC₊`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::catalog;
use crate::error::{Error, Result};
use crate::gamma::{FiniteGroup, GammaCis};
use crate::partition::{partition_pairs, Partition, Partitions};
use crate::poly::PowerSumPoly;
use crate::scalar::Scalar;
use crate::series::CycleIndexSeries;
use crate::Rational;

/// Bicolored graphs fixed by a color-preserving permutation acting with cycle
/// type `mu` on one color class and `nu` on the other.
pub fn bc_e_fix(mu: &Partition, nu: &Partition) -> BigInt {
    let exponent: u64 = mu
        .parts()
        .iter()
        .flat_map(|&i| nu.parts().iter().map(move |&j| i.gcd(&j) as u64))
        .sum();
    BigInt::one() << exponent
}

/// Bicolored graphs fixed by a color-swapping permutation whose square has
/// cycle type `mu` on each color class (the permutation has type `2mu`).
pub fn bc_t_fix(mu: &Partition) -> BigInt {
    let parts = mu.parts();
    let mut exponent = parts.len() as u64;
    exponent += parts.iter().map(|&p| p.div_ceil(2) as u64).sum::<u64>();
    for (i, &a) in parts.iter().enumerate() {
        exponent += parts[i + 1..]
            .iter()
            .map(|&b| a.gcd(&b) as u64)
            .sum::<u64>();
    }
    BigInt::one() << exponent
}

fn bc_identity_component<T: Scalar>(n: usize) -> PowerSumPoly<T> {
    let mut poly = PowerSumPoly::zero(n);
    if n == 0 {
        return poly;
    }
    for (mu, nu) in partition_pairs(n) {
        let coeff = T::from_bigint(bc_e_fix(&mu, &nu)) / T::from_bigint(mu.z_aut() * nu.z_aut());
        poly.add_term(mu.union(&nu), coeff);
    }
    poly
}

fn bc_swap_component<T: Scalar>(n: usize) -> PowerSumPoly<T> {
    let mut poly = PowerSumPoly::zero(n);
    if n == 0 || n % 2 == 1 {
        return poly;
    }
    for mu in Partitions::of(n / 2) {
        let doubled = mu.scale(2).expect("nonzero scale");
        let coeff = T::from_bigint(bc_t_fix(&mu)) / T::from_bigint(doubled.z_aut());
        poly.add_term(doubled, coeff);
    }
    poly
}

/// Γ-cycle index of bicolored graphs over `S₂ = {e, t}`, `t` swapping colors.
pub fn bicolored_graphs<T: Scalar>() -> GammaCis<T> {
    let group = Arc::new(FiniteGroup::symmetric2());
    let at_e = CycleIndexSeries::from_fn(|n| Ok(bc_identity_component(n)));
    let at_t = CycleIndexSeries::from_fn(|n| Ok(bc_swap_component(n)));
    GammaCis::new(group, vec![at_e, at_t]).expect("two series for two elements")
}

/// Every stage of the bipartite computation, sharing one `Ω`.
#[derive(Debug, Clone)]
pub struct BipartitePipeline<T> {
    singleton: CycleIndexSeries<T>,
    sets_two: CycleIndexSeries<T>,
    omega: CycleIndexSeries<T>,
    rooted_inverse: CycleIndexSeries<T>,
    bc: GammaCis<T>,
    cbc: GammaCis<T>,
    cbp: CycleIndexSeries<T>,
    bp: CycleIndexSeries<T>,
    pbp: CycleIndexSeries<T>,
    cpbp: CycleIndexSeries<T>,
}

impl<T: Scalar> BipartitePipeline<T> {
    pub fn new() -> Self {
        let rooted_inverse = catalog::rooted_trees_inverse().expect("rooted trees start with p[1]");
        Self::with_parts(&catalog::sets(), &catalog::omega(), &rooted_inverse)
    }

    /// Builds the stages on top of already shared `E`, `Ω` and `A^{⟨−1⟩}`.
    pub fn with_parts(
        sets: &CycleIndexSeries<T>,
        omega: &CycleIndexSeries<T>,
        rooted_inverse: &CycleIndexSeries<T>,
    ) -> Self {
        let singleton = catalog::singleton();
        let bc = bicolored_graphs();
        let cbc = GammaCis::lift(omega, Arc::clone(bc.group()))
            .compose(&bc)
            .expect("same group");
        let cbp = cbc.quotient();
        let bp = sets.compose(&cbp);
        let pbp = bp.compose(omega);
        let cpbp = &(&cbp.compose(omega) - omega) + &singleton;
        Self {
            singleton,
            sets_two: catalog::sets_k(2),
            omega: omega.clone(),
            rooted_inverse: rooted_inverse.clone(),
            bc,
            cbc,
            cbp,
            bp,
            pbp,
            cpbp,
        }
    }

    pub fn bc(&self) -> &GammaCis<T> {
        &self.bc
    }

    pub fn cbc(&self) -> &GammaCis<T> {
        &self.cbc
    }

    pub fn cbp(&self) -> CycleIndexSeries<T> {
        self.cbp.clone()
    }

    pub fn bp(&self) -> CycleIndexSeries<T> {
        self.bp.clone()
    }

    pub fn pbp(&self) -> CycleIndexSeries<T> {
        self.pbp.clone()
    }

    pub fn cpbp(&self) -> CycleIndexSeries<T> {
        self.cpbp.clone()
    }

    /// `Φ_P = Φ ∘ Ω`: the point-determining members of a graph class closed
    /// under creating and deleting duplicate vertices.
    pub fn phi_point_determining(&self, phi: &CycleIndexSeries<T>) -> CycleIndexSeries<T> {
        phi.compose(&self.omega)
    }

    /// `Φ_M`: the members without endpoints of a class of connected graphs
    /// closed under creating and deleting endpoints. `contains_singleton`
    /// says whether the one-vertex graph belongs to the class.
    pub fn phi_endpoint_free(
        &self,
        phi: &CycleIndexSeries<T>,
        contains_singleton: bool,
    ) -> CycleIndexSeries<T> {
        let base = phi.compose(&self.rooted_inverse);
        if contains_singleton {
            let x2 = &self.singleton * &self.singleton;
            &(&base - &self.sets_two) + &x2
        } else {
            base
        }
    }
}

impl<T: Scalar> Default for BipartitePipeline<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn integral(value: Rational, degree: usize) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            degree,
            value: value.to_string(),
        })
    }
}

/// `f_n = n! · [x^n] F(x)`, the number of labeled structures on `n` points.
pub fn labeled_count(series: &CycleIndexSeries<Rational>, n: usize) -> Result<BigInt> {
    let value = series.egf_coefficient(n)? * Rational::from_integer(factorial(n));
    integral(value, n)
}

/// Number of isomorphism classes of structures on `n` points.
pub fn unlabeled_count(series: &CycleIndexSeries<Rational>, n: usize) -> Result<BigInt> {
    integral(series.tgf_coefficient(n)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fixed_point_formulas() {
        assert_eq!(bc_e_fix(&part(&[]), &part(&[])), 1.into());
        assert_eq!(bc_e_fix(&part(&[1]), &part(&[1])), 2.into());
        assert_eq!(bc_e_fix(&part(&[2, 1]), &part(&[1])), 4.into());
        assert_eq!(bc_t_fix(&part(&[])), 1.into());
        assert_eq!(bc_t_fix(&part(&[1])), 4.into());
        assert_eq!(bc_t_fix(&part(&[2, 1])), 32.into());
    }

    #[test]
    fn bc_low_degrees() {
        let bc = bicolored_graphs::<Q>();
        let e1 = bc.at(0).component(1).unwrap();
        assert_eq!(e1.to_string(), "2*p[1]");
        assert!(bc.at(1).component(1).unwrap().is_zero());
        assert!(bc.at(0).component(0).unwrap().is_zero());
        let labeled: Vec<BigInt> = (1..=4)
            .map(|n| labeled_count(&bc.at_identity(), n).unwrap())
            .collect();
        assert_eq!(labeled, [2, 6, 26, 162].map(BigInt::from));
    }

    #[test]
    fn cbc_identity_is_plain_composition() {
        let p = BipartitePipeline::<Q>::new();
        let omega = catalog::omega::<Q>();
        let direct = omega.compose(&p.bc().at_identity());
        assert!(p.cbc().at_identity().agrees_with(&direct, 8).unwrap());
        let labeled: Vec<BigInt> = (1..=4)
            .map(|n| labeled_count(&p.cbc().at_identity(), n).unwrap())
            .collect();
        assert_eq!(labeled, [2, 2, 6, 38].map(BigInt::from));
    }

    #[test]
    fn pbp_low_components() {
        let p = BipartitePipeline::<Q>::new();
        let printed: Vec<String> = p
            .pbp()
            .components(5)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            printed,
            [
                "p[]",
                "p[1]",
                "1/2*p[2] + 1/2*p[1,1]",
                "1/2*p[2,1] + 1/2*p[1,1,1]",
                "1/4*p[4] + 7/8*p[2,2] + 1/4*p[2,1,1] + 5/8*p[1,1,1,1]",
                "1/4*p[4,1] + 11/8*p[2,2,1] + 1/4*p[2,1,1,1] + 9/8*p[1,1,1,1,1]",
            ]
        );
    }

    #[test]
    fn counts_must_be_integral() {
        let e = catalog::sets::<Q>();
        assert_eq!(labeled_count(&e, 5).unwrap(), BigInt::one());
        assert_eq!(
            unlabeled_count(&e.scale(Q::ratio(1, 2)), 3).unwrap_err(),
            Error::NonIntegral {
                degree: 3,
                value: "1/2".into()
            }
        );
    }

    #[test]
    fn point_determining_of_sets() {
        let p = BipartitePipeline::<Q>::new();
        let e_omega = p.phi_point_determining(&catalog::sets());
        let one_plus_x = &catalog::one::<Q>() + &catalog::singleton();
        assert!(e_omega.agrees_with(&one_plus_x, 10).unwrap());
    }

    #[test]
    fn endpoint_free_of_singleton() {
        let p = BipartitePipeline::<Q>::new();
        let m = p.phi_endpoint_free(&catalog::singleton(), true);
        let x = catalog::singleton::<Q>();
        let expected =
            &(&catalog::rooted_trees_inverse::<Q>().unwrap() - &catalog::sets_k(2)) + &(&x * &x);
        assert!(m.agrees_with(&expected, 8).unwrap());
        let plain = p.phi_endpoint_free(&catalog::singleton(), false);
        assert!(plain
            .agrees_with(&catalog::rooted_trees_inverse::<Q>().unwrap(), 8)
            .unwrap());
    }
}
