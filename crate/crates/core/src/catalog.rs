//! Cycle index series of the named species.
//!
//! Constructors here build fresh series; [`Catalog`] builds each one once and
//! shares the pieces, which is what anything forcing many degrees should use.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::bipartite::BipartitePipeline;
use crate::error::Result;
use crate::partition::{Partition, Partitions};
use crate::poly::PowerSumPoly;
use crate::scalar::Scalar;
use crate::series::{CycleIndexSeries, SeriesHandle};

fn pow2<T: Scalar>(exponent: usize) -> T {
    T::from_bigint(BigInt::from(1) << exponent)
}

/// `Σ_{λ⊢n} weight(λ) · p_λ / z_λ`.
pub(crate) fn weighted_class_sum<T, W>(n: usize, weight: W) -> PowerSumPoly<T>
where
    T: Scalar,
    W: Fn(&Partition) -> T,
{
    let mut poly = PowerSumPoly::zero(n);
    for lambda in Partitions::of(n) {
        let coeff = weight(&lambda) / T::from_bigint(lambda.z_aut());
        poly.add_term(lambda, coeff);
    }
    poly
}

pub fn zero<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::zero()
}

pub fn one<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::one()
}

pub fn singleton<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::singleton()
}

/// `E`: every permutation fixes the one set structure.
pub fn sets<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| Ok(weighted_class_sum(n, |_| T::one())))
}

/// `E₊ = E − 1`.
pub fn sets_plus<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| {
        Ok(if n == 0 {
            PowerSumPoly::zero(0)
        } else {
            weighted_class_sum(n, |_| T::one())
        })
    })
}

/// `E_k`: sets of exactly `k` elements.
pub fn sets_k<T: Scalar>(k: usize) -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(move |n| {
        Ok(if n == k {
            weighted_class_sum(n, |_| T::one())
        } else {
            PowerSumPoly::zero(n)
        })
    })
}

/// `L`: only the identity fixes a linear order.
pub fn linear_orders<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| Ok(PowerSumPoly::monomial(Partition::ones(n), T::one())))
}

/// `S`: permutations, `Σ_{λ⊢n} p_λ`.
pub fn permutations<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| {
        PowerSumPoly::from_terms(n, Partitions::of(n).map(|l| (l, T::one())))
    })
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// `C`: cyclic orders, `Σ_{d|n} φ(d)/n · p_d^{n/d}`.
pub fn cycles<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| {
        let terms = (1..=n).filter(|d| n % d == 0).map(|d| {
            let partition = Partition::from_sorted(vec![d as u32; n / d]);
            (partition, T::ratio(totient(d) as i64, n as i64))
        });
        PowerSumPoly::from_terms(n, terms)
    })
}

/// Number of edge orbits of a permutation of cycle type `λ` acting on the
/// 2-subsets of its points.
pub(crate) fn graph_edge_orbits(lambda: &Partition) -> usize {
    let parts = lambda.parts();
    let mut orbits = 0;
    for (i, &a) in parts.iter().enumerate() {
        orbits += (a / 2) as usize;
        for &b in &parts[i + 1..] {
            orbits += a.gcd(&b) as usize;
        }
    }
    orbits
}

/// `G`: simple graphs, `Σ_{λ⊢n} 2^{e(λ)} p_λ / z_λ` with `e(λ)` the number of
/// edge orbits.
pub fn simple_graphs<T: Scalar>() -> CycleIndexSeries<T> {
    CycleIndexSeries::from_fn(|n| Ok(weighted_class_sum(n, |l| pow2::<T>(graph_edge_orbits(l)))))
}

/// `Ω`, the compositional inverse of `E₊`, from the explicit recursion
/// `n·Ω[n] = (−1)^{n−1} p_1^n − Σ_{d|n, d<n} d · p_{n/d}[Ω[d]]`.
pub fn omega<T: Scalar>() -> CycleIndexSeries<T> {
    let handle = SeriesHandle::<T>::new();
    let this = handle.series();
    let body = CycleIndexSeries::from_fn(move |n| {
        if n == 0 {
            return Ok(PowerSumPoly::zero(0));
        }
        let sign = if n % 2 == 1 { T::one() } else { -T::one() };
        let mut term = PowerSumPoly::monomial(Partition::ones(n), sign);
        for d in (1..n).filter(|d| n % d == 0) {
            let stretched = this.component(d)?.stretch((n / d) as u32)?;
            term.add_scaled(&stretched, &-T::from_i64(d as i64));
        }
        Ok(term.scale(&T::ratio(1, n as i64)))
    });
    handle.define(body).expect("fresh handle has no definition");
    handle.series()
}

/// `Ω` as the compositional inverse of `E₊`.
pub fn omega_via_inverse<T: Scalar>() -> Result<CycleIndexSeries<T>> {
    sets_plus::<T>().comp_inverse()
}

/// `A = X · (E ∘ A)`, rooted trees.
pub fn rooted_trees<T: Scalar>() -> CycleIndexSeries<T> {
    rooted_trees_over(&sets())
}

fn rooted_trees_over<T: Scalar>(sets: &CycleIndexSeries<T>) -> CycleIndexSeries<T> {
    let handle = SeriesHandle::<T>::new();
    let body = &singleton() * &sets.compose(&handle.series());
    handle.define(body).expect("fresh handle has no definition");
    handle.series()
}

/// `a = A + E₂∘A − A²`, from the dissymmetry identity for trees.
pub fn unrooted_trees<T: Scalar>() -> CycleIndexSeries<T> {
    unrooted_from(&rooted_trees())
}

fn unrooted_from<T: Scalar>(rooted: &CycleIndexSeries<T>) -> CycleIndexSeries<T> {
    &(rooted + &sets_k(2).compose(rooted)) - &(rooted * rooted)
}

/// `A^{⟨−1⟩}`.
pub fn rooted_trees_inverse<T: Scalar>() -> Result<CycleIndexSeries<T>> {
    rooted_trees::<T>().comp_inverse()
}

/// `End = S ∘ A`.
pub fn endofunctions<T: Scalar>() -> CycleIndexSeries<T> {
    permutations().compose(&rooted_trees())
}

/// `Sub = E · E`.
pub fn subsets<T: Scalar>() -> CycleIndexSeries<T> {
    &sets() * &sets()
}

/// `Part = E ∘ E₊`.
pub fn partitions_species<T: Scalar>() -> CycleIndexSeries<T> {
    sets().compose(&sets_plus())
}

/// `G^C = Ω ∘ (G − 1)`.
pub fn connected_graphs<T: Scalar>() -> CycleIndexSeries<T> {
    omega().compose(&(&simple_graphs() - &one()))
}

#[derive(Debug, Clone)]
pub struct CatalogEntry<T> {
    pub name: &'static str,
    pub series: CycleIndexSeries<T>,
    pub description: &'static str,
}

/// Every named species, built once with shared sub-series.
#[derive(Debug, Clone)]
pub struct Catalog<T> {
    entries: Vec<CatalogEntry<T>>,
    pipeline: BipartitePipeline<T>,
}

impl<T: Scalar> Catalog<T> {
    pub fn new() -> Self {
        let x = singleton::<T>();
        let e = sets::<T>();
        let e_plus = sets_plus::<T>();
        let omega = omega::<T>();
        let graphs = simple_graphs::<T>();
        let connected = omega.compose(&(&graphs - &one()));
        let rooted = rooted_trees_over(&e);
        let unrooted = unrooted_from(&rooted);
        let rooted_inv = rooted.comp_inverse().expect("rooted trees start with p[1]");
        let perms = permutations::<T>();
        let pipeline = BipartitePipeline::with_parts(&e, &omega, &rooted_inv);

        let mut entries = Vec::new();
        let mut add = |name, series, description| {
            entries.push(CatalogEntry {
                name,
                series,
                description,
            })
        };
        add("0", zero(), "empty species");
        add("1", one(), "empty set");
        add("X", x.clone(), "singletons");
        add("E", e.clone(), "sets");
        add("E+", e_plus.clone(), "nonempty sets");
        add("E2", sets_k(2), "two-element sets");
        add("L", linear_orders(), "linear orders");
        add("S", perms.clone(), "permutations");
        add("C", cycles(), "cyclic orders");
        add("Part", e.compose(&e_plus), "set partitions, E(E+)");
        add("G", graphs, "simple graphs");
        add("Gc", connected, "connected graphs, Omega(G - 1)");
        add("Omega", omega, "combinatorial logarithm, inverse of E+");
        add("A", rooted.clone(), "rooted trees, X*E(A)");
        add("a", unrooted, "unrooted trees, A + E2(A) - A*A");
        add("Ainv", rooted_inv, "compositional inverse of A");
        add("End", perms.compose(&rooted), "endofunctions, S(A)");
        add("Sub", &e * &e, "subsets, E*E");
        add("BC", pipeline.bc().at_identity(), "bicolored graphs");
        add(
            "CBC",
            pipeline.cbc().at_identity(),
            "connected bicolored graphs",
        );
        add("CBP", pipeline.cbp(), "connected bipartite graphs");
        add("BP", pipeline.bp(), "bipartite graphs");
        add("PBP", pipeline.pbp(), "point-determining bipartite graphs");
        add(
            "CPBP",
            pipeline.cpbp(),
            "connected point-determining bipartite graphs",
        );
        Self { entries, pipeline }
    }

    pub fn get(&self, name: &str) -> Option<&CycleIndexSeries<T>> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.series)
    }

    pub fn entries(&self) -> &[CatalogEntry<T>] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.name)
    }

    pub fn pipeline(&self) -> &BipartitePipeline<T> {
        &self.pipeline
    }

    fn named(&self, name: &str) -> &CycleIndexSeries<T> {
        self.get(name).expect("built-in catalog name")
    }

    pub fn omega(&self) -> &CycleIndexSeries<T> {
        self.named("Omega")
    }

    pub fn sets(&self) -> &CycleIndexSeries<T> {
        self.named("E")
    }

    pub fn rooted_trees_inverse(&self) -> &CycleIndexSeries<T> {
        self.named("Ainv")
    }
}

impl<T: Scalar> Default for Catalog<T> {
    fn default() -> Self {
        Self::new()
    }
}
