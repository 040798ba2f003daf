//! Side-by-side comparison of enumerated and algebraic cycle indices.

use std::fmt;

use crate::catalog::Catalog;
use crate::error::Result;
use crate::partition::Partition;
use crate::poly::PowerSumPoly;
use crate::series::CycleIndexSeries;
use crate::Rational;

use super::families::*;
use super::{empirical_cycle_index, empirical_twisted_index, functor_law_check, StructureFamily};

/// First coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub partition: Partition,
    pub empirical: Rational,
    pub algebraic: Rational,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of p{}: enumeration gives {}, algebra gives {}",
            self.partition, self.empirical, self.algebraic
        )
    }
}

/// Outcome of one comparison at one degree.
#[derive(Debug, Clone)]
pub struct Check {
    pub family: String,
    pub degree: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok    {} n={}", self.family, self.degree),
            Some(why) => write!(f, "FAIL  {} n={}: {}", self.family, self.degree, why),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

/// The largest partition (in decreasing lex order) where the two differ.
pub fn compare_components(
    empirical: &PowerSumPoly<Rational>,
    algebraic: &PowerSumPoly<Rational>,
) -> Option<Discrepancy> {
    let mut support: Vec<&Partition> = empirical
        .iter()
        .chain(algebraic.iter())
        .map(|(p, _)| p)
        .collect();
    support.sort_by(|a, b| b.cmp(a));
    support.dedup();
    support.into_iter().find_map(|p| {
        let e = empirical.coefficient(p);
        let a = algebraic.coefficient(p);
        (e != a).then(|| Discrepancy {
            partition: p.clone(),
            empirical: e,
            algebraic: a,
        })
    })
}

fn compare_degrees(
    label: &str,
    max_n: usize,
    series: &CycleIndexSeries<Rational>,
    empirical: impl Fn(usize) -> Result<PowerSumPoly<Rational>>,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for n in 0..=max_n {
        let found = empirical(n)?;
        let expected = series.component(n)?;
        report.checks.push(Check {
            family: label.to_string(),
            degree: n,
            failure: compare_components(&found, &expected).map(|d| d.to_string()),
        });
    }
    Ok(report)
}

fn family_vs<F: StructureFamily>(
    family: &F,
    series: &CycleIndexSeries<Rational>,
    max_n: usize,
) -> Result<VerifyReport> {
    let top = max_n.min(family.budget());
    compare_degrees(family.name(), top, series, |n| {
        empirical_cycle_index(family, n)
    })
}

/// Compares every enumerable family with its algebraic cycle index through
/// degree `max_n`, capped by each family's budget.
pub fn verify_families(catalog: &Catalog<Rational>, max_n: usize) -> Result<VerifyReport> {
    let get = |name: &str| {
        catalog
            .get(name)
            .cloned()
            .unwrap_or_else(|| panic!("catalog has {name}"))
    };
    let pipeline = catalog.pipeline();
    let mut report = VerifyReport::default();

    report.extend(family_vs(&Sets, &get("E"), max_n)?);
    report.extend(family_vs(&Subsets, &get("Sub"), max_n)?);
    report.extend(family_vs(&LinearOrders, &get("L"), max_n)?);
    report.extend(family_vs(&Permutations, &get("S"), max_n)?);
    report.extend(family_vs(&Cycles, &get("C"), max_n)?);
    report.extend(family_vs(&SetPartitions, &get("Part"), max_n)?);
    report.extend(family_vs(&Endofunctions, &get("End"), max_n)?);
    report.extend(family_vs(&RootedTrees, &get("A"), max_n)?);
    report.extend(family_vs(&GraphFamily::trees(), &get("a"), max_n)?);
    report.extend(family_vs(&GraphFamily::graphs(), &get("G"), max_n)?);
    report.extend(family_vs(
        &GraphFamily::connected_graphs(),
        &get("Gc"),
        max_n,
    )?);
    report.extend(family_vs(
        &GraphFamily::point_determining(),
        &pipeline.phi_point_determining(&get("G")),
        max_n,
    )?);
    report.extend(family_vs(
        &GraphFamily::connected_endpoint_free(),
        &pipeline.phi_endpoint_free(&get("Gc"), true),
        max_n,
    )?);

    for (family, gamma) in [
        (BicoloredFamily::all(), pipeline.bc()),
        (BicoloredFamily::connected(), pipeline.cbc()),
    ] {
        let top = max_n.min(family.budget());
        let e = gamma.group().identity();
        let t = gamma.group().element("t").expect("S2 has t");
        report.extend(compare_degrees(
            &format!("{}@e", family.name()),
            top,
            gamma.at(e),
            |n| empirical_cycle_index(&family, n),
        )?);
        report.extend(compare_degrees(
            &format!("{}@t", family.name()),
            top,
            gamma.at(t),
            |n| empirical_twisted_index(&family, n),
        )?);
    }

    report.extend(family_vs(&GraphFamily::bipartite(), &pipeline.bp(), max_n)?);
    report.extend(family_vs(
        &GraphFamily::connected_bipartite(),
        &pipeline.cbp(),
        max_n,
    )?);
    report.extend(family_vs(
        &GraphFamily::point_determining_bipartite(),
        &pipeline.pbp(),
        max_n,
    )?);
    report.extend(family_vs(
        &GraphFamily::connected_point_determining_bipartite(),
        &pipeline.cpbp(),
        max_n,
    )?);
    Ok(report)
}

fn law_checks<F: StructureFamily>(family: &F, max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for n in 0..=max_n.min(family.budget()) {
        report.checks.push(Check {
            family: format!("{} transport", family.name()),
            degree: n,
            failure: functor_law_check(family, n)?.err(),
        });
    }
    Ok(report)
}

/// Functor laws for every family through degree `max_n`.
pub fn verify_functor_laws(max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    report.extend(law_checks(&Sets, max_n)?);
    report.extend(law_checks(&Subsets, max_n)?);
    report.extend(law_checks(&LinearOrders, max_n)?);
    report.extend(law_checks(&Permutations, max_n)?);
    report.extend(law_checks(&Cycles, max_n)?);
    report.extend(law_checks(&SetPartitions, max_n)?);
    report.extend(law_checks(&Endofunctions, max_n)?);
    report.extend(law_checks(&RootedTrees, max_n)?);
    report.extend(law_checks(&GraphFamily::graphs(), max_n)?);
    report.extend(law_checks(
        &GraphFamily::point_determining_bipartite(),
        max_n,
    )?);
    report.extend(law_checks(&BicoloredFamily::all(), max_n)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrepancy_names_the_partition() {
        let a = PowerSumPoly::<Rational>::parse(2, "1/2*p[2] + 1/2*p[1,1]").unwrap();
        let b = PowerSumPoly::<Rational>::parse(2, "1/2*p[2] + p[1,1]").unwrap();
        let d = compare_components(&a, &b).unwrap();
        assert_eq!(d.partition.to_string(), "[1,1]");
        assert!(compare_components(&a, &a).is_none());
    }

    #[test]
    fn laws_hold_on_small_sets() {
        let report = verify_functor_laws(3).unwrap();
        assert!(
            report.is_ok(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
    }

    #[test]
    fn families_agree_through_four() {
        let report = verify_families(&Catalog::new(), 4).unwrap();
        let failures: Vec<String> = report.failures().map(|c| c.to_string()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }
}
