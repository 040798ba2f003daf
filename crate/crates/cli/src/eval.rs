//! Evaluation of species expressions against the catalog.

use std::collections::HashMap;

use num_bigint::BigInt;
use species_core::{catalog, Catalog, Error, Rational, Result, Series};

use crate::expr::{Expr, SPECIES_NAMES};

/// Resolves names to shared series, so repeated names reuse memoized work.
pub struct Evaluator {
    names: HashMap<&'static str, Series>,
    omega: Series,
}

impl Evaluator {
    pub fn new() -> Self {
        let catalog = Catalog::<Rational>::new();
        let mut names: HashMap<&'static str, Series> = catalog
            .entries()
            .iter()
            .map(|e| (e.name, e.series.clone()))
            .collect();
        let pipeline = catalog.pipeline();
        let graphs = names["G"].clone();
        let connected = names["Gc"].clone();
        names.insert("P", pipeline.phi_point_determining(&graphs));
        names.insert("Mc", pipeline.phi_endpoint_free(&connected, true));
        debug_assert!(SPECIES_NAMES.iter().all(|n| names.contains_key(n)));
        Self {
            names,
            omega: catalog.omega().clone(),
        }
    }

    pub fn series(&self, name: &str) -> Option<&Series> {
        self.names.get(name)
    }

    pub fn eval(&self, expr: &Expr) -> Result<Series> {
        Ok(match expr {
            Expr::Atom(name) => self
                .names
                .get(name.as_str())
                .cloned()
                .ok_or(Error::Undefined)?,
            Expr::Int(k) => catalog::one().scale(Rational::from_integer(BigInt::from(*k))),
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Compose(outer, inner) => {
                let inner = self.eval(inner)?;
                if !inner.component(0)?.is_zero() {
                    return Err(Error::NonzeroConstantTerm);
                }
                self.eval(outer)?.compose(&inner)
            }
            Expr::Derivative(a) => self.eval(a)?.derivative(),
            Expr::Point(a) => self.eval(a)?.point(),
            Expr::Inverse(a) => self.eval(a)?.comp_inverse()?,
            Expr::Log(a) => {
                let inner = self.eval(a)?;
                if !inner.component(0)?.is_zero() {
                    return Err(Error::NonzeroConstantTerm);
                }
                self.omega.compose(&inner)
            }
        })
    }
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}
