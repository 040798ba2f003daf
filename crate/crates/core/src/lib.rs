//! Exact arithmetic on cycle index series of combinatorial species.
//!
//! The algebra is generic over a [`Scalar`] coefficient field. Counting needs
//! exact rationals, so the aliases below fix the coefficient type to
//! [`Rational`] and are what most callers want.

pub mod bipartite;
pub mod catalog;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod series;

pub use bipartite::{labeled_count, unlabeled_count, BipartitePipeline};
pub use catalog::Catalog;
pub use error::{Error, Result};
pub use gamma::{FiniteGroup, GammaCis};
pub use partition::{Partition, Partitions};
pub use poly::PowerSumPoly;
pub use scalar::Scalar;
pub use series::{CycleIndexSeries, SeriesHandle};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type Poly = PowerSumPoly<Rational>;
pub type Series = CycleIndexSeries<Rational>;
pub type GammaSeries = GammaCis<Rational>;
