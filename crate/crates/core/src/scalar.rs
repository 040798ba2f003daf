//! Coefficient types for power-sum polynomials and cycle index series.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// A field the series machinery can compute over.
///
/// Everything in this crate is written against this trait. Counting results
/// (labeled and unlabeled numbers, integrality checks) need the exact
/// [`BigRational`] implementation; the floating-point implementations are for
/// quick numerical exploration only.
pub trait Scalar:
    Num + Signed + Neg<Output = Self> + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    /// `num / den`; `den` must be nonzero.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
}

impl Scalar for f64 {
    fn from_bigint(n: BigInt) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f32 {
    fn from_bigint(n: BigInt) -> Self {
        n.to_f32().unwrap_or(f32::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_is_reduced() {
        let r = BigRational::ratio(6, -4);
        assert_eq!(r, BigRational::new((-3).into(), 2.into()));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn float_conversion_saturates() {
        let huge = BigInt::from(2u8).pow(2000);
        assert!(f64::from_bigint(huge).is_infinite());
        assert_eq!(f32::ratio(1, 4), 0.25);
    }
}
