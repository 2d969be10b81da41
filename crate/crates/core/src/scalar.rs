use std::fmt::{Debug, Display};

use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Scalar type for transition probabilities.
///
/// Floating types check distributions against a tolerance; rational types
/// are exact and require sums of exactly one.
pub trait Probability:
    Clone + Debug + Display + PartialOrd + Num + Signed + ToPrimitive + FromPrimitive + Send + Sync
{
    /// Absolute slack allowed when checking that a distribution sums to one.
    /// Zero means exact.
    const SUM_TOLERANCE: f64;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        Self::SUM_TOLERANCE == 0.0
    }

    fn is_unit_sum(&self) -> bool {
        if Self::is_exact() {
            *self == Self::one()
        } else {
            (self.to_f64_lossy() - 1.0).abs() <= Self::SUM_TOLERANCE
        }
    }
}

impl Probability for f64 {
    const SUM_TOLERANCE: f64 = 1e-9;
}

impl Probability for f32 {
    const SUM_TOLERANCE: f64 = 1e-6;
}

impl Probability for BigRational {
    const SUM_TOLERANCE: f64 = 0.0;
}

impl Probability for Rational64 {
    const SUM_TOLERANCE: f64 = 0.0;
}
