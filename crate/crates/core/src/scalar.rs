//! Scalar types for charge bookkeeping.

use std::fmt::{Debug, Display};

use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedSub, Num, Signed, ToPrimitive};

/// A number that can hold discharging amounts such as `13/15`.
///
/// Arbitrary-precision rationals are the reference instantiation. Totals
/// over large graphs mix denominators `d(v)` for many degrees, so the
/// checked `i64` rationals can overflow; they report it instead of
/// wrapping. Floats are supported and lose exactness.
pub trait Charge: Clone + PartialOrd + Num + Signed + Debug + Display {
    /// `num / den`; `den` is nonzero.
    fn ratio(num: i64, den: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::ratio(value, 1)
    }

    fn try_add(&self, other: &Self) -> Option<Self>;

    fn try_sub(&self, other: &Self) -> Option<Self>;

    /// Denominator in lowest terms, for exact types.
    fn denominator(&self) -> Option<i64> {
        None
    }
}

impl Charge for BigRational {
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }

    fn try_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }

    fn try_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }

    fn denominator(&self) -> Option<i64> {
        self.denom().to_i64()
    }
}

impl Charge for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn try_add(&self, other: &Self) -> Option<Self> {
        self.checked_add(other)
    }

    fn try_sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(other)
    }

    fn denominator(&self) -> Option<i64> {
        Some(*self.denom())
    }
}

macro_rules! float_charge {
    ($($t:ty)*) => ($(
        impl Charge for $t {
            fn ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }

            fn try_add(&self, other: &Self) -> Option<Self> {
                Some(self + other).filter(|x| x.is_finite())
            }

            fn try_sub(&self, other: &Self) -> Option<Self> {
                Some(self - other).filter(|x| x.is_finite())
            }
        }
    )*)
}

float_charge!(f32 f64);
