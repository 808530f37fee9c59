//! Exact coefficient rings.
//!
//! Every structure constant of the algebra on the chosen basis is an integer, so
//! the module space and the rank routines only need ring operations plus an
//! exact division used to strip common content during elimination. Floating
//! point types are deliberately not implementors.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, Zero};

/// An exact commutative coefficient ring of characteristic zero.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// A greatest common divisor with non-negative normal form. Over a field any
    /// non-zero element is a gcd; implementations return the first non-zero argument.
    fn gcd_with(&self, other: &Self) -> Self;

    /// `self / divisor`, where the caller guarantees the quotient exists in the ring.
    fn exact_div(&self, divisor: &Self) -> Self;

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("every exact ring contains the integers")
    }
}

macro_rules! integer_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn gcd_with(&self, other: &Self) -> Self {
                Integer::gcd(self, other)
            }

            fn exact_div(&self, divisor: &Self) -> Self {
                debug_assert!(Integer::is_multiple_of(self, divisor));
                self / divisor
            }
        }
    )*};
}

integer_coefficient!(i32, i64, i128, BigInt);

impl Coefficient for BigRational {
    fn gcd_with(&self, other: &Self) -> Self {
        if self.is_zero() {
            other.abs()
        } else {
            self.abs()
        }
    }

    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl Coefficient for Ratio<i64> {
    fn gcd_with(&self, other: &Self) -> Self {
        if self.is_zero() {
            other.abs()
        } else {
            self.abs()
        }
    }

    fn exact_div(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

/// `n!` in the ring.
pub fn factorial<T: Coefficient>(n: u64) -> T {
    (1..=n).fold(T::one(), |acc, k| {
        acc * T::from_u64(k).expect("integers embed")
    })
}

/// `(-1)^k` in the ring.
pub fn sign<T: Coefficient>(negative: bool) -> T {
    if negative {
        -T::one()
    } else {
        T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(
            factorial::<BigInt>(25).to_string(),
            "15511210043330985984000000"
        );
    }

    #[test]
    fn gcd_is_non_negative() {
        assert_eq!((-6i64).gcd_with(&4), 2);
        assert_eq!(
            BigInt::from(-9).gcd_with(&BigInt::from(-6)),
            BigInt::from(3)
        );
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        assert_eq!(BigRational::zero().gcd_with(&half), half.abs());
    }

    #[test]
    fn exact_division() {
        assert_eq!(12i128.exact_div(&-4), -3);
        let q = Ratio::new(3i64, 4).exact_div(&Ratio::new(1, 2));
        assert_eq!(q, Ratio::new(3, 2));
    }
}
