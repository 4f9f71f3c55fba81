//! Coefficient rings and fields.
//!
//! K-classes carry coefficients in an integer-like [`Ring`]; the brute-force
//! convolution oracle works over an exact [`Field`]. Every arithmetic step is
//! checked and panics on overflow rather than wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

/// Commutative ring with exact, overflow-checked arithmetic.
pub trait Ring:
    Clone + Debug + Display + PartialEq + Eq + Hash + Zero + One + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Exact conversion back to a machine integer, if representable.
    fn to_i64(&self) -> Option<i64>;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn is_negative(&self) -> bool;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    fn mul_i64(&self, k: i64) -> Self {
        self.mul(&Self::from_i64(k))
    }

    fn add_assign(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn div(&self, other: &Self) -> Self;

    /// `Some(k)` when the element is an integer fitting in `i64`.
    fn to_integer(&self) -> Option<i64>;
}

fn overflow() -> ! {
    panic!("arithmetic overflow in exact coefficient ring")
}

macro_rules! prim_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                <$t>::try_from(v).unwrap_or_else(|_| overflow())
            }
            fn to_i64(&self) -> Option<i64> {
                i64::try_from(*self).ok()
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
            fn add(&self, other: &Self) -> Self {
                <$t>::checked_add(*self, *other).unwrap_or_else(|| overflow())
            }
            fn sub(&self, other: &Self) -> Self {
                <$t>::checked_sub(*self, *other).unwrap_or_else(|| overflow())
            }
            fn mul(&self, other: &Self) -> Self {
                <$t>::checked_mul(*self, *other).unwrap_or_else(|| overflow())
            }
        }
    };
}

prim_ring!(i64);
prim_ring!(i128);

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl<T> Ring for Ratio<T>
where
    T: Clone + Debug + Display + Hash + Integer + CheckedAdd + CheckedSub + CheckedMul,
    T: ToPrimitive + From<i32> + TryFrom<i64> + Send + Sync + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::try_from(v).unwrap_or_else(|_| overflow()))
    }
    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
    fn is_negative(&self) -> bool {
        *self < Ratio::zero()
    }
    fn add(&self, other: &Self) -> Self {
        CheckedAdd::checked_add(self, other).unwrap_or_else(|| overflow())
    }
    fn sub(&self, other: &Self) -> Self {
        CheckedSub::checked_sub(self, other).unwrap_or_else(|| overflow())
    }
    fn mul(&self, other: &Self) -> Self {
        CheckedMul::checked_mul(self, other).unwrap_or_else(|| overflow())
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Debug + Display + Hash + Integer + CheckedAdd + CheckedSub + CheckedMul,
    T: ToPrimitive + From<i32> + TryFrom<i64> + Send + Sync + 'static,
{
    fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        num_traits::CheckedDiv::checked_div(self, other).unwrap_or_else(|| overflow())
    }
    fn to_integer(&self) -> Option<i64> {
        Ring::to_i64(self)
    }
}
