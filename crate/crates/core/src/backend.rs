//! Integer backends for the coefficient recurrence.
//!
//! The recurrence only ever adds and divides exactly, so any signed integer
//! type with checked addition works. Fixed widths are fast but bounded; the
//! arbitrary-precision backend always succeeds.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

/// Largest degree for which every word fits checked signed 64-bit arithmetic
/// (checked exhaustively). At degree 18 intermediate values need 64 bits of
/// magnitude, and `18! d_18` is the last denominator below `i64::MAX`.
pub const FIXED64_MAX_DEGREE: u32 = 17;

/// Largest degree for which checked signed 128-bit arithmetic suffices. Every
/// partition word up to this degree fits (124 bits at most); `Auto` still
/// widens if some other word were to overflow.
pub const FIXED128_MAX_DEGREE: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IntegerBackend {
    Fixed64,
    Fixed128,
    Arbitrary,
    /// Picks the narrowest backend whose range covers the degree, widening on
    /// overflow.
    #[default]
    Auto,
}

impl IntegerBackend {
    /// The concrete backend used for a word of degree `n`.
    pub fn resolve(self, n: u32) -> IntegerBackend {
        match self {
            IntegerBackend::Auto => {
                if n <= FIXED64_MAX_DEGREE {
                    IntegerBackend::Fixed64
                } else if n <= FIXED128_MAX_DEGREE {
                    IntegerBackend::Fixed128
                } else {
                    IntegerBackend::Arbitrary
                }
            }
            other => other,
        }
    }

    /// Degrees up to this value are known not to overflow. `None` means unbounded.
    pub fn max_degree(self) -> Option<u32> {
        match self {
            IntegerBackend::Fixed64 => Some(FIXED64_MAX_DEGREE),
            IntegerBackend::Fixed128 => Some(FIXED128_MAX_DEGREE),
            IntegerBackend::Arbitrary | IntegerBackend::Auto => None,
        }
    }

    pub fn covers(self, n: u32) -> bool {
        self.max_degree().is_none_or(|max| n <= max)
    }

    /// Next wider concrete backend, if any.
    pub fn wider(self) -> Option<IntegerBackend> {
        match self {
            IntegerBackend::Fixed64 => Some(IntegerBackend::Fixed128),
            IntegerBackend::Fixed128 => Some(IntegerBackend::Arbitrary),
            IntegerBackend::Arbitrary | IntegerBackend::Auto => None,
        }
    }

    /// Narrowest concrete backend known to cover degree `n`.
    pub fn minimal_for(n: u32) -> IntegerBackend {
        IntegerBackend::Auto.resolve(n)
    }

    /// Short name as accepted on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            IntegerBackend::Fixed64 => "64",
            IntegerBackend::Fixed128 => "128",
            IntegerBackend::Arbitrary => "big",
            IntegerBackend::Auto => "auto",
        }
    }
}

impl fmt::Display for IntegerBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            IntegerBackend::Fixed64 => "64-bit",
            IntegerBackend::Fixed128 => "128-bit",
            IntegerBackend::Arbitrary => "arbitrary-precision",
            IntegerBackend::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown backend {0:?} (expected auto, 64, 128 or big)")]
pub struct ParseBackendError(String);

impl FromStr for IntegerBackend {
    type Err = ParseBackendError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(IntegerBackend::Auto),
            "64" | "i64" | "int64" => Ok(IntegerBackend::Fixed64),
            "128" | "i128" | "int128" => Ok(IntegerBackend::Fixed128),
            "big" | "bigint" | "arbitrary" => Ok(IntegerBackend::Arbitrary),
            _ => Err(ParseBackendError(s.to_owned())),
        }
    }
}

/// Signed integer arithmetic as needed by the recurrence.
///
/// Fixed-width implementations report overflow as `None`; the big-integer
/// implementation never overflows.
pub trait BackendInt: Clone + fmt::Debug + Send + Sync + 'static {
    const BACKEND: IntegerBackend;

    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_biguint(value: &BigUint) -> Option<Self>;
    fn from_u32(value: u32) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn checked_mul(&self, rhs: &Self) -> Option<Self>;
    /// `self += rhs`; returns `false` on overflow.
    fn add_in_place(&mut self, rhs: &Self) -> bool;
    /// `self -= rhs`; returns `false` on overflow.
    fn sub_in_place(&mut self, rhs: &Self) -> bool;
    /// Truncating quotient for a positive divisor.
    fn quotient(&self, divisor: &Self) -> Self;
    /// Quotient, or `None` if the division leaves a remainder.
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

macro_rules! fixed_backend {
    ($t:ty, $backend:expr) => {
        impl BackendInt for $t {
            const BACKEND: IntegerBackend = $backend;

            #[inline]
            fn zero() -> Self {
                0
            }

            #[inline]
            fn is_zero(&self) -> bool {
                *self == 0
            }

            fn from_biguint(value: &BigUint) -> Option<Self> {
                <$t as TryFrom<&BigUint>>::try_from(value).ok()
            }

            fn from_u32(value: u32) -> Self {
                value as $t
            }

            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }

            #[inline]
            fn checked_mul(&self, rhs: &Self) -> Option<Self> {
                <$t>::checked_mul(*self, *rhs)
            }

            #[inline]
            fn add_in_place(&mut self, rhs: &Self) -> bool {
                match <$t>::checked_add(*self, *rhs) {
                    Some(v) => {
                        *self = v;
                        true
                    }
                    None => false,
                }
            }

            #[inline]
            fn sub_in_place(&mut self, rhs: &Self) -> bool {
                match <$t>::checked_sub(*self, *rhs) {
                    Some(v) => {
                        *self = v;
                        true
                    }
                    None => false,
                }
            }

            #[inline]
            fn quotient(&self, divisor: &Self) -> Self {
                *self / *divisor
            }

            #[inline]
            fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
                if *self % *divisor == 0 {
                    Some(*self / *divisor)
                } else {
                    None
                }
            }
        }
    };
}

fixed_backend!(i64, IntegerBackend::Fixed64);
fixed_backend!(i128, IntegerBackend::Fixed128);

impl BackendInt for BigInt {
    const BACKEND: IntegerBackend = IntegerBackend::Arbitrary;

    fn zero() -> Self {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_biguint(value: &BigUint) -> Option<Self> {
        Some(BigInt::from(value.clone()))
    }

    fn from_u32(value: u32) -> Self {
        BigInt::from(value)
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }

    fn add_in_place(&mut self, rhs: &Self) -> bool {
        *self += rhs;
        true
    }

    fn sub_in_place(&mut self, rhs: &Self) -> bool {
        *self -= rhs;
        true
    }

    fn quotient(&self, divisor: &Self) -> Self {
        self / divisor
    }

    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        Zero::is_zero(&r).then_some(q)
    }
}

/// `[0!, 1!, ..., n!]` in backend arithmetic, or `None` if `n!` overflows.
pub fn factorial_table<T: BackendInt>(n: u32) -> Option<Vec<T>> {
    let mut table = Vec::with_capacity(n as usize + 1);
    let mut acc = T::from_u32(1);
    table.push(acc.clone());
    for k in 1..=n {
        acc = acc.checked_mul(&T::from_u32(k))?;
        table.push(acc.clone());
    }
    Some(table)
}

/// Narrows an arbitrary-precision value to `T`.
pub fn narrow<T: BackendInt>(value: &BigUint) -> Option<T> {
    T::from_biguint(value)
}
