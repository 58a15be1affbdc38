//! Scalar abstractions shared by the exact kernels.
//!
//! Two families of scalars appear: fields (used for dense elimination and
//! power-series arithmetic) and exact integer types (used for fraction-free
//! elimination and Smith normal form). Both are expressed on top of
//! `num-traits` so the same routine runs over `i64`, `i128`, `BigInt`,
//! `BigRational` and the prime fields `Fp<P>`.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// An exact field. Implemented only for types whose arithmetic is exact.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for Ratio<T> where T: Clone + Debug + Integer + Signed {}

/// An exact integer scalar with overflow detection and a lossless bridge to
/// `BigInt`.
pub trait ExactInteger:
    Clone + Debug + Display + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul
{
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn to_i128_opt(&self) -> Option<i128>;
    fn from_i128(value: i128) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    /// Converts between exact integer types, `None` if out of range.
    fn cast<U: ExactInteger>(&self) -> Option<U> {
        match self.to_i128_opt() {
            Some(v) => U::from_i128(v),
            None => U::from_bigint(&self.to_bigint()),
        }
    }
}

impl ExactInteger for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_i64()
    }
    fn to_i128_opt(&self) -> Option<i128> {
        Some(*self as i128)
    }
    fn from_i128(value: i128) -> Option<Self> {
        i64::try_from(value).ok()
    }
}

impl ExactInteger for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }
    fn to_i128_opt(&self) -> Option<i128> {
        Some(*self)
    }
    fn from_i128(value: i128) -> Option<Self> {
        Some(value)
    }
}

impl ExactInteger for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn to_i128_opt(&self) -> Option<i128> {
        self.to_i128()
    }
    fn from_i128(value: i128) -> Option<Self> {
        Some(BigInt::from(value))
    }
}

/// Arithmetic overflowed the working integer type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Element of the prime field Z/PZ with a compile-time modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(value: i64) -> Self {
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
