//! Ground-field abstraction and the exact scalar types.
//!
//! All arithmetic in this crate is exact: the default field is ℚ with
//! arbitrary-precision integers (`Rational`), and a prime-field mode
//! `Fp<P>` is available at construction time for experiments over ℤ/pℤ.
//! There is no floating point anywhere.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Exact rational scalar: reduced fraction with positive denominator,
/// zero represented as 0/1. Serializes as `"p/q"`, or `"p"` when q = 1.
pub type Rational = BigRational;

/// A field of scalars usable by the linear-algebra kernel.
///
/// Every operation in the crate is a pure function over `Field` values;
/// values are immutable and safe to share between threads.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Canonical image of a machine integer in the field.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
}

impl Field for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Error from parsing a scalar string.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed scalar `{0}`, expected `p` or `p/q`")]
    Malformed(String),
}

/// Parses the exchange format for scalars: `"p"` or `"p/q"` with q ≠ 0.
/// The result is reduced with positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let s = s.trim();
    let mut parts = s.splitn(2, '/');
    let numer = parts.next().unwrap_or("");
    let numer: BigInt = numer
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(numer.to_string()))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(d) => {
            if d.contains('/') {
                return Err(ScalarParseError::Malformed(s.to_string()));
            }
            let denom: BigInt = d
                .parse()
                .map_err(|_| ScalarParseError::BadInteger(d.to_string()))?;
            if denom.is_zero() {
                return Err(ScalarParseError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Shorthand for the fraction n/d. Panics if d = 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Prime-field element modulo the constant `P`.
///
/// `P` must be prime; inverses are computed by the extended Euclidean
/// algorithm, so a composite modulus is detected lazily when a
/// non-invertible nonzero element shows up.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(n: i64) -> Self {
        let p = P as i128;
        Fp((((n as i128 % p) + p) % p) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<'a, const P: u64> Add<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self + *rhs
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + (P - rhs.0) as u128) % P as u128) as u64)
    }
}

impl<'a, const P: u64> Sub<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self - *rhs
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<'a, const P: u64> Mul<&'a Fp<P>> for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self * *rhs
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    // field division is multiplication by the inverse
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by a non-invertible element")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
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

impl<const P: u64> Field for Fp<P> {
    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Extended Euclid on (P, self).
        let (mut r0, mut r1) = (P as i128, self.0 as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return None;
        }
        let p = P as i128;
        Some(Fp((((s0 % p) + p) % p) as u64))
    }
}
