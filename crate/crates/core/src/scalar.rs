//! Exact rational scalars.
//!
//! Values whose numerator and denominator fit in an `i64` are kept in a
//! machine-word representation and combined through `i128` intermediates;
//! anything larger is promoted to a `BigRational`. Every constructor
//! normalizes, so a value has exactly one representation and structural
//! equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone)]
enum Repr {
    /// `den > 0`, `gcd(|num|, den) = 1`.
    Small { num: i64, den: i64 },
    /// Only used when the reduced value does not fit `Small`.
    Big(BigRational),
}

/// An element of the rational field, always in lowest terms with a positive
/// denominator.
#[derive(Clone)]
pub struct Scalar(Repr);

impl Scalar {
    pub const fn zero() -> Self {
        Scalar(Repr::Small { num: 0, den: 1 })
    }

    pub const fn one() -> Self {
        Scalar(Repr::Small { num: 1, den: 1 })
    }

    pub const fn from_int(n: i64) -> Self {
        Scalar(Repr::Small { num: n, den: 1 })
    }

    /// Builds `num / den`; fails when `den` is zero.
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_ratio(BigRational::new(num, den)))
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small { num: n, den: d }),
            _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den)))),
        }
    }

    fn from_ratio(r: BigRational) -> Self {
        // BigRational::new already reduces and fixes the sign.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small { num: n, den: d }),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_ratio(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Scalar, Error> {
        Scalar::one().checked_div(self)
    }

    /// Exact division; `Err(DivisionByZero)` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Scalar::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Scalar::from_ratio(self.to_ratio() / rhs.to_ratio()),
        })
    }

    /// Applies one of the four field operations by name.
    pub fn apply(&self, op: ArithOp, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// `self += a * b`, the inner step of every contraction.
    #[inline]
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if let (Repr::Small { num: sn, den: 1 }, Repr::Small { num: an, den: 1 }, Repr::Small { num: bn, den: 1 }) =
            (&self.0, &a.0, &b.0)
        {
            if let Some(v) = an.checked_mul(*bn).and_then(|p| p.checked_add(*sn)) {
                self.0 = Repr::Small { num: v, den: 1 };
                return;
            }
        }
        *self = &*self + &(a * b);
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

/// The four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            // Canonical representation: a value that fits is never Big.
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_ratio().cmp(&other.to_ratio()),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_add(*c) {
                Some(s) => Scalar(Repr::Small { num: s, den: 1 }),
                None => Scalar::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::from_i128(a * d + c * b, b * d)
            }
            _ => Scalar::from_ratio(self.to_ratio() + rhs.to_ratio()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_sub(*c) {
                Some(s) => Scalar(Repr::Small { num: s, den: 1 }),
                None => Scalar::from_i128(*a as i128 - *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::from_i128(a * d - c * b, b * d)
            }
            _ => Scalar::from_ratio(self.to_ratio() - rhs.to_ratio()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    #[inline]
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: 0, .. }, _) | (_, Repr::Small { num: 0, .. }) => Scalar::zero(),
            (Repr::Small { num: a, den: 1 }, Repr::Small { num: c, den: 1 }) => match a.checked_mul(*c) {
                Some(p) => Scalar(Repr::Small { num: p, den: 1 }),
                None => Scalar::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Scalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Scalar::from_ratio(self.to_ratio() * rhs.to_ratio()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Scalar(Repr::Small { num: n, den: *den }),
                None => Scalar::from_i128(-(*num as i128), *den as i128),
            },
            Repr::Big(r) => Scalar::from_ratio(-r.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($imp:ident, $method:ident) => {
        impl $imp<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + x)
    }
}

impl Sum<Scalar> for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`; no whitespace, no
    /// decimal points.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidScalar(s.to_string());
        let valid_int = |t: &str, signed: bool| {
            let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if !valid_int(num, true) || !valid_int(den, false) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Scalar::from_big(num, den)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
