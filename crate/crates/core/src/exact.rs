//! Exact scalars of the form `(a/b) · π^e`.
//!
//! Covolumes in the real case carry a factor of π and formal dimensions
//! carry π⁻¹. Keeping the exponent symbolic lets their product cancel
//! exactly instead of drifting through floating point.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VnDimError};

/// Arbitrary-precision rational number used for every exact result.
pub type Rational = BigRational;

/// Exact value `coefficient · π^pi_power`, always kept in canonical form.
///
/// The coefficient is a reduced fraction with positive denominator, and the
/// zero scalar always has `pi_power == 0`, so structural equality coincides
/// with numerical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    coefficient: Rational,
    pi_power: i32,
}

impl ExactScalar {
    /// Builds `(numerator/denominator) · π^pi_power`.
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>, pi_power: i32) -> Self {
        Self::from_rational(Rational::new(numerator.into(), denominator.into()), pi_power)
    }

    pub fn from_rational(coefficient: Rational, pi_power: i32) -> Self {
        let pi_power = if coefficient.is_zero() { 0 } else { pi_power };
        ExactScalar { coefficient, pi_power }
    }

    pub fn rational(value: Rational) -> Self {
        Self::from_rational(value, 0)
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        Self::rational(Rational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn numerator(&self) -> &BigInt {
        self.coefficient.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.coefficient.denom()
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    /// Multiplies the coefficient by a rational, leaving the π exponent alone.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_rational(&self.coefficient * factor, self.pi_power)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::from_rational(self.coefficient.recip(), -self.pi_power))
        }
    }

    /// The value as a plain rational; fails if a power of π is still present.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.pi_power != 0 {
            return Err(VnDimError::NonRationalValue {
                pi_power: self.pi_power,
            });
        }
        Ok(self.coefficient.clone())
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        self.coefficient.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(self.pi_power)
    }

    #[cfg(test)]
    fn is_canonical(&self) -> bool {
        let reduced = Rational::new(self.numerator().clone(), self.denominator().clone());
        reduced == self.coefficient && self.denominator().is_positive() && (!self.is_zero() || self.pi_power == 0)
    }
}

/// Product of two scalars; the π exponents add.
pub fn scalar_mul(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    a * b
}

/// Converts a π-free scalar to a rational.
pub fn scalar_to_rational(a: &ExactScalar) -> Result<Rational> {
    a.to_rational()
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::from_rational(&self.coefficient * &rhs.coefficient, self.pi_power + rhs.pi_power)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl From<Rational> for ExactScalar {
    fn from(value: Rational) -> Self {
        ExactScalar::rational(value)
    }
}

/// Prints `a/b` (or `a` when the denominator is 1), followed by `*pi^e`
/// when the π exponent is nonzero.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        if self.pi_power != 0 {
            write!(f, "*pi^{}", self.pi_power)?;
        }
        Ok(())
    }
}

impl FromStr for ExactScalar {
    type Err = VnDimError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (coeff, pi_power) = match s.split_once("*pi^") {
            Some((c, e)) => (
                c,
                e.parse::<i32>()
                    .map_err(|_| VnDimError::Parse(format!("bad pi exponent in {s:?}")))?,
            ),
            None => (s, 0),
        };
        Ok(ExactScalar::from_rational(parse_rational(coeff)?, pi_power))
    }
}

/// Parses `a` or `a/b` with arbitrary-size integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || VnDimError::Parse(format!("not an exact rational: {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

// JSON shape: {"num": int, "den": int, "pi_pow": int}. Integers that do not
// fit in an i64 are written as decimal strings.
impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExactScalar", 3)?;
        st.serialize_field("num", &JsonInt::from(self.numerator()))?;
        st.serialize_field("den", &JsonInt::from(self.denominator()))?;
        st.serialize_field("pi_pow", &self.pi_power)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: JsonInt,
            den: JsonInt,
            pi_pow: i32,
        }
        let raw = Raw::deserialize(deserializer)?;
        let num = raw.num.into_bigint().map_err(de::Error::custom)?;
        let den = raw.den.into_bigint().map_err(de::Error::custom)?;
        if !den.is_positive() {
            return Err(de::Error::custom("denominator must be positive"));
        }
        let reduced = num_integer::Integer::gcd(&num, &den).is_one();
        let canonical_zero = !num.is_zero() || (den.is_one() && raw.pi_pow == 0);
        if !reduced || !canonical_zero {
            return Err(de::Error::custom("scalar is not in canonical form"));
        }
        Ok(ExactScalar::from_rational(Rational::new(num, den), raw.pi_pow))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(value: &BigInt) -> Self {
        match value.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(value.to_string()),
        }
    }
}

impl JsonInt {
    fn into_bigint(self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(v)),
            JsonInt::Big(s) => BigInt::from_str(&s).map_err(|e| e.to_string()),
        }
    }
}

/// `serialize_with` helper: a rational in the `{"num", "den", "pi_pow"}` shape.
pub fn serialize_rational<S: Serializer>(value: &Rational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    ExactScalar::rational(value.clone()).serialize(serializer)
}

pub fn serialize_optional_rational<S: Serializer>(
    value: &Option<Rational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    value.clone().map(ExactScalar::rational).serialize(serializer)
}

/// `serialize_with` helper: an integer as a JSON number, or a decimal string
/// when it does not fit in an i64.
pub fn serialize_integer<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    JsonInt::from(value).serialize(serializer)
}

pub(crate) fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

pub(crate) fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub(crate) fn rint(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
