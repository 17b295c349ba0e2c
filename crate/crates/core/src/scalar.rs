//! Exact rational scalars.
//!
//! Every formula in this crate has a denominator dividing 8, so values are
//! carried as arbitrary-precision rationals and only converted to integers
//! through [`ExactScalar::to_integer`], which refuses to round.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number with a positive denominator, always in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64`, or `None` if it is fractional or out of range.
    pub fn to_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    /// Exact division; `None` for a zero divisor.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            None
        } else {
            Some(Self(&self.0 / &rhs.0))
        }
    }

    /// Display-only decimal approximation.
    pub fn approx_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        Self(BigRational::from_integer(n))
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parse error for the `p` or `p/q` textual form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(String);

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(Self::from).map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Self(BigRational::new(n, d)))
            }
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<i64> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: i64) -> ExactScalar {
                ExactScalar(self.0.$method(BigRational::from_integer(BigInt::from(rhs))))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

/// Integer square root of a non-negative `i64`.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative value {n}");
    n.isqrt()
}

/// Exact sign of `x + sqrt(q)` for rational `x` and `q >= 0`.
pub fn sign_plus_sqrt(x: &ExactScalar, q: i64) -> Ordering {
    debug_assert!(q >= 0);
    if !x.is_negative() {
        if x.is_zero() && q == 0 {
            return Ordering::Equal;
        }
        return Ordering::Greater;
    }
    // x < 0: compare q with x^2
    let q = ExactScalar::from_int(q);
    q.cmp(&(x * x))
}

/// Exact comparison of `a + sqrt(p)` with `b + sqrt(q)`, `p, q >= 0`.
pub fn cmp_sqrt_forms(a: &ExactScalar, p: i64, b: &ExactScalar, q: i64) -> Ordering {
    let u = a - b;
    if p == q {
        return u.signum();
    }
    // sign(u + sqrt(p) - sqrt(q)); v = sqrt(p) - sqrt(q) has the sign of p - q.
    let v_sign = p.cmp(&q);
    let u_sign = u.signum();
    if u_sign == Ordering::Equal || u_sign == v_sign {
        return v_sign;
    }
    // Opposite signs: compare |u| with |v|, i.e. u^2 with p + q - 2 sqrt(pq).
    // u^2 ? p + q - 2 sqrt(pq)  <=>  2 sqrt(pq) ? p + q - u^2
    let w = ExactScalar::from_int(p + q) - &u * &u;
    // sign(2 sqrt(pq) - w) = sign(-w + sqrt(4pq))
    let cmp_abs = sign_plus_sqrt(&-w, 4 * p * q);
    // cmp_abs = sign(|u| - |v|) after substituting.
    match cmp_abs {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => u_sign,
        Ordering::Less => v_sign,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let x = ExactScalar::ratio(960, 62);
        assert_eq!(x.to_string(), "480/31");
        assert_eq!("480/31".parse::<ExactScalar>().unwrap(), x);
        assert_eq!("-7".parse::<ExactScalar>().unwrap(), ExactScalar::from_int(-7));
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("x".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn integrality() {
        assert_eq!(ExactScalar::ratio(244, 4).to_integer(), Some(61));
        assert_eq!(ExactScalar::ratio(77, 2).to_integer(), None);
        assert_eq!(ExactScalar::ratio(-7, 2).floor(), BigInt::from(-4));
    }

    #[test]
    fn sqrt_form_comparison() {
        // 5 + sqrt(489) ~ 27.11 vs 480/31 ~ 15.48
        let five = ExactScalar::from_int(5);
        let r = ExactScalar::ratio(480, 31);
        assert_eq!(cmp_sqrt_forms(&five, 489, &r, 0), Ordering::Greater);
        // 1 + sqrt(4) == 3 + sqrt(0)
        assert_eq!(
            cmp_sqrt_forms(&ExactScalar::from_int(1), 4, &ExactScalar::from_int(3), 0),
            Ordering::Equal
        );
        // sqrt(2) + sqrt(0) vs 0 + sqrt(2)... identical
        assert_eq!(
            cmp_sqrt_forms(&ExactScalar::zero(), 2, &ExactScalar::zero(), 2),
            Ordering::Equal
        );
        // 3 + sqrt(2) vs 1 + sqrt(9): 4.414 vs 4
        assert_eq!(
            cmp_sqrt_forms(&ExactScalar::from_int(3), 2, &ExactScalar::from_int(1), 9),
            Ordering::Greater
        );
    }

    proptest::proptest! {
        #[test]
        fn sqrt_comparison_matches_floats(a in -50i64..50, p in 0i64..400, b in -50i64..50, q in 0i64..400) {
            let lhs = a as f64 + (p as f64).sqrt();
            let rhs = b as f64 + (q as f64).sqrt();
            let got = cmp_sqrt_forms(&ExactScalar::from_int(a), p, &ExactScalar::from_int(b), q);
            if (lhs - rhs).abs() > 1e-9 {
                proptest::prop_assert_eq!(got, lhs.partial_cmp(&rhs).unwrap());
            } else {
                // equal in floating point: must be exactly equal iff both radicands
                // give the same surd, which for small integers means exact equality
                proptest::prop_assert_eq!(got, Ordering::Equal);
            }
        }
    }
}
