use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use wittkit_core::linalg::Rational;

/// Default absolute tolerance for comparisons involving floats.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A real number kept exact while every input and operation allows it.
#[derive(Clone, Debug, PartialEq)]
pub enum Number {
    Exact(Rational),
    Approx(f64),
}

impl Number {
    pub fn int(v: i64) -> Self {
        Number::Exact(Rational::from_int(v))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Number::Exact(Rational::new(p, q))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => r.to_f64(),
            Number::Approx(x) => *x,
        }
    }

    fn combine(
        &self,
        other: &Self,
        exact: impl Fn(&Rational, &Rational) -> Rational,
        approx: impl Fn(f64, f64) -> f64,
    ) -> Self {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Number::Exact(exact(a, b)),
            _ => Number::Approx(approx(self.to_f64(), other.to_f64())),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a * b, |a, b| a * b)
    }

    /// Panics on an exact zero divisor.
    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a / b, |a, b| a / b)
    }

    pub fn neg(&self) -> Self {
        match self {
            Number::Exact(r) => Number::Exact(-r),
            Number::Approx(x) => Number::Approx(-x),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Number::Exact(r) => Number::Exact(r.abs()),
            Number::Approx(x) => Number::Approx(x.abs()),
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Exact when the value is a rational square; `None` when negative.
    pub fn sqrt(&self) -> Option<Self> {
        match self {
            Number::Exact(r) if r.signum() < 0 => None,
            Number::Exact(r) => Some(r.sqrt_exact().map_or_else(|| Number::Approx(r.to_f64().sqrt()), Number::Exact)),
            Number::Approx(x) if *x < 0.0 => None,
            Number::Approx(x) => Some(Number::Approx(x.sqrt())),
        }
    }

    /// Exact comparison when both sides are exact; otherwise values within
    /// `tol` compare equal.
    pub fn compare(&self, other: &Self, tol: f64) -> Ordering {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= tol {
                    Ordering::Equal
                } else {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.compare(&Number::int(0), tol) == Ordering::Equal
    }

    /// Parses `p`, `p/q` and decimals exactly, and anything else `f64`
    /// accepts (such as `1e-3`) approximately.
    pub fn parse(s: &str) -> Option<Self> {
        if let Ok(r) = s.trim().parse::<Rational>() {
            return Some(Number::Exact(r));
        }
        s.trim().parse::<f64>().ok().filter(|x| x.is_finite()).map(Number::Approx)
    }
}

impl From<Rational> for Number {
    fn from(r: Rational) -> Self {
        Number::Exact(r)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) => write!(f, "{r}"),
            Number::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// Exact values serialise as rational strings, approximate ones as numbers.
impl Serialize for Number {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Number::Exact(r) => r.serialize(s),
            Number::Approx(x) => s.serialize_f64(*x),
        }
    }
}

/// JSON numbers are read through their decimal text, so `1.3` is `13/10`.
impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match &v {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s.clone(),
            other => return Err(de::Error::custom(format!("expected a number or rational string, got {other}"))),
        };
        Number::parse(&text).ok_or_else(|| de::Error::custom(format!("`{text}` is not a number")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_exact() {
        let x = Number::ratio(9, 4).sqrt().unwrap();
        assert_eq!(x, Number::ratio(3, 2));
        assert!(Number::int(2).sqrt().unwrap().compare(&Number::Approx(2f64.sqrt()), 0.0).is_eq());
        assert!(Number::int(-1).sqrt().is_none());
    }

    #[test]
    fn json_numbers_are_decimal_literals() {
        let n: Number = serde_json::from_str("1.3").unwrap();
        assert_eq!(n, Number::ratio(13, 10));
        let n: Number = serde_json::from_str("\"-7/2\"").unwrap();
        assert_eq!(serde_json::to_string(&n).unwrap(), "\"-7/2\"");
        let n: Number = serde_json::from_str("\"1e-3\"").unwrap();
        assert!(!n.is_exact());
    }

    #[test]
    fn tolerance_applies_only_to_floats() {
        let a = Number::ratio(1, 3);
        assert!(a.compare(&Number::Approx(0.333_333_333_4), 1e-9).is_eq());
        assert!(a.compare(&Number::ratio(333_333_333, 1_000_000_000), 1e-3).is_gt());
    }
}
