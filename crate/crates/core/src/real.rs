//! Fixed-point decimals for the reporting layer.
//!
//! Everything upstream is an exact integer or rational; reals only appear
//! where roots are taken for the asymptotic bounds. Values carry
//! [`FRACTION_DIGITS`] decimal digits and are truncated toward zero.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

pub const FRACTION_DIGITS: u32 = 40;

fn scale() -> BigInt {
    BigInt::from(10u32).pow(FRACTION_DIGITS)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Real {
    scaled: BigInt,
}

impl Real {
    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Real {
            scaled: n.into() * scale(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Real {
            scaled: (r.numer() * scale()) / r.denom(),
        }
    }

    /// `r^(1/root)` for a nonnegative rational, truncated.
    pub fn root_of_rational(r: &BigRational, root: u32) -> Self {
        assert!(!r.is_negative(), "root of a negative number");
        assert!(root >= 1);
        // (p/q)^(1/d) = (p q^(d-1))^(1/d) / q
        let q = r.denom();
        let radicand = r.numer() * q.pow(root - 1) * scale().pow(root);
        Real {
            scaled: radicand.nth_root(root) / q,
        }
    }

    pub fn mul_integer(&self, k: impl Into<BigInt>) -> Self {
        Real {
            scaled: &self.scaled * k.into(),
        }
    }

    /// `self / other`; `None` when `other` is zero.
    pub fn checked_div(&self, other: &Real) -> Option<Real> {
        if other.scaled.is_zero() {
            return None;
        }
        Some(Real {
            scaled: (&self.scaled * scale()) / &other.scaled,
        })
    }

    pub fn sub(&self, other: &Real) -> Real {
        Real {
            scaled: &self.scaled - &other.scaled,
        }
    }

    pub fn abs(&self) -> Real {
        Real {
            scaled: self.scaled.abs(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.scaled.sign() == Sign::Plus
    }

    pub fn to_f64(&self) -> f64 {
        self.format(17).parse().unwrap_or(f64::NAN)
    }

    /// Decimal string with exactly `decimals` fraction digits, rounded half
    /// away from zero.
    pub fn format(&self, decimals: u32) -> String {
        let decimals = decimals.min(FRACTION_DIGITS);
        let drop = BigInt::from(10u32).pow(FRACTION_DIGITS - decimals);
        let mag = self.scaled.abs();
        let mut q = &mag / &drop;
        if (&mag % &drop) * 2 >= drop {
            q += 1;
        }
        let unit = BigInt::from(10u32).pow(decimals);
        let int_part = &q / &unit;
        let frac_part = &q % &unit;
        let sign = if self.scaled.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        if decimals == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{:0>width$}",
                frac_part.to_string(),
                width = decimals as usize
            )
        }
    }

    pub fn cmp_f64(&self, x: f64) -> Option<Ordering> {
        self.to_f64().partial_cmp(&x)
    }

    pub fn scaled_u128(&self) -> Option<u128> {
        self.scaled.to_u128()
    }
}

/// Serialized as a decimal string with 12 fraction digits.
impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format(12))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(f.precision().unwrap_or(12) as u32))
    }
}
