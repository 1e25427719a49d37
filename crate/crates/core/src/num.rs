//! Exact extended non-negative rationals.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational scalar used throughout (matrix entries, scale factors).
pub type Rational = num_rational::Ratio<i64>;

/// A non-negative rational or positive infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Fin(Rational),
    Inf,
}

impl ExtRat {
    pub const INF: ExtRat = ExtRat::Inf;

    pub fn zero() -> Self {
        ExtRat::Fin(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Self::new(Rational::from_integer(n))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::new(Rational::new(p, q))
    }

    /// Panics on a negative value.
    pub fn new(r: Rational) -> Self {
        assert!(!r.is_negative(), "extended rational must be non-negative: {r}");
        ExtRat::Fin(r)
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, ExtRat::Inf)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRat::Fin(r) if r.is_zero())
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            ExtRat::Fin(r) => Some(*r),
            ExtRat::Inf => None,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Multiplication by a strictly positive rational; `∞` stays `∞`.
    pub fn scale(self, factor: Rational) -> Self {
        assert!(factor.is_positive(), "scale factor must be positive");
        match self {
            ExtRat::Fin(r) => ExtRat::Fin(r * factor),
            ExtRat::Inf => ExtRat::Inf,
        }
    }

    /// Multiplication by `2^k` for any integer `k`.
    pub fn scale_pow2(self, k: i64) -> Self {
        self.scale(pow2(k))
    }

    /// Truncated subtraction `max(self - other, 0)`, with `∞ - ∞ = 0`.
    pub fn monus(self, other: Self) -> Self {
        match (self, other) {
            (_, ExtRat::Inf) => ExtRat::zero(),
            (ExtRat::Inf, ExtRat::Fin(_)) => ExtRat::Inf,
            (ExtRat::Fin(a), ExtRat::Fin(b)) => {
                if a > b {
                    ExtRat::Fin(a - b)
                } else {
                    ExtRat::zero()
                }
            }
        }
    }
}

/// `2^k` as an exact rational.
pub fn pow2(k: i64) -> Rational {
    let two = Rational::from_integer(2);
    if k >= 0 {
        num_traits::pow(two, k as usize)
    } else {
        Rational::one() / num_traits::pow(two, (-k) as usize)
    }
}

/// `x^k` for a non-zero rational and any integer `k`.
pub fn rpow(x: Rational, k: i64) -> Rational {
    assert!(!x.is_zero(), "zero has no negative powers");
    if k >= 0 {
        num_traits::pow(x, k as usize)
    } else {
        Rational::one() / num_traits::pow(x, (-k) as usize)
    }
}

impl Add for ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => ExtRat::Fin(a + b),
            _ => ExtRat::Inf,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Inf, ExtRat::Inf) => Ordering::Equal,
            (ExtRat::Inf, _) => Ordering::Greater,
            (_, ExtRat::Inf) => Ordering::Less,
            (ExtRat::Fin(a), ExtRat::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Inf => f.write_str("inf"),
            ExtRat::Fin(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtRat::Fin(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExtRatError(pub String);

impl fmt::Display for ParseExtRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid extended rational {:?}", self.0)
    }
}

impl FromStr for ExtRat {
    type Err = ParseExtRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ExtRat::Inf);
        }
        let err = || ParseExtRatError(s.to_string());
        let r = match t.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| err())?;
                let q: i64 = q.trim().parse().map_err(|_| err())?;
                if q == 0 {
                    return Err(err());
                }
                Rational::new(p, q)
            }
            None => Rational::from_integer(t.parse().map_err(|_| err())?),
        };
        if r.is_negative() {
            return Err(err());
        }
        Ok(ExtRat::Fin(r))
    }
}

impl Serialize for ExtRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format!("{self}"))
    }
}

impl<'de> Deserialize<'de> for ExtRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Formats a plain rational as `p/q` (or `p` when integral).
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_absorbs_addition() {
        assert_eq!(ExtRat::int(3) + ExtRat::Inf, ExtRat::Inf);
        assert_eq!(ExtRat::Inf.min(ExtRat::frac(1, 2)), ExtRat::frac(1, 2));
        assert!(ExtRat::Inf > ExtRat::int(1_000_000));
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "1/2", "3", "inf", "7/3"] {
            let v: ExtRat = s.parse().unwrap();
            assert_eq!(format!("{v}"), s);
        }
        assert_eq!("2/4".parse::<ExtRat>().unwrap(), ExtRat::frac(1, 2));
        assert!("-1".parse::<ExtRat>().is_err());
        assert!("1/0".parse::<ExtRat>().is_err());
        assert!("x".parse::<ExtRat>().is_err());
    }

    #[test]
    fn monus_truncates() {
        assert_eq!(ExtRat::int(1).monus(ExtRat::int(3)), ExtRat::zero());
        assert_eq!(ExtRat::int(3).monus(ExtRat::int(1)), ExtRat::int(2));
        assert_eq!(ExtRat::Inf.monus(ExtRat::int(1)), ExtRat::Inf);
    }

    #[test]
    fn powers_of_two_cancel() {
        for k in -4..=4 {
            let d = ExtRat::frac(3, 7);
            assert_eq!(d.scale_pow2(k).scale_pow2(-k), d);
        }
        assert_eq!(rpow(Rational::new(1, 2), -2), Rational::from_integer(4));
    }
}
