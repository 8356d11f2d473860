use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Q/Z, read as the exponent of `exp(2 pi i x)`.
///
/// Always stored reduced: `0 <= num < den` and `gcd(num, den) = 1`, with zero
/// written `0/1`. Products of circle values become sums of phases.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Phase {
    num: u64,
    den: u64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };
    pub const HALF: Phase = Phase { num: 1, den: 2 };

    /// `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase with zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Phase {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let r = num.rem_euclid(den);
        let g = r.gcd(&den);
        let (n, d) = (r / g, den / g);
        Phase {
            num: u64::try_from(n).expect("phase numerator overflow"),
            den: u64::try_from(d).expect("phase denominator overflow"),
        }
    }

    pub fn from_ratio(r: &Ratio<i64>) -> Phase {
        Phase::new(*r.numer(), *r.denom())
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `n * self mod 1`.
    pub fn scale(&self, n: i64) -> Phase {
        let m = (n as i128).rem_euclid(self.den as i128);
        Self::from_i128(m * self.num as i128, self.den as i128)
    }

    /// Scaling by an arbitrary-precision integer, e.g. a determinant of
    /// lattice points.
    pub fn scale_big(&self, n: &BigInt) -> Phase {
        let d = BigInt::from(self.den);
        let m = n.mod_floor(&d).to_i64().expect("reduced below denominator");
        self.scale(m)
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        Ratio::new(self.num as i64, self.den as i64)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ZERO
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        let l = (self.den as i128).lcm(&(rhs.den as i128));
        let a = self.num as i128 * (l / self.den as i128);
        let b = rhs.num as i128 * (l / rhs.den as i128);
        Phase::from_i128(a + b, l)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_i128(-(self.num as i128), self.den as i128)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl std::iter::Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `p/q` with any integer `p` and nonzero `q`, reducing mod 1;
    /// a bare integer is read as `p/1`.
    fn from_str(s: &str) -> Result<Phase> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| Error::Phase(s.to_string()))?;
        let q: BigInt = q.parse().map_err(|_| Error::Phase(s.to_string()))?;
        if q.is_zero() {
            return Err(Error::Phase(s.to_string()));
        }
        let q_abs = q.abs();
        let p = if q.is_negative() { -p } else { p };
        let r = p.mod_floor(&q_abs);
        let g = r.gcd(&q_abs);
        let num = (&r / &g).to_u64().ok_or_else(|| Error::Phase(s.to_string()))?;
        let den = (&q_abs / &g).to_u64().ok_or_else(|| Error::Phase(s.to_string()))?;
        Ok(Phase { num, den })
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Phase, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
