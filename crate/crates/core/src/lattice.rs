//! The lattice `Z^2`, its `det` and `gcd` functions, and the affine group
//! `Z^2 ⋊ SL(2, Z)` acting on it. Coordinates are arbitrary precision since
//! products of `SL(2, Z)` words grow exponentially.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub q: BigInt,
    pub r: BigInt,
}

impl LatticePoint {
    pub fn new(q: i64, r: i64) -> Self {
        LatticePoint { q: q.into(), r: r.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.r.is_zero()
    }

    /// `n * self`.
    pub fn scale(&self, n: i64) -> Self {
        LatticePoint { q: &self.q * n, r: &self.r * n }
    }

    /// Both coordinates as machine integers, when they fit.
    pub fn to_i64(&self) -> Option<(i64, i64)> {
        Some((self.q.to_i64()?, self.r.to_i64()?))
    }

    /// Position in the square spiral `(0,0), (1,0), (1,1), (0,1), (-1,1), ...`
    /// as `(ring, offset)`; compare keys to compare positions.
    pub fn spiral_key(&self) -> (BigInt, BigInt) {
        let n = self.q.abs().max(self.r.abs());
        if n.is_zero() {
            return (n, BigInt::zero());
        }
        let (q, r) = (&self.q, &self.r);
        let one = BigInt::one();
        let offset = if *q == n && *r > -&n {
            r + &n - &one
        } else if *r == n {
            BigInt::from(2) * &n + (&n - &one - q)
        } else if *q == -&n {
            BigInt::from(4) * &n + (&n - &one - r)
        } else {
            BigInt::from(6) * &n + (q + &n - &one)
        };
        (n, offset)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: &LatticePoint) -> LatticePoint {
        LatticePoint { q: &self.q + &o.q, r: &self.r + &o.r }
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: &LatticePoint) -> LatticePoint {
        LatticePoint { q: &self.q - &o.q, r: &self.r - &o.r }
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint { q: -&self.q, r: -&self.r }
    }
}

/// `det((q, r), (q0, r0)) = q r0 - r q0`.
pub fn det2(k: &LatticePoint, k0: &LatticePoint) -> BigInt {
    &k.q * &k0.r - &k.r * &k0.q
}

/// `gcd(|q|, |r|)`, with `gcd2(0) = 0`.
pub fn gcd2(k: &LatticePoint) -> BigInt {
    k.q.gcd(&k.r)
}

/// Points of `Z^2` in square-spiral order, starting at the origin and
/// heading east, then counterclockwise ring by ring.
pub fn spiral() -> impl Iterator<Item = LatticePoint> {
    std::iter::once(LatticePoint::zero()).chain((1i64..).flat_map(|n| {
        let right = (-n + 1..=n).map(move |r| (n, r));
        let top = (-n..n).rev().map(move |q| (q, n));
        let left = (-n..n).rev().map(move |r| (-n, r));
        let bottom = (-n + 1..=n).map(move |q| (q, -n));
        right.chain(top).chain(left).chain(bottom).map(|(q, r)| LatticePoint::new(q, r))
    }))
}

/// A 2x2 integer matrix `[[x, y], [z, w]]` of determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sl2 {
    m: [[BigInt; 2]; 2],
}

impl Sl2 {
    pub fn new(x: i64, y: i64, z: i64, w: i64) -> Result<Self> {
        Self::from_big([[x.into(), y.into()], [z.into(), w.into()]])
    }

    pub fn from_big(m: [[BigInt; 2]; 2]) -> Result<Self> {
        if &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] != BigInt::one() {
            return Err(Error::NotSl2);
        }
        Ok(Sl2 { m })
    }

    pub fn identity() -> Self {
        Sl2::new(1, 0, 0, 1).unwrap()
    }

    pub fn entries(&self) -> &[[BigInt; 2]; 2] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, k: &LatticePoint) -> LatticePoint {
        let m = &self.m;
        LatticePoint { q: &m[0][0] * &k.q + &m[0][1] * &k.r, r: &m[1][0] * &k.q + &m[1][1] * &k.r }
    }

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Sl2 { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn inv(&self) -> Sl2 {
        let m = &self.m;
        Sl2 { m: [[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]] }
    }
}

impl fmt::Debug for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "({} {}; {} {})", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// An element `(k, gamma)` of `Z^2 ⋊ SL(2, Z)`, acting by `x -> k + gamma x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineSL2 {
    pub translation: LatticePoint,
    pub matrix: Sl2,
}

impl AffineSL2 {
    pub fn new(translation: LatticePoint, matrix: Sl2) -> Self {
        AffineSL2 { translation, matrix }
    }

    pub fn identity() -> Self {
        Self::new(LatticePoint::zero(), Sl2::identity())
    }

    pub fn translation(k: LatticePoint) -> Self {
        Self::new(k, Sl2::identity())
    }

    pub fn linear(m: Sl2) -> Self {
        Self::new(LatticePoint::zero(), m)
    }

    /// `(k1, g1)(k2, g2) = (k1 + g1 k2, g1 g2)`.
    pub fn mul(&self, o: &AffineSL2) -> AffineSL2 {
        AffineSL2 {
            translation: &self.translation + &self.matrix.apply(&o.translation),
            matrix: self.matrix.mul(&o.matrix),
        }
    }

    pub fn inv(&self) -> AffineSL2 {
        let mi = self.matrix.inv();
        AffineSL2 { translation: -&mi.apply(&self.translation), matrix: mi }
    }

    pub fn act(&self, k: &LatticePoint) -> LatticePoint {
        &self.translation + &self.matrix.apply(k)
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.matrix.is_identity()
    }
}

impl fmt::Debug for AffineSL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.translation, self.matrix)
    }
}

pub fn e1() -> LatticePoint {
    LatticePoint::new(1, 0)
}

pub fn e2() -> LatticePoint {
    LatticePoint::new(0, 1)
}

/// `(e1, (-1 -1; 1 0))`, of order 3, cycling `0 -> e1 -> e2 -> 0`.
pub fn xi() -> AffineSL2 {
    AffineSL2::new(e1(), Sl2::new(-1, -1, 1, 0).unwrap())
}

/// `-I`.
pub fn eta() -> Sl2 {
    Sl2::new(-1, 0, 0, -1).unwrap()
}

/// `(1 1; 0 1)`, fixing the horizontal axis pointwise.
pub fn delta() -> Sl2 {
    Sl2::new(1, 1, 0, 1).unwrap()
}

/// The named elements used throughout.
#[derive(Clone, Debug)]
pub struct Constants {
    pub e1: LatticePoint,
    pub e2: LatticePoint,
    pub xi: AffineSL2,
    pub eta: Sl2,
    pub delta: Sl2,
}

pub fn constants() -> Constants {
    Constants { e1: e1(), e2: e2(), xi: xi(), eta: eta(), delta: delta() }
}

fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn big_from_json(v: &Value) -> std::result::Result<BigInt, String> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("{n} is not an integer")),
        Value::String(s) => s.parse().map_err(|_| format!("{s:?} is not an integer")),
        other => Err(format!("expected an integer, got {other}")),
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Value::Array(vec![big_to_json(&self.q), big_to_json(&self.r)]).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<Value> = Vec::deserialize(d)?;
        if v.len() != 2 {
            return Err(D::Error::custom("lattice point needs two coordinates"));
        }
        Ok(LatticePoint {
            q: big_from_json(&v[0]).map_err(D::Error::custom)?,
            r: big_from_json(&v[1]).map_err(D::Error::custom)?,
        })
    }
}

impl Serialize for AffineSL2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.matrix.entries();
        let rows: Vec<Value> = m.iter().map(|row| Value::Array(row.iter().map(big_to_json).collect())).collect();
        serde_json::json!({"t": self.translation, "m": rows}).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineSL2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Repr {
            t: LatticePoint,
            m: Vec<Vec<Value>>,
        }
        let r = Repr::deserialize(d)?;
        if r.m.len() != 2 || r.m.iter().any(|row| row.len() != 2) {
            return Err(D::Error::custom("matrix must be 2x2"));
        }
        let e = |i: usize, j: usize| big_from_json(&r.m[i][j]).map_err(D::Error::custom);
        let m = Sl2::from_big([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]]).map_err(D::Error::custom)?;
        Ok(AffineSL2::new(r.t, m))
    }
}
