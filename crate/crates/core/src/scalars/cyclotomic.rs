use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Phase;
use crate::error::{Error, Result};

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d` and memoized.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

// Exact division by a monic integer polynomial.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(*dj).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "inexact cyclotomic division");
    quot
}

pub fn totient(n: u64) -> u64 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An exact element of the cyclotomic field `Q(zeta_N)`.
///
/// The value is `(1/den) * sum_i nums[i] * zeta_N^i` with `nums.len() = phi(N)`,
/// i.e. the residue modulo `Phi_N` written over a common denominator. The
/// common denominator is kept positive and coprime to the content of
/// `nums`, so within one order the representation is unique. Elements of
/// different orders compare equal when they agree after rebasing to the lcm.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    nums: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, nums: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { order: 1, nums: vec![q.numer().clone()], den: q.denom().clone() }.normalized()
    }

    /// `zeta_den^num` for the phase `num/den`, in `Q(zeta_den)`.
    pub fn from_phase(p: Phase) -> Self {
        let n = p.den();
        let mut poly = vec![BigInt::zero(); n as usize];
        poly[p.num() as usize] = BigInt::one();
        Self::from_poly(n, poly, BigInt::one())
    }

    /// Builds the canonical element from an arbitrary polynomial in `zeta_order`.
    pub fn from_poly(order: u64, poly: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero());
        let nums = reduce(order, poly);
        Cyclotomic { order, nums, den }.normalized()
    }

    /// Canonical coefficients as rationals, low degree first.
    pub fn from_coeffs(order: u64, coeffs: &[BigRational]) -> Result<Self> {
        let phi = totient(order) as usize;
        if coeffs.len() != phi {
            return Err(Error::parse(
                "coeffs",
                format!("expected {phi} coefficients for order {order}, got {}", coeffs.len()),
            ));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Cyclotomic { order, nums, den }.normalized())
    }

    fn normalized(mut self) -> Self {
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.nums {
                *c = -&*c;
            }
        }
        let g = self.nums.iter().fold(self.den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() && !g.is_zero() {
            for c in &mut self.nums {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.nums.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
        self
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.nums.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.nums.iter().skip(1).all(Zero::is_zero) {
            Some(BigRational::new(self.nums[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(zeta_target)`; `order` must divide `target`.
    pub fn rebase(&self, target: u64) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::Rebase { order: self.order, target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let s = (target / self.order) as usize;
        let mut poly = vec![BigInt::zero(); target as usize];
        for (i, c) in self.nums.iter().enumerate() {
            poly[i * s] = c.clone();
        }
        Ok(Self::from_poly(target, poly, self.den.clone()))
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.order.lcm(&other.order);
        (self.rebase(l).unwrap(), other.rebase(l).unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let den = &a.den * &b.den;
        let nums = a.nums.iter().zip(&b.nums).map(|(x, y)| x * &b.den + y * &a.den).collect();
        Cyclotomic { order: a.order, nums, den }.normalized()
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { order: self.order, nums: self.nums.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = self.common(other);
        let mut poly = vec![BigInt::zero(); a.nums.len() + b.nums.len()];
        for (i, x) in a.nums.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.nums.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Self::from_poly(a.order, poly, &a.den * &b.den)
    }

    /// Multiplication by the root of unity `exp(2 pi i p)`.
    pub fn mul_phase(&self, p: Phase) -> Self {
        if p.is_zero() || self.is_zero() {
            return self.clone();
        }
        let l = self.order.lcm(&p.den());
        let a = self.rebase(l).unwrap();
        let shift = (p.num() * (l / p.den())) as usize;
        let mut poly = vec![BigInt::zero(); a.nums.len() + shift];
        for (i, c) in a.nums.iter().enumerate() {
            poly[i + shift] = c.clone();
        }
        Self::from_poly(l, poly, a.den)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            nums: self.nums.iter().map(|c| c * q.numer()).collect(),
            den: &self.den * q.denom(),
        }
        .normalized()
    }

    /// Complex conjugation, `zeta_N -> zeta_N^(N-1)`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut poly = vec![BigInt::zero(); n];
        for (i, c) in self.nums.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Self::from_poly(self.order, poly, self.den.clone())
    }
}

// Residue of `poly` modulo Phi_order, padded to length phi(order).
fn reduce(order: u64, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi_poly = cyclotomic_poly(order);
    let deg = phi_poly.len() - 1;
    for i in (deg..poly.len()).rev() {
        if poly[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut poly[i]);
        for (j, pj) in phi_poly[..deg].iter().enumerate() {
            if *pj != 0 {
                poly[i - deg + j] -= &c * *pj;
            }
        }
    }
    poly.resize(deg, BigInt::zero());
    poly
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.nums == other.nums;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.nums == b.nums
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[", self.order)?;
        for (i, c) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order,
            coeffs: self.coeffs().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cyclotomic::from_coeffs(repr.order, &coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u64, k: u64) -> Cyclotomic {
        Cyclotomic::from_phase(Phase::new(k as i64, n as i64))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic_poly(105).contains(&-2));
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, totient(n));
        }
    }

    #[test]
    fn phase_embedding_examples() {
        let one = Cyclotomic::from_phase(Phase::ZERO);
        assert_eq!(one.order(), 1);
        assert_eq!(one.coeffs(), vec![q(1, 1)]);

        let m1 = Cyclotomic::from_phase(Phase::HALF);
        assert_eq!(m1.order(), 2);
        assert_eq!(m1.coeffs(), vec![q(-1, 1)]);

        // zeta_3^2 = -1 - zeta_3 modulo x^2 + x + 1
        let w = z(3, 2);
        assert_eq!(w.order(), 3);
        assert_eq!(w.coeffs(), vec![q(-1, 1), q(-1, 1)]);
    }

    #[test]
    fn field_examples() {
        assert_eq!(z(3, 1).mul(&z(3, 2)), Cyclotomic::one());
        let s = Cyclotomic::one().add(&z(3, 1)).add(&z(3, 2));
        assert!(s.is_zero());
        assert_eq!(s, Cyclotomic::zero());
        assert_eq!(z(5, 1).conj(), z(5, 4));
    }

    #[test]
    fn rebase_examples() {
        assert_eq!(z(2, 1).rebase(4).unwrap(), z(4, 2));
        assert_eq!(z(2, 1).rebase(4).unwrap().order(), 4);
        let one12 = Cyclotomic::one().rebase(12).unwrap();
        assert_eq!(one12.order(), 12);
        assert_eq!(one12, Cyclotomic::one());
        assert_eq!(z(3, 1).rebase(6).unwrap(), z(6, 2));
        assert!(matches!(z(4, 1).rebase(6), Err(Error::Rebase { order: 4, target: 6 })));
    }

    #[test]
    fn mixed_order_equality() {
        // i * i = -1 and zeta_8^2 = i
        assert_eq!(z(4, 1).mul(&z(4, 1)), Cyclotomic::from_integer(-1));
        assert_eq!(z(8, 2), z(4, 1));
        assert_ne!(z(8, 1), z(4, 1));
        assert_eq!(z(6, 3), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mul_phase_matches_mul() {
        let x = z(5, 2).add(&Cyclotomic::from_rational(q(3, 7)));
        let p = Phase::new(1, 4);
        assert_eq!(x.mul_phase(p), x.mul(&Cyclotomic::from_phase(p)));
    }

    #[test]
    fn serde_shape() {
        let w = z(3, 2).scale(&q(1, 2));
        let j = serde_json::to_value(&w).unwrap();
        assert_eq!(j, serde_json::json!({"order": 3, "coeffs": ["-1/2", "-1/2"]}));
        let back: Cyclotomic = serde_json::from_value(j).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn homomorphism_exhaustive_up_to_24() {
        let mut phases = Vec::new();
        for d in 1..=24i64 {
            for n in 0..d {
                let p = Phase::new(n, d);
                if p.den() == d as u64 {
                    phases.push(p);
                }
            }
        }
        let images: Vec<_> = phases.iter().map(|p| Cyclotomic::from_phase(*p)).collect();
        // Pairs are checked against a spread subset to keep runtime small but
        // every phase appears on both sides.
        for (i, a) in phases.iter().enumerate() {
            for (j, b) in phases.iter().enumerate().filter(|(j, _)| (i + j) % 7 == 0) {
                let lhs = Cyclotomic::from_phase(*a + *b);
                let rhs = images[i].mul(&images[j]);
                assert_eq!(lhs, rhs, "{a:?} + {b:?}");
            }
        }
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 12]), prop::collection::vec((-5i64..6, 1i64..4), 12))
            .prop_map(|(n, cs)| {
                let phi = totient(n) as usize;
                let coeffs: Vec<_> = cs[..phi].iter().map(|(a, b)| q(*a, *b)).collect();
                Cyclotomic::from_coeffs(n, &coeffs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn add_sub_roundtrip(x in arb_cyc(), y in arb_cyc()) {
            prop_assert_eq!(x.add(&y).sub(&y), x);
        }

        #[test]
        fn conj_norm_is_real(x in arb_cyc()) {
            let n = x.conj().mul(&x);
            prop_assert_eq!(n.conj(), n);
        }

        #[test]
        fn rebase_roundtrip(x in arb_cyc(), k in 1u64..4) {
            let up = x.rebase(x.order() * k).unwrap();
            prop_assert_eq!(&up, &x);
            prop_assert_eq!(up.order(), x.order() * k);
        }

        #[test]
        fn mul_commutes_and_distributes(x in arb_cyc(), y in arb_cyc(), w in arb_cyc()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y.add(&w)), x.mul(&y).add(&x.mul(&w)));
        }
    }
}
