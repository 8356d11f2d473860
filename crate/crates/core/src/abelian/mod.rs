//! Finitely generated abelian groups `Z^d ⊕ Z/n_1 ⊕ ... ⊕ Z/n_s`.
//!
//! Generators are ordered free first, then torsion, and elements are integer
//! coordinate vectors in that basis. Presentations are kept as given; two
//! groups with different torsion lists may still be isomorphic.

mod character;
mod enumerate;
mod hom;
mod structure;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use character::Character;
pub use enumerate::{enumerate_automorphisms, enumerate_isomorphisms, Isomorphisms};
pub use hom::AbHom;
pub use structure::{group_structure, GroupStructure};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr")]
pub struct AbGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

#[derive(Deserialize)]
struct GroupRepr {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl TryFrom<GroupRepr> for AbGroup {
    type Error = Error;
    fn try_from(r: GroupRepr) -> Result<Self> {
        AbGroup::new(r.free_rank, r.torsion)
    }
}

/// A group element as coordinates in the generator basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbElem(pub Vec<i64>);

impl AbElem {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Debug for AbElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i64>> for AbElem {
    fn from(v: Vec<i64>) -> Self {
        AbElem(v)
    }
}

impl AbGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(n) = torsion.iter().find(|n| **n < 2) {
            return Err(Error::Group(format!("torsion order {n} is below 2")));
        }
        Ok(AbGroup { free_rank, torsion })
    }

    /// `(Z/n)^k`.
    pub fn cyclic_power(n: u64, k: usize) -> Self {
        AbGroup::new(0, vec![n; k]).expect("cyclic order below 2")
    }

    pub fn free(d: usize) -> Self {
        AbGroup { free_rank: d, torsion: Vec::new() }
    }

    /// Direct sum, generators of `self` first.
    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        // Free generators must lead, so the free parts merge ahead of torsion.
        let mut torsion = self.torsion.clone();
        torsion.extend(&other.torsion);
        AbGroup { free_rank: self.free_rank + other.free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// Number of elements, or `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Order of the `i`-th generator, `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank).map(|t| self.torsion[t])
    }

    /// Least common multiple of the torsion orders; `None` for infinite groups.
    pub fn exponent(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().fold(1u64, |a, b| a.lcm(b)))
    }

    pub fn zero(&self) -> AbElem {
        AbElem(vec![0; self.rank()])
    }

    pub fn generator(&self, i: usize) -> AbElem {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        AbElem(v)
    }

    pub fn generators(&self) -> Vec<AbElem> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    fn reduce_in_place(&self, v: &mut [i64]) {
        for (c, n) in v[self.free_rank..].iter_mut().zip(&self.torsion) {
            *c = c.rem_euclid(*n as i64);
        }
    }

    /// Element with the given coordinates, torsion parts reduced.
    pub fn elem(&self, coords: Vec<i64>) -> Result<AbElem> {
        if coords.len() != self.rank() {
            return Err(Error::GroupMismatch);
        }
        let mut v = coords;
        self.reduce_in_place(&mut v);
        Ok(AbElem(v))
    }

    pub fn contains(&self, g: &AbElem) -> bool {
        g.0.len() == self.rank()
            && g.0[self.free_rank..].iter().zip(&self.torsion).all(|(c, n)| (0..*n as i64).contains(c))
    }

    /// Sum of two elements. Panics if either is not of this group's rank.
    pub fn add(&self, a: &AbElem, b: &AbElem) -> AbElem {
        self.checked_add(a, b).expect("group mismatch")
    }

    pub fn checked_add(&self, a: &AbElem, b: &AbElem) -> Result<AbElem> {
        if a.0.len() != self.rank() || b.0.len() != self.rank() {
            return Err(Error::GroupMismatch);
        }
        let mut v: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.reduce_in_place(&mut v);
        Ok(AbElem(v))
    }

    pub fn neg(&self, a: &AbElem) -> AbElem {
        self.scale(a, -1)
    }

    pub fn sub(&self, a: &AbElem, b: &AbElem) -> AbElem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &AbElem, n: i64) -> AbElem {
        assert_eq!(a.0.len(), self.rank(), "group mismatch");
        let mut v: Vec<i64> = a.0.iter().map(|x| x * n).collect();
        self.reduce_in_place(&mut v);
        AbElem(v)
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a AbElem>) -> AbElem {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Order of an element, `None` if it has infinite order.
    pub fn elem_order(&self, g: &AbElem) -> Option<u64> {
        if g.0[..self.free_rank].iter().any(|c| *c != 0) {
            return None;
        }
        Some(
            g.0[self.free_rank..]
                .iter()
                .zip(&self.torsion)
                .map(|(c, n)| n / (*c as u64).gcd(n))
                .fold(1, |a, b| a.lcm(&b)),
        )
    }

    /// All elements of a finite group in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<AbElem>> {
        let Some(order) = self.order() else {
            return Err(Error::Unsupported("element listing of an infinite group".into()));
        };
        Ok((0..order).map(|i| self.elem_at(i)).collect())
    }

    /// Element with position `i` in [`AbGroup::elements`].
    pub fn elem_at(&self, mut i: u64) -> AbElem {
        let mut v = vec![0i64; self.rank()];
        for (c, n) in v.iter_mut().zip(&self.torsion).rev() {
            *c = (i % n) as i64;
            i /= n;
        }
        AbElem(v)
    }

    /// Position of a reduced element of a finite group in [`AbGroup::elements`].
    pub fn index_of(&self, g: &AbElem) -> usize {
        g.0.iter().zip(&self.torsion).fold(0u64, |acc, (c, n)| acc * n + *c as u64) as usize
    }

    /// Elements `x` with `n x = 0`; for `n = None`, all elements.
    pub(crate) fn elements_killed_by(&self, n: Option<u64>) -> Result<Vec<AbElem>> {
        let all = self.elements()?;
        Ok(match n {
            None => all,
            Some(n) => all.into_iter().filter(|x| self.scale(x, n as i64).is_zero()).collect(),
        })
    }

    /// Elementary divisors of the torsion subgroup as sorted prime powers.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for n in &self.torsion {
            let mut m = *n;
            let mut p = 2;
            while m > 1 {
                if m % p == 0 {
                    let mut q = 1;
                    while m % p == 0 {
                        m /= p;
                        q *= p;
                    }
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the two presentations describe isomorphic groups.
    pub fn is_isomorphic_to(&self, other: &AbGroup) -> bool {
        self.free_rank == other.free_rank && self.elementary_divisors() == other.elementary_divisors()
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            d => parts.push(format!("Z^{d}")),
        }
        parts.extend(self.torsion.iter().map(|n| format!("Z/{n}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
