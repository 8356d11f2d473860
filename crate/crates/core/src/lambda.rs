//! Finitely supported maps `Z^2 -> H` (the group `⊕_{Z^2} H`), the zero-sum
//! subgroup `Λ(H)`, and the cocycles they inherit from `H`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::abelian::{AbElem, AbGroup, AbHom};
use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::lattice::{AffineSL2, LatticePoint};
use crate::scalars::Phase;

/// An element of `⊕_{Z^2} H`. Zero values are never stored, so equality is
/// structural; the support is kept in lexicographic `(q, r)` order.
#[derive(Clone)]
pub struct OplusElem {
    group: Arc<AbGroup>,
    support: BTreeMap<LatticePoint, AbElem>,
}

impl PartialEq for OplusElem {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Eq for OplusElem {}

impl PartialOrd for OplusElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OplusElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support.cmp(&other.support).then_with(|| {
            if Arc::ptr_eq(&self.group, &other.group) {
                Ordering::Equal
            } else {
                self.group.cmp(&other.group)
            }
        })
    }
}

impl std::hash::Hash for OplusElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.support.hash(state);
    }
}

impl fmt::Debug for OplusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.support.iter()).finish()
    }
}

/// Enumeration of `Z^2` used by [`mu_hat_in`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointOrder {
    /// `(0,0), (1,0), (1,1), (0,1), (-1,1), ...`, the default.
    Spiral,
    /// By `r`, then by `q`.
    RowMajor,
}

impl OplusElem {
    pub fn zero(group: &Arc<AbGroup>) -> Self {
        OplusElem { group: group.clone(), support: BTreeMap::new() }
    }

    /// Sums the values given at each point; repeated points accumulate.
    pub fn from_pairs(group: &Arc<AbGroup>, pairs: impl IntoIterator<Item = (LatticePoint, AbElem)>) -> Result<Self> {
        let mut out = Self::zero(group);
        for (k, v) in pairs {
            let v = group.elem(v.0)?;
            out.add_at(k, &v);
        }
        Ok(out)
    }

    fn add_at(&mut self, k: LatticePoint, v: &AbElem) {
        let g = self.group.clone();
        let cur = self.support.remove(&k).unwrap_or_else(|| g.zero());
        let new = g.add(&cur, v);
        if !new.is_zero() {
            self.support.insert(k, new);
        }
    }

    pub fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    pub fn support(&self) -> &BTreeMap<LatticePoint, AbElem> {
        &self.support
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Value at `k`.
    pub fn get(&self, k: &LatticePoint) -> AbElem {
        self.support.get(k).cloned().unwrap_or_else(|| self.group.zero())
    }

    pub fn add(&self, other: &OplusElem) -> Result<OplusElem> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.support {
            out.add_at(k.clone(), v);
        }
        Ok(out)
    }

    pub fn neg(&self) -> OplusElem {
        OplusElem {
            group: self.group.clone(),
            support: self.support.iter().map(|(k, v)| (k.clone(), self.group.neg(v))).collect(),
        }
    }

    pub fn sub(&self, other: &OplusElem) -> Result<OplusElem> {
        self.add(&other.neg())
    }

    /// `sum_k self(k)`.
    pub fn total(&self) -> AbElem {
        self.group.sum(self.support.values())
    }

    /// Whether the element lies in `Λ(H)`.
    pub fn is_lambda(&self) -> bool {
        self.total().is_zero()
    }

    /// `(a · λ)(k) = λ(a⁻¹ k)`: values move along with their points.
    pub fn act(&self, a: &AffineSL2) -> OplusElem {
        OplusElem {
            group: self.group.clone(),
            support: self.support.iter().map(|(k, v)| (a.act(k), v.clone())).collect(),
        }
    }

    /// `(k · λ)(m) = λ(m - k)`.
    pub fn shift(&self, k: &LatticePoint) -> OplusElem {
        OplusElem { group: self.group.clone(), support: self.support.iter().map(|(m, v)| (m + k, v.clone())).collect() }
    }

    /// Whether every support point lies on the axis `r = 0`.
    pub fn supported_on_d(&self) -> bool {
        self.support.keys().all(|k| k.r == 0.into())
    }

    /// `φ ∘ λ`, an element over the target of `phi`.
    pub fn map_values(&self, phi: &AbHom, target: &Arc<AbGroup>) -> Result<OplusElem> {
        if phi.source() != self.group.as_ref() || phi.target() != target.as_ref() {
            return Err(Error::GroupMismatch);
        }
        Self::from_pairs(target, self.support.iter().map(|(k, v)| (k.clone(), phi.apply(v))))
    }

    /// Support points in the requested enumeration order.
    pub fn ordered_support(&self, order: PointOrder) -> Vec<(&LatticePoint, &AbElem)> {
        let mut pts: Vec<_> = self.support.iter().collect();
        match order {
            PointOrder::Spiral => pts.sort_by_cached_key(|(k, _)| k.spiral_key()),
            PointOrder::RowMajor => pts.sort_by(|(a, _), (b, _)| (&a.r, &a.q).cmp(&(&b.r, &b.q))),
        }
        pts
    }

    pub fn to_json(&self) -> Value {
        let support: Vec<Value> = self.support.iter().map(|(k, v)| json!([k, v])).collect();
        json!({ "support": support })
    }

    pub fn from_json(value: &Value, group: &Arc<AbGroup>) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            support: Vec<(LatticePoint, Vec<i64>)>,
        }
        let r: Repr = serde_json::from_value(value.clone()).map_err(|e| Error::parse("support", e.to_string()))?;
        Self::from_pairs(group, r.support.into_iter().map(|(k, v)| (k, AbElem(v))))
    }
}

/// `λ_h`: `-h` at the origin and `h` at `e1`.
pub fn lambda_h(group: &Arc<AbGroup>, h: &AbElem) -> OplusElem {
    OplusElem::from_pairs(group, [(LatticePoint::zero(), group.neg(h)), (crate::lattice::e1(), h.clone())])
        .expect("element of the group")
}

/// `μ̃(λ1, λ2) = sum_k μ(λ1(k), λ2(k))`, the inherited cocycle on `⊕ H`.
pub fn mu_tilde(mu: &Cocycle, a: &OplusElem, b: &OplusElem) -> Phase {
    let (small, large, flipped) = if a.len() <= b.len() { (a, b, false) } else { (b, a, true) };
    small
        .support
        .iter()
        .filter_map(|(k, x)| large.support.get(k).map(|y| if flipped { mu.eval(y, x) } else { mu.eval(x, y) }))
        .sum()
}

/// `μ̂(λ) = sum_j μ(λ(k_0) + ... + λ(k_{j-1}), λ(k_j))` along the spiral
/// enumeration of `Z^2`. The value depends on the enumeration unless `μ` is
/// a coboundary; see [`mu_hat_in`] for other orders.
pub fn mu_hat(mu: &Cocycle, lambda: &OplusElem) -> Phase {
    mu_hat_in(mu, lambda, PointOrder::Spiral)
}

pub fn mu_hat_in(mu: &Cocycle, lambda: &OplusElem, order: PointOrder) -> Phase {
    let g = lambda.group();
    let mut partial = g.zero();
    let mut acc = Phase::ZERO;
    for (_, v) in lambda.ordered_support(order) {
        acc += mu.eval(&partial, v);
        partial = g.add(&partial, v);
    }
    acc
}
