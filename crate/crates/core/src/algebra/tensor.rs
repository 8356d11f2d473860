use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{accumulate, same_base, AlgebraBase};
use crate::abelian::{AbElem, Character};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Phase};

/// `sum c(g, h) u_g ⊗ u_h` in the tensor square of the twisted algebra of `H`.
#[derive(Clone)]
pub struct TensorElem {
    base: Arc<AlgebraBase>,
    terms: BTreeMap<(AbElem, AbElem), Cyclotomic>,
}

impl PartialEq for TensorElem {
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base).is_ok() && self.terms == other.terms
    }
}

impl Eq for TensorElem {}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|((g, h), c)| (c, (g, h)))).finish()
    }
}

impl TensorElem {
    pub fn zero(base: &Arc<AlgebraBase>) -> Self {
        TensorElem { base: base.clone(), terms: BTreeMap::new() }
    }

    pub fn one(base: &Arc<AlgebraBase>) -> Self {
        let z = base.group().zero();
        Self::basis(base, z.clone(), z)
    }

    /// `u_g ⊗ u_h`.
    pub fn basis(base: &Arc<AlgebraBase>, g: AbElem, h: AbElem) -> Self {
        Self::from_terms(base, [((g, h), Cyclotomic::one())])
    }

    pub fn from_terms(
        base: &Arc<AlgebraBase>,
        terms: impl IntoIterator<Item = ((AbElem, AbElem), Cyclotomic)>,
    ) -> Self {
        let g = base.group();
        let mut out = BTreeMap::new();
        for ((a, b), c) in terms {
            let key = (g.elem(a.0).expect("rank"), g.elem(b.0).expect("rank"));
            accumulate(&mut out, key, c);
        }
        TensorElem { base: base.clone(), terms: out }
    }

    pub fn base(&self) -> &Arc<AlgebraBase> {
        &self.base
    }

    pub fn terms(&self) -> &BTreeMap<(AbElem, AbElem), Cyclotomic> {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorElem) -> Result<TensorElem> {
        same_base(&self.base, &other.base)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k.clone(), c.clone());
        }
        Ok(TensorElem { base: self.base.clone(), terms })
    }

    pub fn sub(&self, other: &TensorElem) -> Result<TensorElem> {
        self.add(&other.scale(&Cyclotomic::from_integer(-1)))
    }

    pub fn scale(&self, s: &Cyclotomic) -> TensorElem {
        if s.is_zero() {
            return Self::zero(&self.base);
        }
        TensorElem { base: self.base.clone(), terms: self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))).collect() }
    }

    /// `(u_g ⊗ u_g')(u_h ⊗ u_h') = μ(g, h) μ(g', h') u_{g+h} ⊗ u_{g'+h'}`.
    pub fn mul(&self, other: &TensorElem) -> Result<TensorElem> {
        same_base(&self.base, &other.base)?;
        let (g, mu) = (self.base.group(), self.base.cocycle());
        let mut terms = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let phase = mu.eval(a1, a2) + mu.eval(b1, b2);
                let key = (g.add(a1, a2), g.add(b1, b2));
                accumulate(&mut terms, key, c1.mul(c2).mul_phase(phase));
            }
        }
        Ok(TensorElem { base: self.base.clone(), terms })
    }

    /// Componentwise `u_g* = conj(μ(g, -g)) u_{-g}`, coefficients conjugated.
    pub fn star(&self) -> TensorElem {
        let (g, mu) = (self.base.group(), self.base.cocycle());
        TensorElem::from_terms(
            &self.base,
            self.terms.iter().map(|((a, b), c)| {
                let (na, nb) = (g.neg(a), g.neg(b));
                let p = -(mu.eval(a, &na) + mu.eval(b, &nb));
                ((na, nb), c.conj().mul_phase(p))
            }),
        )
    }

    /// The coefficient of `1 ⊗ 1`.
    pub fn trace(&self) -> Cyclotomic {
        let z = self.base.group().zero();
        self.terms.get(&(z.clone(), z)).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    /// The diagonal action: `u_g ⊗ u_h` is scaled by `c(g) + c(h)`.
    pub fn character_action(&self, c: &Character) -> TensorElem {
        TensorElem {
            base: self.base.clone(),
            terms: self
                .terms
                .iter()
                .map(|((a, b), x)| ((a.clone(), b.clone()), x.mul_phase(c.eval(a) + c.eval(b))))
                .collect(),
        }
    }

    /// `x ⊗ 1` for `x = sum c(g) u_g` given as `(g, c)` pairs.
    pub fn left(base: &Arc<AlgebraBase>, x: impl IntoIterator<Item = (AbElem, Cyclotomic)>) -> Self {
        let z = base.group().zero();
        Self::from_terms(base, x.into_iter().map(|(g, c)| ((g, z.clone()), c)))
    }

    /// `1 ⊗ x`.
    pub fn right(base: &Arc<AlgebraBase>, x: impl IntoIterator<Item = (AbElem, Cyclotomic)>) -> Self {
        let z = base.group().zero();
        Self::from_terms(base, x.into_iter().map(|(g, c)| ((z.clone(), g), c)))
    }

    pub fn phase_term(base: &Arc<AlgebraBase>, g: AbElem, h: AbElem, p: Phase) -> Self {
        Self::from_terms(base, [((g, h), Cyclotomic::from_phase(p))])
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|((a, b), c)| json!([[a, b], c])).collect();
        json!({ "terms": terms })
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        if self.base.group().is_finite() {
            Ok(())
        } else {
            Err(Error::Unsupported("tensor square of an infinite group".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbGroup;
    use crate::cocycle::Cocycle;

    fn base() -> Arc<AlgebraBase> {
        let g = AbGroup::cyclic_power(3, 2);
        AlgebraBase::new(Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, 3)], vec![Phase::ZERO; 2]]).unwrap())
    }

    fn e(v: &[i64]) -> AbElem {
        AbElem(v.to_vec())
    }

    #[test]
    fn product_examples() {
        let b = base();
        let z = b.group().zero();
        let g = e(&[1, 0]);
        let h = e(&[2, 1]);
        let x = TensorElem::basis(&b, g.clone(), z.clone());
        let y = TensorElem::basis(&b, z.clone(), h.clone());
        assert_eq!(x.mul(&y).unwrap(), TensorElem::basis(&b, g.clone(), h.clone()));
        let one = TensorElem::one(&b);
        let gh = TensorElem::basis(&b, g, h);
        assert_eq!(one.mul(&gh).unwrap(), gh);
        assert_eq!(gh.mul(&one).unwrap(), gh);
    }

    #[test]
    fn star_of_a_diagonal_term() {
        let b = base();
        let (grp, mu) = (b.group().clone(), b.cocycle().clone());
        let g = e(&[1, 1]);
        let ng = grp.neg(&g);
        // u_g ⊗ u_g*, with u_g* = conj(μ(g,-g)) u_{-g}
        let x = TensorElem::phase_term(&b, g.clone(), ng.clone(), -mu.eval(&g, &ng));
        // (u_g ⊗ u_g*)* = u_g* ⊗ u_g
        let expected = TensorElem::phase_term(&b, ng.clone(), g.clone(), -mu.eval(&g, &ng));
        assert_eq!(x.star(), expected);
    }
}
