//! Finite formal sums in the twisted group algebra of `⊕_{Z^2} H`, where
//! `u(λ1) u(λ2) = μ̃(λ1, λ2) u(λ1 + λ2)`, and in the tensor square of the
//! twisted algebra of a finite `H`.

mod malleability;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::abelian::{AbGroup, Character};
use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::lambda::{mu_tilde, OplusElem};
use crate::scalars::{Cyclotomic, Phase};

pub use malleability::{malleability_flow, malleability_unitary, verify_flow, MalleabilityFlow};
pub use tensor::TensorElem;

/// The group and cocycle an algebra element lives over.
#[derive(Debug, PartialEq, Eq)]
pub struct AlgebraBase {
    group: Arc<AbGroup>,
    cocycle: Cocycle,
}

impl AlgebraBase {
    pub fn new(cocycle: Cocycle) -> Arc<Self> {
        Arc::new(AlgebraBase { group: Arc::new(cocycle.group().clone()), cocycle })
    }

    pub fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }
}

pub(crate) fn same_base(a: &Arc<AlgebraBase>, b: &Arc<AlgebraBase>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::BaseMismatch)
    }
}

/// `sum_λ c(λ) u(λ)` with nonzero cyclotomic coefficients.
#[derive(Clone)]
pub struct AlgElem {
    base: Arc<AlgebraBase>,
    terms: BTreeMap<OplusElem, Cyclotomic>,
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base).is_ok() && self.terms == other.terms
    }
}

impl Eq for AlgElem {}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (v, k))).finish()
    }
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Cyclotomic>, key: K, c: Cyclotomic) {
    match terms.get_mut(&key) {
        Some(old) => {
            let sum = old.add(&c);
            if sum.is_zero() {
                terms.remove(&key);
            } else {
                *old = sum;
            }
        }
        None => {
            if !c.is_zero() {
                terms.insert(key, c);
            }
        }
    }
}

impl AlgElem {
    pub fn zero(base: &Arc<AlgebraBase>) -> Self {
        AlgElem { base: base.clone(), terms: BTreeMap::new() }
    }

    pub fn one(base: &Arc<AlgebraBase>) -> Self {
        Self::unitary(base, OplusElem::zero(base.group()))
    }

    /// The basis unitary `u(λ)`.
    pub fn unitary(base: &Arc<AlgebraBase>, lambda: OplusElem) -> Self {
        Self::term(base, lambda, Cyclotomic::one())
    }

    pub fn term(base: &Arc<AlgebraBase>, lambda: OplusElem, c: Cyclotomic) -> Self {
        Self::from_terms(base, [(lambda, c)])
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms(base: &Arc<AlgebraBase>, terms: impl IntoIterator<Item = (OplusElem, Cyclotomic)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            assert_eq!(k.group().as_ref(), base.group().as_ref(), "key over a different group");
            accumulate(&mut out, k, c);
        }
        AlgElem { base: base.clone(), terms: out }
    }

    pub fn base(&self) -> &Arc<AlgebraBase> {
        &self.base
    }

    pub fn terms(&self) -> &BTreeMap<OplusElem, Cyclotomic> {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &OplusElem) -> Cyclotomic {
        self.terms.get(lambda).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem> {
        same_base(&self.base, &other.base)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k.clone(), c.clone());
        }
        Ok(AlgElem { base: self.base.clone(), terms })
    }

    pub fn neg(&self) -> AlgElem {
        self.map_coefficients(|_, c| c.neg())
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Cyclotomic) -> AlgElem {
        if s.is_zero() {
            return Self::zero(&self.base);
        }
        self.map_coefficients(|_, c| c.mul(s))
    }

    fn map_coefficients(&self, f: impl Fn(&OplusElem, &Cyclotomic) -> Cyclotomic) -> AlgElem {
        AlgElem { base: self.base.clone(), terms: self.terms.iter().map(|(k, c)| (k.clone(), f(k, c))).collect() }
    }

    /// Applies `λ -> (new key, phase)` termwise, the shape of every
    /// automorphism used here.
    pub(crate) fn map_terms(&self, base: &Arc<AlgebraBase>, f: impl Fn(&OplusElem) -> (OplusElem, Phase)) -> AlgElem {
        AlgElem::from_terms(
            base,
            self.terms.iter().map(|(k, c)| {
                let (key, p) = f(k);
                (key, c.mul_phase(p))
            }),
        )
    }

    pub fn mul(&self, other: &AlgElem) -> Result<AlgElem> {
        same_base(&self.base, &other.base)?;
        let mu = self.base.cocycle();
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let phase = mu_tilde(mu, k1, k2);
                let key = k1.add(k2)?;
                accumulate(&mut terms, key, c1.mul(c2).mul_phase(phase));
            }
        }
        Ok(AlgElem { base: self.base.clone(), terms })
    }

    /// `(c u(λ))* = conj(c) conj(μ̃(λ, -λ)) u(-λ)`.
    pub fn star(&self) -> AlgElem {
        let mu = self.base.cocycle();
        AlgElem::from_terms(
            &self.base,
            self.terms.iter().map(|(k, c)| {
                let neg = k.neg();
                let p = -mu_tilde(mu, k, &neg);
                (neg, c.conj().mul_phase(p))
            }),
        )
    }

    /// The coefficient of `u(0)`.
    pub fn trace(&self) -> Cyclotomic {
        self.coefficient(&OplusElem::zero(self.base.group()))
    }

    /// Keeps only the terms indexed by `Λ(H)`.
    pub fn restrict_to_lambda(&self) -> AlgElem {
        AlgElem {
            base: self.base.clone(),
            terms: self.terms.iter().filter(|(k, _)| k.is_lambda()).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn is_lambda_supported(&self) -> bool {
        self.terms.keys().all(OplusElem::is_lambda)
    }

    /// Scales `u(λ)` by `c(sum_k λ(k))`.
    pub fn character_action(&self, c: &Character) -> AlgElem {
        self.map_coefficients(|k, x| x.mul_phase(c.eval(&k.total())))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(k, c)| json!([k.to_json(), c])).collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value, base: &Arc<AlgebraBase>) -> Result<Self> {
        let items =
            value.get("terms").and_then(Value::as_array).ok_or_else(|| Error::parse("terms", "expected an array"))?;
        let mut terms = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::parse(format!("terms[{i}]"), "expected [key, coefficient]"))?;
            let key = OplusElem::from_json(&pair[0], base.group())?;
            let c: Cyclotomic = serde_json::from_value(pair[1].clone())
                .map_err(|e| Error::parse(format!("terms[{i}][1]"), e.to_string()))?;
            terms.push((key, c));
        }
        Ok(Self::from_terms(base, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbElem;
    use crate::lambda::lambda_h;
    use crate::lattice::LatticePoint;
    use proptest::prelude::*;

    fn base() -> Arc<AlgebraBase> {
        let g = AbGroup::cyclic_power(3, 2);
        AlgebraBase::new(Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, 3)], vec![Phase::ZERO; 2]]).unwrap())
    }

    fn lam(b: &Arc<AlgebraBase>, v: &[i64]) -> OplusElem {
        lambda_h(b.group(), &AbElem(v.to_vec()))
    }

    #[test]
    fn multiplication_examples() {
        let b = base();
        let l = lam(&b, &[1, 1]);
        let u = AlgElem::unitary(&b, l.clone());
        assert_eq!(u.mul(&AlgElem::one(&b)).unwrap(), u);
        let prod = u.mul(&AlgElem::unitary(&b, l.neg())).unwrap();
        let phase = mu_tilde(b.cocycle(), &l, &l.neg());
        assert_eq!(prod, AlgElem::term(&b, OplusElem::zero(b.group()), Cyclotomic::from_phase(phase)));
        let v = AlgElem::unitary(&b, lam(&b, &[0, 1]));
        let w = AlgElem::unitary(&b, lam(&b, &[2, 0]).shift(&LatticePoint::new(0, 1)));
        let lhs = u.add(&v).unwrap().mul(&w).unwrap();
        let rhs = u.mul(&w).unwrap().add(&v.mul(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_and_trace_examples() {
        let b = base();
        let one = AlgElem::one(&b);
        assert_eq!(one.star(), one);
        assert_eq!(one.trace(), Cyclotomic::one());
        let l = lam(&b, &[1, 2]);
        let c = Cyclotomic::from_phase(Phase::new(1, 5)).add(&Cyclotomic::from_integer(2));
        let x = AlgElem::term(&b, l.clone(), c.clone());
        assert!(x.trace().is_zero());
        let expected = c.conj().mul_phase(-mu_tilde(b.cocycle(), &l, &l.neg()));
        assert_eq!(x.star(), AlgElem::term(&b, l.neg(), expected));
        assert_eq!(x.star().star(), x);
    }

    #[test]
    fn restriction_and_character_action() {
        let b = base();
        let l = lam(&b, &[1, 0]);
        let u = AlgElem::unitary(&b, l.clone());
        assert_eq!(u.restrict_to_lambda(), u);
        let single = OplusElem::from_pairs(b.group(), [(LatticePoint::zero(), AbElem(vec![1, 0]))]).unwrap();
        let s = AlgElem::unitary(&b, single);
        assert!(s.restrict_to_lambda().is_zero());
        assert_eq!(u.add(&s).unwrap().restrict_to_lambda(), u);

        let chi = Character::new(b.group(), vec![Phase::new(1, 3), Phase::new(2, 3)]).unwrap();
        assert_eq!(u.character_action(&chi), u);
        assert_eq!(s.character_action(&chi), s.scale(&Cyclotomic::from_phase(Phase::new(1, 3))));
        assert_eq!(s.character_action(&Character::trivial(b.group())), s);
    }

    #[test]
    fn json_roundtrip() {
        let b = base();
        let x = AlgElem::term(&b, lam(&b, &[1, 2]), Cyclotomic::from_phase(Phase::new(1, 3)))
            .add(&AlgElem::one(&b))
            .unwrap();
        let back = AlgElem::from_json(&x.to_json(), &b).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn base_mismatch() {
        let b1 = base();
        let b2 = AlgebraBase::new(Cocycle::trivial(b1.group()));
        assert!(matches!(AlgElem::one(&b1).mul(&AlgElem::one(&b2)), Err(Error::BaseMismatch)));
    }

    fn arb_alg() -> impl Strategy<Value = AlgElem> {
        let b = base();
        prop::collection::vec(
            (prop::collection::vec(((-1i64..=1, -1i64..=1), (0i64..3, 0i64..3)), 1..3), 0u64..6, -2i64..3),
            1..4,
        )
        .prop_map(move |terms| {
            AlgElem::from_terms(
                &b,
                terms.into_iter().map(|(pairs, root, int)| {
                    let key = OplusElem::from_pairs(
                        b.group(),
                        pairs.into_iter().map(|((q, r), (x, y))| (LatticePoint::new(q, r), AbElem(vec![x, y]))),
                    )
                    .unwrap();
                    let c = Cyclotomic::from_phase(Phase::new(root as i64, 6)).add(&Cyclotomic::from_integer(int));
                    (key, c)
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn associative(a in arb_alg(), b in arb_alg(), c in arb_alg()) {
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn star_is_antimultiplicative(a in arb_alg(), b in arb_alg()) {
            prop_assert_eq!(a.mul(&b).unwrap().star(), b.star().mul(&a.star()).unwrap());
            prop_assert_eq!(a.star().star(), a);
        }

        #[test]
        fn trace_is_tracial_and_faithful(a in arb_alg(), b in arb_alg()) {
            prop_assert_eq!(a.mul(&b).unwrap().trace(), b.mul(&a).unwrap().trace());
            let norm = a.star().mul(&a).unwrap().trace();
            prop_assert_eq!(norm.is_zero(), a.is_zero());
        }
    }
}
