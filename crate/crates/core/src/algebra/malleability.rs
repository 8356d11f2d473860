use std::sync::Arc;

use num_rational::{BigRational, Ratio};

use serde_json::json;

use super::{AlgebraBase, TensorElem};
use crate::dynamics::all_characters;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::sampling::Sampler;
use crate::scalars::{Cyclotomic, Phase};

/// `V = sum_h u_h ⊗ u_h*` over a finite group with a nondegenerate cocycle.
///
/// `V` is `|H|^{1/2}` times a self-adjoint unitary.
pub fn malleability_unitary(base: &Arc<AlgebraBase>) -> Result<TensorElem> {
    let g = base.group();
    if !g.is_finite() {
        return Err(Error::Unsupported("malleability unitary over an infinite group".into()));
    }
    let mu = base.cocycle();
    if let Some(w) = mu.degeneracy_witness() {
        return Err(Error::Degenerate { witness: w.0 });
    }
    Ok(TensorElem::from_terms(
        base,
        g.elements()?.into_iter().map(|h| {
            let nh = g.neg(&h);
            let p = -mu.eval(&h, &nh);
            ((h, nh), Cyclotomic::from_phase(p))
        }),
    ))
}

/// The one-parameter family `α_t = Ad(P_1 + e^{iπt} P_{-1})` with
/// `P_{±1} = (1 ± U) / 2` and `U = |H|^{-1/2} V`.
///
/// A nondegenerate cocycle forces `|H|` to be a perfect square, so `U` has
/// rational coefficients over the roots of unity and everything stays exact.
#[derive(Clone, Debug)]
pub struct MalleabilityFlow {
    v: TensorElem,
    u: TensorElem,
    root: u64,
}

impl MalleabilityFlow {
    pub fn new(base: &Arc<AlgebraBase>) -> Result<Self> {
        let v = malleability_unitary(base)?;
        let order = base.group().order().expect("finite");
        let root = order.isqrt();
        if root * root != order {
            return Err(Error::Unsupported(format!("group order {order} is not a square")));
        }
        let u = v.scale(&Cyclotomic::from_rational(BigRational::new(1.into(), root.into())));
        Ok(MalleabilityFlow { v, u, root })
    }

    /// `V`, the unnormalized unitary.
    pub fn v(&self) -> &TensorElem {
        &self.v
    }

    /// `U = V / sqrt|H|`.
    pub fn u(&self) -> &TensorElem {
        &self.u
    }

    pub fn sqrt_order(&self) -> u64 {
        self.root
    }

    /// `W_t = P_1 + e^{iπt} P_{-1} = a + b U` with `a = (1 + c)/2`,
    /// `b = (1 - c)/2`, `c = e^{iπt}`.
    pub fn w(&self, t: Ratio<i64>) -> TensorElem {
        let c = Cyclotomic::from_phase(Phase::from_ratio(&(t / 2)));
        let half = BigRational::new(1.into(), 2.into());
        let one = Cyclotomic::one();
        let a = one.add(&c).scale(&half);
        let b = one.sub(&c).scale(&half);
        let base = self.v.base();
        TensorElem::one(base).scale(&a).add(&self.u.scale(&b)).expect("same base")
    }

    /// `α_t(x) = W_t x W_t*`.
    pub fn apply(&self, t: Ratio<i64>, x: &TensorElem) -> Result<TensorElem> {
        let w = self.w(t);
        w.mul(x)?.mul(&w.star())
    }
}

/// `α_t(x)`, building the flow from `x`'s base.
pub fn malleability_flow(t: Ratio<i64>, x: &TensorElem) -> Result<TensorElem> {
    x.require_finite()?;
    MalleabilityFlow::new(x.base())?.apply(t, x)
}

/// Exact checks of the flow on a finite nondegenerate base: `V* = V`,
/// `V² = |H|`, `α_1(u_g ⊗ 1) = 1 ⊗ u_g` for every `g`, and on `samples`
/// random elements `α_½ ∘ α_½ = α_1`, trace preservation,
/// multiplicativity, and commutation with every diagonal character.
pub fn verify_flow(base: &Arc<AlgebraBase>, seed: u64, samples: usize) -> Result<CheckReport> {
    let flow = MalleabilityFlow::new(base)?;
    let g = base.group();
    let mut r = CheckReport::new();
    let v = flow.v();
    r.check(v.star() == *v, || json!({"check": "v_self_adjoint"}));
    let order = g.order().expect("finite") as i64;
    r.check(
        v.mul(v)? == TensorElem::one(base).scale(&Cyclotomic::from_integer(order)),
        || json!({"check": "v_squared"}),
    );
    let one = Ratio::from_integer(1);
    let half = Ratio::new(1, 2);
    let z = g.zero();
    for h in g.elements()? {
        let x = TensorElem::basis(base, h.clone(), z.clone());
        let swapped = TensorElem::basis(base, z.clone(), h.clone());
        r.check(flow.apply(one, &x)? == swapped, || json!({"check": "flip", "g": h}));
    }
    let characters = all_characters(g)?;
    let mut s = Sampler::new(seed);
    for i in 0..samples {
        let x = s.tensor_elem(base, 4);
        let y = s.tensor_elem(base, 4);
        let t = Ratio::new(s.int(1, 5), s.int(1, 6));
        let ax = flow.apply(t, &x)?;
        r.check(
            flow.apply(half, &flow.apply(half, &x)?)? == flow.apply(one, &x)?,
            || json!({"sample": i, "check": "half_squared"}),
        );
        r.check(ax.trace() == x.trace(), || json!({"sample": i, "check": "trace"}));
        r.check(
            flow.apply(t, &x.mul(&y)?)? == ax.mul(&flow.apply(t, &y)?)?,
            || json!({"sample": i, "check": "multiplicative"}),
        );
        for c in &characters {
            r.check(
                flow.apply(t, &x.character_action(c))? == ax.character_action(c),
                || json!({"sample": i, "check": "character", "phases": c.phases()}),
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{AbElem, AbGroup, Character};
    use crate::cocycle::Cocycle;

    fn base(q: u64) -> Arc<AlgebraBase> {
        let g = AbGroup::cyclic_power(q, 2);
        AlgebraBase::new(
            Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, q as i64)], vec![Phase::ZERO; 2]]).unwrap(),
        )
    }

    #[test]
    fn v_properties() {
        let b = base(3);
        let f = MalleabilityFlow::new(&b).unwrap();
        let v = f.v();
        assert_eq!(v.len(), 9);
        assert_eq!(v.star(), *v);
        assert_eq!(v.mul(v).unwrap(), TensorElem::one(&b).scale(&Cyclotomic::from_integer(9)));
        let u = f.u();
        assert_eq!(u.mul(u).unwrap(), TensorElem::one(&b));
    }

    #[test]
    fn degenerate_and_infinite_inputs() {
        let g = AbGroup::cyclic_power(3, 1);
        let b = AlgebraBase::new(Cocycle::trivial(&g));
        assert!(matches!(malleability_unitary(&b), Err(Error::Degenerate { .. })));
        let z = AlgebraBase::new(Cocycle::trivial(&AbGroup::free(2)));
        assert!(matches!(malleability_unitary(&z), Err(Error::Unsupported(_))));
    }

    #[test]
    fn flow_examples() {
        let b = base(3);
        let f = MalleabilityFlow::new(&b).unwrap();
        let z = b.group().zero();
        for g in b.group().elements().unwrap() {
            let x = TensorElem::basis(&b, g.clone(), z.clone());
            assert_eq!(f.apply(Ratio::from_integer(0), &x).unwrap(), x);
            assert_eq!(f.apply(Ratio::from_integer(1), &x).unwrap(), TensorElem::basis(&b, z.clone(), g));
        }
        let x = TensorElem::basis(&b, AbElem(vec![1, 2]), AbElem(vec![0, 1]))
            .add(&TensorElem::basis(&b, z.clone(), AbElem(vec![2, 2])).scale(&Cyclotomic::from_integer(3)))
            .unwrap();
        let half = Ratio::new(1, 2);
        let twice = f.apply(half, &f.apply(half, &x).unwrap()).unwrap();
        assert_eq!(twice, f.apply(Ratio::from_integer(1), &x).unwrap());
        let y = TensorElem::basis(&b, AbElem(vec![0, 1]), AbElem(vec![1, 1]));
        let t = Ratio::new(1, 3);
        let fx = f.apply(t, &x).unwrap();
        assert_eq!(fx.trace(), x.trace());
        assert_eq!(f.apply(t, &x.mul(&y).unwrap()).unwrap(), fx.mul(&f.apply(t, &y).unwrap()).unwrap());
        let c = Character::new(b.group(), vec![Phase::new(1, 3), Phase::new(2, 3)]).unwrap();
        assert_eq!(f.v().character_action(&c), *f.v());
        assert_eq!(f.apply(t, &x.character_action(&c)).unwrap(), fx.character_action(&c));
    }

    #[test]
    fn flow_report() {
        let r = verify_flow(&base(3), 1, 4).unwrap();
        assert!(r.ok, "{:?}", r.counterexamples);
        assert_eq!(r.checked, 2 + 9 + 4 * (3 + 9));
    }
}
