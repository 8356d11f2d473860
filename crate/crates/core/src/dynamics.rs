//! The group `Γ₀ = Ĥ × Z² × SL(2, Z)`, its action `ρ` on the twisted algebra
//! of `⊕_{Z²} H`, and the shift action `β` on the `Λ(H)`-supported part.
//!
//! `ρ(c, k, γ) = ρ(c) ∘ ρ(k) ∘ ρ(γ)` where `ρ(γ)` relocates values,
//! `ρ(k)` shifts them with the phase `sum_m det(k, m) χ(λ(m))`, and `ρ(c)`
//! multiplies by `c` of the total.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::abelian::{AbElem, AbGroup, Character};
use crate::algebra::{same_base, AlgElem, AlgebraBase};
use crate::cocycle::Cocycle;
use crate::error::{Error, Result, Violation};
use crate::lambda::OplusElem;
use crate::lattice::{det2, spiral, AffineSL2, LatticePoint, Sl2};
use crate::report::CheckReport;
use crate::scalars::Phase;

/// The data `(H, μ, χ)` a twisted shift is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triplet {
    base: Arc<AlgebraBase>,
    chi: Character,
}

impl Triplet {
    /// Rejects the trivial group and a character over a different group.
    pub fn new(mu: Cocycle, chi: Character) -> Result<Self> {
        if mu.group().is_trivial() {
            return Err(Error::invalid(Violation::TrivialGroup, "H must be nonzero"));
        }
        if chi.group() != mu.group() {
            return Err(Error::invalid(Violation::Shape, "character is over a different group"));
        }
        Ok(Triplet { base: AlgebraBase::new(mu), chi })
    }

    pub fn base(&self) -> &Arc<AlgebraBase> {
        &self.base
    }

    pub fn group(&self) -> &Arc<AbGroup> {
        self.base.group()
    }

    pub fn mu(&self) -> &Cocycle {
        self.base.cocycle()
    }

    pub fn chi(&self) -> &Character {
        &self.chi
    }
}

/// `(c, k, γ) ∈ Γ₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gamma0Elem {
    pub c: Character,
    pub k: LatticePoint,
    pub gamma: Sl2,
}

impl Gamma0Elem {
    pub fn identity(t: &Triplet) -> Self {
        Gamma0Elem { c: Character::trivial(t.group()), k: LatticePoint::zero(), gamma: Sl2::identity() }
    }

    /// `(1, k, γ)`, the image of an affine element.
    pub fn from_affine(t: &Triplet, a: &AffineSL2) -> Self {
        Gamma0Elem { c: Character::trivial(t.group()), k: a.translation.clone(), gamma: a.matrix.clone() }
    }
}

/// `(c1, k, γ1)(c2, l, γ2) = (c1 c2 χ^{det(k, γ1 l)}, k + γ1 l, γ1 γ2)`.
pub fn gamma0_mul(t: &Triplet, a: &Gamma0Elem, b: &Gamma0Elem) -> Result<Gamma0Elem> {
    let gl = a.gamma.apply(&b.k);
    let twist = t.chi.pow_big(&det2(&a.k, &gl));
    Ok(Gamma0Elem { c: a.c.mul(&b.c)?.mul(&twist)?, k: &a.k + &gl, gamma: a.gamma.mul(&b.gamma) })
}

/// `sum_m det(k, m) χ(λ(m))`.
fn shift_phase(chi: &Character, k: &LatticePoint, lambda: &OplusElem) -> Phase {
    lambda.support().iter().map(|(m, v)| chi.eval(v).scale_big(&det2(k, m))).sum()
}

fn check_base(t: &Triplet, x: &AlgElem) -> Result<()> {
    same_base(&t.base, x.base())
}

/// `ρ(c)`: scales `u(λ)` by `c(sum λ)`.
pub fn rho_char(t: &Triplet, c: &Character, x: &AlgElem) -> Result<AlgElem> {
    check_base(t, x)?;
    Ok(x.map_terms(&t.base, |lam| (lam.clone(), c.eval(&lam.total()))))
}

/// `ρ(k)`: `u(λ) -> (prod_m χ(λ(m))^{det(k, m)}) u(k · λ)`.
pub fn rho_shift(t: &Triplet, k: &LatticePoint, x: &AlgElem) -> Result<AlgElem> {
    check_base(t, x)?;
    Ok(x.map_terms(&t.base, |lam| (lam.shift(k), shift_phase(&t.chi, k, lam))))
}

/// `ρ(γ)`: `u(λ) -> u(γ · λ)`.
pub fn rho_linear(t: &Triplet, gamma: &Sl2, x: &AlgElem) -> Result<AlgElem> {
    check_base(t, x)?;
    let a = AffineSL2::linear(gamma.clone());
    Ok(x.map_terms(&t.base, |lam| (lam.act(&a), Phase::ZERO)))
}

/// `ρ(c, k, γ)` in one pass.
pub fn rho_apply(t: &Triplet, g: &Gamma0Elem, x: &AlgElem) -> Result<AlgElem> {
    check_base(t, x)?;
    let lin = AffineSL2::linear(g.gamma.clone());
    Ok(x.map_terms(&t.base, |lam| {
        let moved = lam.act(&lin);
        let p = shift_phase(&t.chi, &g.k, &moved) + g.c.eval(&lam.total());
        (moved.shift(&g.k), p)
    }))
}

/// `β(k, γ) = ρ(1, k, γ)` on `Λ(H)`-supported elements.
pub fn beta_apply(t: &Triplet, a: &AffineSL2, x: &AlgElem) -> Result<AlgElem> {
    if !x.is_lambda_supported() {
        return Err(Error::NotLambdaSupported);
    }
    rho_apply(t, &Gamma0Elem::from_affine(t, a), x)
}

/// Input for [`verify_rho_relations`].
#[derive(Clone, Debug)]
pub struct RhoSample {
    pub k: LatticePoint,
    pub l: LatticePoint,
    pub gamma: Sl2,
    pub x: AlgElem,
}

/// Checks `ρ(k)ρ(l) = ρ(χ^{det(k,l)})ρ(k+l)` and `ρ(γk)ρ(γ) = ρ(γ)ρ(k)`
/// exactly on each sample.
pub fn verify_rho_relations(t: &Triplet, samples: &[RhoSample]) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for (i, s) in samples.iter().enumerate() {
        let lhs = rho_shift(t, &s.k, &rho_shift(t, &s.l, &s.x)?)?;
        let twist = t.chi.pow_big(&det2(&s.k, &s.l));
        let rhs = rho_char(t, &twist, &rho_shift(t, &(&s.k + &s.l), &s.x)?)?;
        report.check(lhs == rhs, || json!({"sample": i, "relation": "shift_product", "k": s.k, "l": s.l}));
        let gk = s.gamma.apply(&s.k);
        let lhs = rho_shift(t, &gk, &rho_linear(t, &s.gamma, &s.x)?)?;
        let rhs = rho_linear(t, &s.gamma, &rho_shift(t, &s.k, &s.x)?)?;
        report.check(
            lhs == rhs,
            || json!({"sample": i, "relation": "linear_conjugation", "k": s.k, "gamma": format!("{:?}", s.gamma)}),
        );
    }
    Ok(report)
}

/// Whether `tr(a_i β(k)(a_j)) = tr(a_i) tr(a_j)` holds exactly for all pairs.
pub fn is_mixing_witness(t: &Triplet, elems: &[AlgElem], k: &LatticePoint) -> Result<bool> {
    let shift = AffineSL2::translation(k.clone());
    let moved = elems.iter().map(|a| beta_apply(t, &shift, a)).collect::<Result<Vec<_>>>()?;
    for a in elems {
        let ta = a.trace();
        for (b, bk) in elems.iter().zip(&moved) {
            if a.mul(bk)?.trace() != ta.mul(&b.trace()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn max_coordinate(elems: &[AlgElem]) -> BigInt {
    elems
        .iter()
        .flat_map(|a| a.terms().keys())
        .flat_map(|lam| lam.support().keys())
        .flat_map(|p| [p.q.abs(), p.r.abs()])
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// The first `k` in spiral order that is an exact weak-mixing witness for
/// the `Λ(H)`-supported `elems`.
///
/// Any `k` with sup-norm above twice the largest support coordinate moves
/// every nonzero support off every other one, so the search is finite.
pub fn weak_mixing_witness(t: &Triplet, elems: &[AlgElem]) -> Result<LatticePoint> {
    let limit = (max_coordinate(elems) * 2u32 + 1u32)
        .to_i64()
        .ok_or_else(|| Error::Unsupported("support coordinates too large".into()))?;
    for k in spiral() {
        let (q, r) = k.to_i64().expect("small");
        if q.abs().max(r.abs()) > limit {
            break;
        }
        if is_mixing_witness(t, elems, &k)? {
            return Ok(k);
        }
    }
    unreachable!("a shift beyond twice the support radius is always a witness")
}

/// Every character of a finite group.
pub fn all_characters(g: &AbGroup) -> Result<Vec<Character>> {
    if !g.is_finite() {
        return Err(Error::Unsupported("dual of an infinite group".into()));
    }
    let mut out = vec![Vec::new()];
    for i in 0..g.rank() {
        let n = g.generator_order(i).expect("finite") as i64;
        out = out.into_iter().flat_map(|p| (0..n).map(move |j| [p.clone(), vec![Phase::new(j, n)]].concat())).collect();
    }
    Ok(out.into_iter().map(|p| Character::new(g, p).expect("well defined")).collect())
}

/// Characters that tell apart the totals occurring in `x` from zero.
///
/// Finite `H` uses the whole dual. With a free part, each free generator
/// gets a character of order `N > 2M` (where `M` bounds the free
/// coordinates of the totals) that is trivial on the other generators, and
/// the torsion part contributes its whole dual.
pub fn separating_characters(t: &Triplet, x: &AlgElem) -> Result<Vec<Character>> {
    let g = t.group();
    if g.is_finite() {
        return all_characters(g);
    }
    let free = g.free_rank();
    let m = x.terms().keys().flat_map(|lam| lam.total().0[..free].to_vec()).map(i64::abs).max().unwrap_or(0);
    let n = 2 * m + 1;
    let torsion = AbGroup::new(0, g.torsion().to_vec())?;
    let mut out = Vec::new();
    for i in 0..free {
        let mut p = vec![Phase::ZERO; g.rank()];
        p[i] = Phase::new(1, n);
        out.push(Character::new(g, p)?);
    }
    for c in all_characters(&torsion)? {
        let p = [vec![Phase::ZERO; free], c.phases().to_vec()].concat();
        out.push(Character::new(g, p)?);
    }
    Ok(out)
}

/// Whether `ρ(c, 0, I)` fixes `x` for every separating character, which
/// happens exactly when `x` is `Λ(H)`-supported.
pub fn is_dual_fixed(t: &Triplet, x: &AlgElem) -> Result<bool> {
    for c in separating_characters(t, x)? {
        if rho_char(t, &c, x)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `u(λ_h)` with `λ_h = -h δ_0 + h δ_{e1}`.
pub fn lambda_unitary(t: &Triplet, h: &AbElem) -> AlgElem {
    AlgElem::unitary(&t.base, crate::lambda::lambda_h(t.group(), h))
}
