use num_bigint::BigInt;
use serde_json::{json, Value};

use super::hom_json;
use crate::abelian::{AbElem, AbHom};
use crate::algebra::{same_base, AlgElem};
use crate::dynamics::{beta_apply, Triplet};
use crate::error::{Error, Result};
use crate::lambda::{mu_hat, OplusElem};
use crate::lattice::{delta, e1, e2, eta, gcd2, xi, AffineSL2};
use crate::report::CheckReport;
use crate::sampling::Sampler;
use crate::scalars::Phase;

/// The intertwiner `π_φ` between two shifts, given on unitaries by
/// `π(conj(μ̂_a(λ)) u(λ)) = c̃_φ(λ) conj(μ̂_b(φ∘λ)) v(φ∘λ)` and extended
/// linearly, where `c_φ = χ_a - χ_b∘φ` takes values in `{0, 1/2}` and
/// `c̃_φ(λ) = sum_k gcd(k) c_φ(λ(k))`.
#[derive(Clone, Debug)]
pub struct PiPhi {
    ta: Triplet,
    tb: Triplet,
    phi: AbHom,
    c_phi: Vec<Phase>,
    gcd_weights: bool,
}

/// Builds `π_φ`, rejecting `φ` unless both conditions hold.
pub fn build_pi(ta: &Triplet, tb: &Triplet, phi: &AbHom) -> Result<PiPhi> {
    let (cocycle, character) = super::check_conditions(ta, tb, phi)?;
    if !(cocycle && character) {
        return Err(Error::Conditions { cocycle, character });
    }
    Ok(PiPhi::assemble(ta, tb, phi))
}

impl PiPhi {
    fn assemble(ta: &Triplet, tb: &Triplet, phi: &AbHom) -> Self {
        let pulled = tb.chi().pullback(phi).expect("checked groups");
        let c_phi = ta.chi().phases().iter().zip(pulled.phases()).map(|(a, b)| *a - *b).collect();
        PiPhi { ta: ta.clone(), tb: tb.clone(), phi: phi.clone(), c_phi, gcd_weights: true }
    }

    /// The same formula for any isomorphism, conditions unchecked. Used to
    /// show that `verify_pi` catches a bad `φ`.
    #[doc(hidden)]
    pub fn build_unchecked(ta: &Triplet, tb: &Triplet, phi: &AbHom) -> Result<Self> {
        if !phi.is_isomorphism() {
            return Err(Error::NotIsomorphism);
        }
        Ok(Self::assemble(ta, tb, phi))
    }

    /// Replaces `c̃_φ` by `sum_k c_φ(λ(k))`, dropping the gcd weights. Used
    /// as a mutation to show the weights are needed.
    #[doc(hidden)]
    pub fn without_gcd_weights(mut self) -> Self {
        self.gcd_weights = false;
        self
    }

    pub fn phi(&self) -> &AbHom {
        &self.phi
    }

    pub fn source(&self) -> &Triplet {
        &self.ta
    }

    pub fn target(&self) -> &Triplet {
        &self.tb
    }

    /// `c_φ` on the generators of `H_a`.
    pub fn c_phi(&self) -> &[Phase] {
        &self.c_phi
    }

    fn c_at(&self, h: &AbElem) -> Phase {
        h.0.iter().zip(&self.c_phi).map(|(c, p)| p.scale(*c)).sum()
    }

    pub fn c_tilde(&self, lambda: &OplusElem) -> Phase {
        lambda
            .support()
            .iter()
            .map(|(k, h)| {
                let w = if self.gcd_weights { gcd2(k) } else { BigInt::from(1) };
                self.c_at(h).scale_big(&w)
            })
            .sum()
    }

    /// `π(u(λ)) = e(μ̂_a(λ) + c̃_φ(λ) - μ̂_b(φ∘λ)) v(φ∘λ)`.
    pub fn on_unitary(&self, lambda: &OplusElem) -> (OplusElem, Phase) {
        let image = lambda.map_values(&self.phi, self.tb.group()).expect("checked groups");
        let p = mu_hat(self.ta.mu(), lambda) + self.c_tilde(lambda) - mu_hat(self.tb.mu(), &image);
        (image, p)
    }

    /// `π` on a `Λ(H_a)`-supported element.
    pub fn apply(&self, x: &AlgElem) -> Result<AlgElem> {
        same_base(x.base(), self.ta.base())?;
        if !x.is_lambda_supported() {
            return Err(Error::NotLambdaSupported);
        }
        Ok(x.map_terms(self.tb.base(), |lam| self.on_unitary(lam)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "phi": hom_json(&self.phi),
            "c_phi": self.c_phi,
            "rule": "pi(conj(mu_hat_a(l)) u(l)) = c_tilde(l) conj(mu_hat_b(phi o l)) v(phi o l)",
        })
    }
}

/// Inputs for [`verify_pi`]: pairs of `Λ(H_a)`-supported elements and extra
/// affine elements beyond the fixed generator list.
#[derive(Clone, Debug)]
pub struct PiSamples {
    pub pairs: Vec<(AlgElem, AlgElem)>,
    pub affine: Vec<AffineSL2>,
}

impl PiSamples {
    /// `pairs` pairs supported in `[-radius, radius]²` and `affine` random
    /// affine elements.
    pub fn random(ta: &Triplet, seed: u64, pairs: usize, radius: i64, affine: usize) -> Self {
        let mut s = Sampler::new(seed);
        let pairs = (0..pairs)
            .map(|_| (s.alg_elem(ta.base(), radius, 3, true), s.alg_elem(ta.base(), radius, 3, true)))
            .collect();
        let affine = (0..affine).map(|_| s.affine(3, 4)).collect();
        PiSamples { pairs, affine }
    }
}

/// `(e1, I)`, `(e2, I)`, `(0, δ)`, `ξ` and `(0, η)`.
pub fn generator_list() -> Vec<AffineSL2> {
    vec![
        AffineSL2::translation(e1()),
        AffineSL2::translation(e2()),
        AffineSL2::linear(delta()),
        xi(),
        AffineSL2::linear(eta()),
    ]
}

/// Checks multiplicativity, `*`-preservation, trace preservation and
/// `π ∘ β_a(g) = β_b(g) ∘ π` for the generator list and the sampled affine
/// elements, all as exact equalities.
pub fn verify_pi(pi: &PiPhi, samples: &PiSamples) -> Result<CheckReport> {
    let (ta, tb) = (&pi.ta, &pi.tb);
    let group: Vec<AffineSL2> = generator_list().into_iter().chain(samples.affine.iter().cloned()).collect();
    let mut report = CheckReport::new();
    for (i, (x, y)) in samples.pairs.iter().enumerate() {
        let (px, py) = (pi.apply(x)?, pi.apply(y)?);
        report.check(
            pi.apply(&x.mul(y)?)? == px.mul(&py)?,
            || json!({"pair": i, "check": "multiplicative", "x": x.to_json(), "y": y.to_json()}),
        );
        report.check(pi.apply(&x.star())? == px.star(), || json!({"pair": i, "check": "star", "x": x.to_json()}));
        report.check(px.trace() == x.trace(), || json!({"pair": i, "check": "trace", "x": x.to_json()}));
        for g in &group {
            for (z, pz) in [(x, &px), (y, &py)] {
                let lhs = pi.apply(&beta_apply(ta, g, z)?)?;
                let rhs = beta_apply(tb, g, pz)?;
                report.check(lhs == rhs, || json!({"pair": i, "check": "equivariance", "g": g, "x": z.to_json()}));
            }
        }
    }
    Ok(report)
}
