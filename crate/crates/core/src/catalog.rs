//! Standard triplets: the `(Z/q)²` family, their products, the rotation
//! cocycles on `Z²`, and untwisted data.

use crate::abelian::{AbGroup, Character};
use crate::cocycle::Cocycle;
use crate::dynamics::Triplet;
use crate::error::Result;
use crate::scalars::Phase;

/// `μ_q((s1, t1), (s2, t2)) = s1 t2 / q` on `(Z/q)²`.
pub fn mu_q(q: u64) -> Cocycle {
    let g = AbGroup::cyclic_power(q, 2);
    Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, q as i64)], vec![Phase::ZERO; 2]]).expect("well defined")
}

/// `χ_q(s, t) = s / q`.
pub fn chi_q(q: u64) -> Character {
    let g = AbGroup::cyclic_power(q, 2);
    Character::new(&g, vec![Phase::new(1, q as i64), Phase::ZERO]).expect("well defined")
}

pub fn triplet_q(q: u64) -> Triplet {
    Triplet::new(mu_q(q), chi_q(q)).expect("nontrivial group")
}

/// The direct sum of the `triplet_q` over `qs`, with the summed cocycle and
/// character.
pub fn product_triplet(qs: &[u64]) -> Result<Triplet> {
    let mut parts = qs.iter().map(|&q| triplet_q(q));
    let first = parts.next().expect("at least one factor");
    let (mut mu, mut phases) = (first.mu().clone(), first.chi().phases().to_vec());
    for t in parts {
        mu = mu.direct_sum(t.mu())?;
        phases.extend_from_slice(t.chi().phases());
    }
    let chi = Character::new(mu.group(), phases)?;
    Triplet::new(mu, chi)
}

/// `μ_θ(g, h) = θ det(g, h)` on `Z²`.
pub fn mu_theta(theta: Phase) -> Cocycle {
    Cocycle::bichar(&AbGroup::free(2), vec![vec![Phase::ZERO, theta], vec![-theta, Phase::ZERO]]).expect("free group")
}

pub fn triplet_theta(theta: Phase, chi: [Phase; 2]) -> Triplet {
    let chi = Character::new(&AbGroup::free(2), chi.to_vec()).expect("free group");
    Triplet::new(mu_theta(theta), chi).expect("nontrivial group")
}

/// `(H, 1, 1)`.
pub fn untwisted(group: &AbGroup) -> Result<Triplet> {
    Triplet::new(Cocycle::trivial(group), Character::trivial(group))
}

/// `(H, 1, χ)`.
pub fn untwisted_with(chi: Character) -> Result<Triplet> {
    Triplet::new(Cocycle::trivial(chi.group()), chi)
}
