//! Conjugacy and centralizers of twisted shifts, decided on the triplet data.
//!
//! Two shifts `β(H_a, μ_a, χ_a)` and `β(H_b, μ_b, χ_b)` are conjugate exactly
//! when some isomorphism `φ: H_a -> H_b` pulls `μ_b*μ_b` back to `μ_a*μ_a`
//! and `2χ_b` back to `2χ_a`. That every conjugacy arises this way is an
//! analytic fact and is not recomputed here: queries are posed and answered
//! entirely in terms of `(H, μ, χ)`. The converse is constructive, and
//! [`PiPhi`] builds and checks the intertwiner.

mod centralizer;
mod pi;
mod z2;

use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::{enumerate_isomorphisms, AbElem, AbHom};
use crate::cocycle::Bicharacter;
use crate::dynamics::Triplet;
use crate::error::{Error, Result};
use crate::scalars::Phase;

pub use centralizer::{centralizer, CentralizerReport, CentralizerVerdict};
pub use pi::{build_pi, verify_pi, PiPhi, PiSamples};

/// Search bound used for groups with a free part when none is given.
pub const DEFAULT_BOUND: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Per-condition outcome. For a `NO` it records whether any examined
/// isomorphism satisfied each condition on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub cocycle: bool,
    pub character: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjugacyReport {
    pub verdict: Verdict,
    pub witness: Option<AbHom>,
    pub checks: Checks,
    pub complete: bool,
    /// `"closed_form"` or `"enumeration"`.
    pub method: &'static str,
}

impl ConjugacyReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Precomputed data for testing many candidate isomorphisms between two
/// fixed triplets.
pub(crate) struct ConditionChecker<'a> {
    ta: &'a Triplet,
    tb: &'a Triplet,
    star_a: Vec<Vec<Phase>>,
    star_b: Bicharacter,
    chi2_a: Vec<Phase>,
}

impl<'a> ConditionChecker<'a> {
    pub(crate) fn new(ta: &'a Triplet, tb: &'a Triplet) -> Self {
        let star_a = ta.mu().star_bicharacter().matrix().to_vec();
        let chi2_a = ta.chi().pow(2).phases().to_vec();
        ConditionChecker { ta, tb, star_a, star_b: tb.mu().star_bicharacter(), chi2_a }
    }

    /// `(cocycle, character)` flags for a map already known to be an
    /// isomorphism `H_a -> H_b`.
    pub(crate) fn check(&self, phi: &AbHom) -> (bool, bool) {
        let imgs: Vec<AbElem> = (0..self.ta.group().rank()).map(|j| phi.image_of_generator(j)).collect();
        let cocycle = imgs
            .iter()
            .enumerate()
            .all(|(i, gi)| imgs.iter().enumerate().all(|(j, gj)| self.star_b.eval(gi, gj) == self.star_a[i][j]));
        let chi = self.tb.chi();
        let character = imgs.iter().zip(&self.chi2_a).all(|(g, c)| chi.eval(g).scale(2) == *c);
        (cocycle, character)
    }
}

/// `μ_a*μ_a = φ^*(μ_b*μ_b)` on generator pairs and `2χ_a = 2(χ_b ∘ φ)` on
/// generators.
pub fn check_conditions(ta: &Triplet, tb: &Triplet, phi: &AbHom) -> Result<(bool, bool)> {
    if phi.source() != ta.group().as_ref() || phi.target() != tb.group().as_ref() {
        return Err(Error::GroupMismatch);
    }
    if !phi.is_isomorphism() {
        return Err(Error::NotIsomorphism);
    }
    Ok(ConditionChecker::new(ta, tb).check(phi))
}

/// Decides whether the two shifts are conjugate.
///
/// `Z²` against `Z²` is decided in closed form. Otherwise isomorphisms are
/// enumerated (completely for finite groups and free rank one, up to
/// `bound` otherwise) and the lexicographically first one passing both
/// conditions is the witness.
pub fn decide_conjugacy(ta: &Triplet, tb: &Triplet, bound: Option<u64>) -> Result<ConjugacyReport> {
    let (ga, gb) = (ta.group(), tb.group());
    if ga.is_isomorphic_to(gb) && ga.free_rank() == 2 && ga.torsion().is_empty() && gb.torsion().is_empty() {
        return Ok(z2::decide(ta, tb));
    }
    search_conjugacy(ta, tb, bound)
}

/// [`decide_conjugacy`] without the closed form, so it can serve as an
/// independent oracle for it.
pub fn search_conjugacy(ta: &Triplet, tb: &Triplet, bound: Option<u64>) -> Result<ConjugacyReport> {
    let (ga, gb) = (ta.group(), tb.group());
    let bound = match ga.free_rank() {
        0 => None,
        1 => Some(bound.unwrap_or(1).max(1)),
        _ => Some(bound.unwrap_or(DEFAULT_BOUND)),
    };
    let isos = enumerate_isomorphisms(ga, gb, bound)?;
    let checker = ConditionChecker::new(ta, tb);
    let mut seen = Checks { cocycle: false, character: false };
    for phi in isos.maps {
        let (c, x) = checker.check(&phi);
        if c && x {
            return Ok(ConjugacyReport {
                verdict: Verdict::Yes,
                witness: Some(phi),
                checks: Checks { cocycle: true, character: true },
                complete: isos.complete,
                method: "enumeration",
            });
        }
        seen.cocycle |= c;
        seen.character |= x;
    }
    Ok(ConjugacyReport {
        verdict: if isos.complete { Verdict::No } else { Verdict::Unknown },
        witness: None,
        checks: seen,
        complete: isos.complete,
        method: "enumeration",
    })
}

pub(crate) fn hom_json(phi: &AbHom) -> Value {
    json!({ "matrix": phi.matrix() })
}
