use serde::Serialize;
use serde_json::Value;

use super::ConditionChecker;
use crate::abelian::{enumerate_isomorphisms, group_structure, AbHom};
use crate::dynamics::Triplet;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CentralizerVerdict {
    /// Every element was found; the structure fields are filled in.
    Complete,
    /// Provably infinite; `elements` lists what a bounded search found.
    Infinite,
    Unknown,
}

/// `Aut(H, μ*μ, χ²)`: automorphisms of `H` preserving the commutator
/// bicharacter and the squared character.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralizerReport {
    pub verdict: CentralizerVerdict,
    pub order: Option<usize>,
    pub structure: Option<String>,
    pub cyclic: Option<bool>,
    pub invariant_factors: Option<Vec<u64>>,
    pub elements: Vec<AbHom>,
    pub complete: bool,
}

impl CentralizerReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// The centralizer group data of `β(H, μ, χ)`.
///
/// Finite `H` and free rank one are enumerated completely. For free rank
/// at least two the group is infinite: with `L` clearing the denominators of
/// `μ*μ` and `2χ`, every `A ≡ I (mod L)` in `SL(d, Z)` acting on the free
/// coordinates qualifies. A `bound` then only lists small elements.
pub fn centralizer(t: &Triplet, bound: Option<u64>) -> Result<CentralizerReport> {
    let g = t.group();
    let checker = ConditionChecker::new(t, t);
    let keep = |maps: Vec<AbHom>| -> Vec<AbHom> {
        maps.into_iter()
            .filter(|phi| {
                let (c, x) = checker.check(phi);
                c && x
            })
            .collect()
    };
    if g.free_rank() >= 2 {
        let elements = match bound {
            Some(b) => keep(enumerate_isomorphisms(g, g, Some(b))?.maps),
            None => Vec::new(),
        };
        return Ok(CentralizerReport {
            verdict: CentralizerVerdict::Infinite,
            order: None,
            structure: Some("infinite".into()),
            cyclic: Some(false),
            invariant_factors: None,
            elements,
            complete: false,
        });
    }
    let search_bound = (g.free_rank() == 1).then(|| bound.unwrap_or(1).max(1));
    let found = enumerate_isomorphisms(g, g, search_bound)?;
    let elements = keep(found.maps);
    if !found.complete {
        return Ok(CentralizerReport {
            verdict: CentralizerVerdict::Unknown,
            order: None,
            structure: None,
            cyclic: None,
            invariant_factors: None,
            elements,
            complete: false,
        });
    }
    let s = group_structure(&elements, |a, b| a.compose(b).expect("same group"))?;
    Ok(CentralizerReport {
        verdict: CentralizerVerdict::Complete,
        order: Some(s.order),
        cyclic: Some(s.is_cyclic()),
        structure: Some(s.structure),
        invariant_factors: Some(s.invariant_factors),
        elements,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{AbGroup, Character};
    use crate::cocycle::Cocycle;
    use crate::scalars::Phase;

    fn mu_q(q: u64) -> Triplet {
        let g = AbGroup::cyclic_power(q, 2);
        let mu = Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, q as i64)], vec![Phase::ZERO; 2]]).unwrap();
        Triplet::new(mu, Character::new(&g, vec![Phase::new(1, q as i64), Phase::ZERO]).unwrap()).unwrap()
    }

    #[test]
    fn mu_3_centralizer_is_unipotent() {
        let r = centralizer(&mu_q(3), None).unwrap();
        assert_eq!(r.order, Some(3));
        assert_eq!(r.structure.as_deref(), Some("Z/3"));
        let mats: Vec<_> = r.elements.iter().map(|p| p.matrix().to_vec()).collect();
        for t in 0..3 {
            assert!(mats.contains(&vec![vec![1, 0], vec![t, 1]]));
        }
    }

    #[test]
    fn trivial_data_gives_all_automorphisms() {
        let g = AbGroup::cyclic_power(3, 1);
        let t = Triplet::new(Cocycle::trivial(&g), Character::trivial(&g)).unwrap();
        let r = centralizer(&t, None).unwrap();
        assert_eq!((r.order, r.cyclic), (Some(2), Some(true)));
    }

    #[test]
    fn product_of_3_and_5() {
        let (a, b) = (mu_q(3), mu_q(5));
        let mu = a.mu().direct_sum(b.mu()).unwrap();
        let g = mu.group().clone();
        let phases = [a.chi().phases(), b.chi().phases()].concat();
        let t = Triplet::new(mu, Character::new(&g, phases).unwrap()).unwrap();
        let r = centralizer(&t, None).unwrap();
        assert_eq!((r.order, r.cyclic), (Some(15), Some(true)));
        assert_eq!(r.structure.as_deref(), Some("Z/15"));
    }

    #[test]
    fn free_rank_two_is_infinite() {
        let g = AbGroup::free(2);
        let t = Triplet::new(Cocycle::trivial(&g), Character::trivial(&g)).unwrap();
        let r = centralizer(&t, None).unwrap();
        assert_eq!(r.verdict, CentralizerVerdict::Infinite);
        assert!(r.elements.is_empty());
        let r = centralizer(&t, Some(1)).unwrap();
        assert!(!r.elements.is_empty());
    }
}
