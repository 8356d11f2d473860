use serde::{Deserialize, Serialize};

use super::{AbElem, AbGroup, AbHom};
use crate::error::{Error, Result, Violation};
use crate::scalars::Phase;

/// A character `H -> Q/Z`, stored by its value on each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    group: AbGroup,
    phases: Vec<Phase>,
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    phases: Vec<Phase>,
}

impl Character {
    /// Rejects phases that are not killed by the order of their generator.
    pub fn new(group: &AbGroup, phases: Vec<Phase>) -> Result<Self> {
        if phases.len() != group.rank() {
            return Err(Error::invalid(
                Violation::Shape,
                format!("expected {} phases, got {}", group.rank(), phases.len()),
            ));
        }
        for (i, p) in phases.iter().enumerate() {
            if let Some(n) = group.generator_order(i) {
                if !p.scale(n as i64).is_zero() {
                    return Err(Error::invalid(
                        Violation::WellDefinedness,
                        format!("phase {p} on generator {i} of order {n}"),
                    ));
                }
            }
        }
        Ok(Character { group: group.clone(), phases })
    }

    pub fn trivial(group: &AbGroup) -> Self {
        Character { group: group.clone(), phases: vec![Phase::ZERO; group.rank()] }
    }

    pub fn from_json(value: &serde_json::Value, group: &AbGroup) -> Result<Self> {
        let repr: CharacterRepr = serde_json::from_value(value.clone())?;
        Self::new(group, repr.phases)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CharacterRepr { phases: self.phases.clone() }).expect("serializable")
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    pub fn eval(&self, g: &AbElem) -> Phase {
        assert_eq!(g.0.len(), self.phases.len(), "group mismatch");
        g.0.iter().zip(&self.phases).map(|(c, p)| p.scale(*c)).sum()
    }

    /// The character `g -> n * self(g)`.
    pub fn pow(&self, n: i64) -> Character {
        Character { group: self.group.clone(), phases: self.phases.iter().map(|p| p.scale(n)).collect() }
    }

    /// `pow` for an arbitrary-precision exponent.
    pub fn pow_big(&self, n: &num_bigint::BigInt) -> Character {
        Character { group: self.group.clone(), phases: self.phases.iter().map(|p| p.scale_big(n)).collect() }
    }

    pub fn mul(&self, other: &Character) -> Result<Character> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(Character {
            group: self.group.clone(),
            phases: self.phases.iter().zip(&other.phases).map(|(a, b)| *a + *b).collect(),
        })
    }

    /// `self ∘ phi`, a character of `phi`'s source.
    pub fn pullback(&self, phi: &AbHom) -> Result<Character> {
        if phi.target() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let src = phi.source();
        Ok(Character {
            group: src.clone(),
            phases: (0..src.rank()).map(|j| self.eval(&phi.image_of_generator(j))).collect(),
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.phases.iter().all(Phase::is_zero)
    }
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CharacterRepr { phases: self.phases.clone() }.serialize(s)
    }
}
