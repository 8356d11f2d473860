use num_integer::Integer;
use serde_json::{json, Value};

use super::bilinear;
use crate::abelian::{AbElem, AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::scalars::Phase;
use crate::snf;

/// A bimultiplicative map `H x H -> Q/Z`, stored by its generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: AbGroup,
    matrix: Vec<Vec<Phase>>,
}

impl Bicharacter {
    pub(crate) fn new_unchecked(group: &AbGroup, matrix: Vec<Vec<Phase>>) -> Self {
        Bicharacter { group: group.clone(), matrix }
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<Phase>] {
        &self.matrix
    }

    pub fn eval(&self, g: &AbElem, h: &AbElem) -> Phase {
        bilinear(&self.matrix, g, h)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Phase::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let r = self.matrix.len();
        (0..r).all(|i| self.matrix[i][i].is_zero() && (0..i).all(|j| self.matrix[i][j] == -self.matrix[j][i]))
    }

    /// `(g, h) -> self(phi g, phi h)` on the source of `phi`.
    pub fn pullback(&self, phi: &AbHom) -> Result<Bicharacter> {
        if phi.target() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let imgs: Vec<AbElem> = (0..phi.source().rank()).map(|j| phi.image_of_generator(j)).collect();
        let matrix = imgs.iter().map(|a| imgs.iter().map(|b| self.eval(a, b)).collect()).collect();
        Ok(Bicharacter { group: phi.source().clone(), matrix })
    }

    /// A nonzero `g` with `self(g, h) = 0` for all `h`, found from the
    /// integer kernel of `[L S^T | -L I]` where `L` clears all denominators.
    pub(crate) fn radical_witness(&self) -> Option<AbElem> {
        let g = &self.group;
        let r = g.rank();
        let l = self.matrix.iter().flatten().fold(1u64, |acc, p| acc.lcm(&p.den())) as i128;
        let a: snf::Mat = (0..r)
            .map(|j| {
                let mut row: Vec<i128> = (0..r)
                    .map(|i| {
                        let p = self.matrix[i][j];
                        p.num() as i128 * (l / p.den() as i128)
                    })
                    .collect();
                row.extend((0..r).map(|k| if k == j { -l } else { 0 }));
                row
            })
            .collect();
        let fr = g.free_rank();
        snf::kernel(&a, 2 * r).into_iter().find_map(|k| {
            let outside = k[..r].iter().enumerate().any(|(i, x)| match i.checked_sub(fr) {
                None => *x != 0,
                Some(t) => x.rem_euclid(g.torsion()[t] as i128) != 0,
            });
            outside.then(|| {
                let coords = k[..r].iter().map(|x| i64::try_from(*x).expect("small kernel vector")).collect();
                g.elem(coords).expect("rank matches")
            })
        })
    }

    pub fn to_json(&self) -> Value {
        json!({"matrix": self.matrix, "antisymmetric": self.is_antisymmetric()})
    }
}
