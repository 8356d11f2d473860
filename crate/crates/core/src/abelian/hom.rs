use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::{AbElem, AbGroup};
use crate::error::{Error, Result};
use crate::snf;

/// A homomorphism given by its matrix: column `j` is the image of source
/// generator `j` in target coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbHom {
    source: AbGroup,
    target: AbGroup,
    matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct HomRepr {
    matrix: Vec<Vec<i64>>,
}

impl AbHom {
    /// Builds the map from a row-major matrix (`target.rank()` rows).
    ///
    /// Rejects wrong shapes and images that violate generator orders: a
    /// torsion generator of order `n` must map to an element killed by `n`.
    pub fn new(source: &AbGroup, target: &AbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != target.rank() || matrix.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Hom(format!("expected a {}x{} matrix", target.rank(), source.rank())));
        }
        let mut hom = AbHom { source: source.clone(), target: target.clone(), matrix };
        for j in 0..source.rank() {
            let col = target.elem(hom.column_raw(j))?;
            if let Some(n) = source.generator_order(j) {
                if !target.scale(&col, n as i64).is_zero() {
                    return Err(Error::Hom(format!("image of generator {j} is not killed by its order {n}")));
                }
            }
            for (i, c) in col.0.iter().enumerate() {
                hom.matrix[i][j] = *c;
            }
        }
        Ok(hom)
    }

    /// Builds the map from the images of the source generators.
    pub fn from_images(source: &AbGroup, target: &AbGroup, images: &[AbElem]) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::Hom("wrong number of generator images".into()));
        }
        let matrix =
            (0..target.rank()).map(|i| images.iter().map(|im| im.0.get(i).copied().unwrap_or(0)).collect()).collect();
        if images.iter().any(|im| im.0.len() != target.rank()) {
            return Err(Error::GroupMismatch);
        }
        Self::new(source, target, matrix)
    }

    pub fn from_json(value: &serde_json::Value, source: &AbGroup, target: &AbGroup) -> Result<Self> {
        let repr: HomRepr = serde_json::from_value(value.clone())?;
        Self::new(source, target, repr.matrix)
    }

    pub fn identity(g: &AbGroup) -> Self {
        let matrix = (0..g.rank()).map(|i| (0..g.rank()).map(|j| i64::from(i == j)).collect()).collect();
        AbHom { source: g.clone(), target: g.clone(), matrix }
    }

    pub fn source(&self) -> &AbGroup {
        &self.source
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    fn column_raw(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|r| r[j]).collect()
    }

    pub fn image_of_generator(&self, j: usize) -> AbElem {
        AbElem(self.column_raw(j))
    }

    pub fn apply(&self, g: &AbElem) -> AbElem {
        assert_eq!(g.0.len(), self.source.rank(), "group mismatch");
        let v = self.matrix.iter().map(|row| row.iter().zip(&g.0).map(|(a, b)| a * b).sum()).collect();
        self.target.elem(v).expect("rank checked at construction")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if other.target != self.source {
            return Err(Error::GroupMismatch);
        }
        let images: Vec<AbElem> = (0..other.source.rank()).map(|j| self.apply(&other.image_of_generator(j))).collect();
        AbHom::from_images(&other.source, &self.target, &images)
    }

    /// Whether the map is bijective.
    ///
    /// Finite groups compare the image size with both orders. Otherwise the
    /// map is lifted to `Z^ra -> Z^rb` and decided with Smith normal forms:
    /// surjective iff the images together with the target relations span the
    /// lattice, injective iff every relation-respecting kernel vector is
    /// itself a source relation.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.is_finite() && self.target.is_finite() {
            let (Some(a), Some(b)) = (self.source.order(), self.target.order()) else { unreachable!() };
            return a == b && self.image_size() == Some(b);
        }
        if self.source.free_rank() != self.target.free_rank() {
            return false;
        }
        let (ra, rb) = (self.source.rank(), self.target.rank());
        let rel_b = relations(&self.target);
        // [F | R_b], rb rows
        let joined: snf::Mat = (0..rb)
            .map(|i| {
                let mut row: Vec<i128> = self.matrix[i].iter().map(|x| *x as i128).collect();
                row.extend(rel_b.iter().map(|col| col[i]));
                row
            })
            .collect();
        let cols = ra + rel_b.len();
        if !snf::spans_lattice(&joined, cols) {
            return false;
        }
        let fa = self.source.free_rank();
        snf::kernel(&joined, cols).iter().all(|k| {
            k[..ra].iter().enumerate().all(|(j, x)| match j.checked_sub(fa) {
                None => *x == 0,
                Some(t) => x.rem_euclid(self.source.torsion()[t] as i128) == 0,
            })
        })
    }

    /// Size of the image for a finite source.
    pub fn image_size(&self) -> Option<u64> {
        let elems = self.source.elements().ok()?;
        let image: HashSet<AbElem> = elems.iter().map(|g| self.apply(g)).collect();
        Some(image.len() as u64)
    }

    /// Inverse of a bijective map between finite groups.
    pub fn inverse(&self) -> Result<AbHom> {
        if !self.is_isomorphism() {
            return Err(Error::NotIsomorphism);
        }
        if !self.source.is_finite() {
            return Err(Error::Unsupported("inverse of a map with free part".into()));
        }
        let elems = self.source.elements()?;
        let images: Vec<AbElem> = (0..self.target.rank())
            .map(|j| {
                let gj = self.target.generator(j);
                elems.iter().find(|g| self.apply(g) == gj).cloned().expect("bijective")
            })
            .collect();
        AbHom::from_images(&self.target, &self.source, &images)
    }
}

// Relation columns of the presentation: n_i e_i for each torsion generator.
fn relations(g: &AbGroup) -> Vec<Vec<i128>> {
    g.torsion()
        .iter()
        .enumerate()
        .map(|(t, n)| {
            let mut col = vec![0i128; g.rank()];
            col[g.free_rank() + t] = *n as i128;
            col
        })
        .collect()
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix)
    }
}

impl Serialize for AbHom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbHom", 1)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.end()
    }
}
