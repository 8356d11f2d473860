//! Normalized scalar 2-cocycles `H x H -> Q/Z`.
//!
//! Cocycles are stored either as a full table (finite groups only) or as a
//! bilinear form `mu(g, h) = sum_ij g_i B_ij h_j` given by a phase matrix.

mod bicharacter;
mod coboundary;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::abelian::{AbElem, AbGroup, AbHom};
use crate::error::{Error, Result, Violation};
use crate::scalars::Phase;

pub use bicharacter::Bicharacter;
pub use coboundary::{coboundary_of, coboundary_witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleForm {
    /// `table[i * |H| + j] = mu(elements[i], elements[j])`.
    Table(Vec<Phase>),
    Bichar(Vec<Vec<Phase>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    group: AbGroup,
    form: CocycleForm,
}

impl Cocycle {
    /// The bilinear cocycle of a phase matrix.
    ///
    /// On torsion generators the entries must be killed by the generator
    /// orders on both sides, so the value does not depend on coordinate
    /// representatives.
    pub fn bichar(group: &AbGroup, matrix: Vec<Vec<Phase>>) -> Result<Self> {
        let r = group.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::invalid(Violation::Shape, format!("bicharacter matrix must be {r}x{r}")));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                for n in [group.generator_order(i), group.generator_order(j)].into_iter().flatten() {
                    if !b.scale(n as i64).is_zero() {
                        return Err(Error::invalid(
                            Violation::WellDefinedness,
                            format!("entry ({i},{j}) = {b} is not killed by order {n}"),
                        ));
                    }
                }
            }
        }
        Ok(Cocycle { group: group.clone(), form: CocycleForm::Bichar(matrix) })
    }

    /// A cocycle given by its full value table on a finite group.
    ///
    /// Checks normalization and the 2-cocycle identity exhaustively.
    pub fn table(group: &AbGroup, table: Vec<Phase>) -> Result<Self> {
        let Some(n) = group.order() else {
            return Err(Error::Unsupported("table cocycle on an infinite group".into()));
        };
        let n = n as usize;
        if table.len() != n * n {
            return Err(Error::invalid(Violation::Shape, format!("table needs {} entries", n * n)));
        }
        let c = Cocycle { group: group.clone(), form: CocycleForm::Table(table) };
        c.check_table()?;
        Ok(c)
    }

    /// Tabulates `f` on a finite group.
    pub fn from_fn(group: &AbGroup, f: impl Fn(&AbElem, &AbElem) -> Phase) -> Result<Self> {
        let els = group.elements()?;
        let table = els.iter().flat_map(|g| els.iter().map(|h| f(g, h)).collect::<Vec<_>>()).collect();
        Self::table(group, table)
    }

    pub fn trivial(group: &AbGroup) -> Self {
        let r = group.rank();
        Cocycle { group: group.clone(), form: CocycleForm::Bichar(vec![vec![Phase::ZERO; r]; r]) }
    }

    fn check_table(&self) -> Result<()> {
        let CocycleForm::Table(t) = &self.form else { return Ok(()) };
        let g = &self.group;
        let n = g.order().unwrap() as usize;
        for i in 0..n {
            if !t[i * n].is_zero() || !t[i].is_zero() {
                return Err(Error::invalid(
                    Violation::Normalization,
                    format!("mu(g, 0) or mu(0, g) is nonzero at g = {:?}", g.elem_at(i as u64)),
                ));
            }
        }
        let els = g.elements()?;
        let sums: Vec<Vec<usize>> =
            els.iter().map(|a| els.iter().map(|b| g.index_of(&g.add(a, b))).collect()).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = sums[a][b];
                for c in 0..n {
                    let lhs = t[a * n + b] + t[ab * n + c];
                    let rhs = t[b * n + c] + t[a * n + sums[b][c]];
                    if lhs != rhs {
                        return Err(Error::invalid(
                            Violation::CocycleIdentity,
                            format!("fails at {:?}, {:?}, {:?}", els[a], els[b], els[c]),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn form(&self) -> &CocycleForm {
        &self.form
    }

    pub fn eval(&self, g: &AbElem, h: &AbElem) -> Phase {
        match &self.form {
            CocycleForm::Bichar(b) => bilinear(b, g, h),
            CocycleForm::Table(t) => {
                let n = self.group.order().unwrap() as usize;
                t[self.group.index_of(g) * n + self.group.index_of(h)]
            }
        }
    }

    /// The defining matrix as a bicharacter, for bilinear cocycles.
    pub fn as_bicharacter(&self) -> Option<Bicharacter> {
        match &self.form {
            CocycleForm::Bichar(m) => Some(Bicharacter::new_unchecked(&self.group, m.clone())),
            CocycleForm::Table(_) => None,
        }
    }

    /// `mu(g, h) - mu(h, g)`, a bicharacter.
    pub fn star_bicharacter(&self) -> Bicharacter {
        let r = self.group.rank();
        let gens = self.group.generators();
        let matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match &self.form {
                        CocycleForm::Bichar(b) => b[i][j] - b[j][i],
                        CocycleForm::Table(_) => self.eval(&gens[i], &gens[j]) - self.eval(&gens[j], &gens[i]),
                    })
                    .collect()
            })
            .collect();
        Bicharacter::new_unchecked(&self.group, matrix)
    }

    /// Whether the two cocycles differ by a coboundary, decided by comparing
    /// their commutator bicharacters on generator pairs.
    pub fn cohomologous(&self, other: &Cocycle) -> Result<bool> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.star_bicharacter() == other.star_bicharacter())
    }

    /// An element `g != 0` commuting with everything, if one exists.
    ///
    /// Finite groups are searched exhaustively. Otherwise the radical
    /// `{g in Z^r : sum_i g_i S_ij = 0 mod 1 for all j}` of the commutator
    /// matrix `S` is computed as an integer kernel and compared with the
    /// relation lattice of the presentation.
    pub fn degeneracy_witness(&self) -> Option<AbElem> {
        let star = self.star_bicharacter();
        let g = &self.group;
        let gens = g.generators();
        if g.is_finite() {
            return g.elements().ok()?.into_iter().skip(1).find(|x| gens.iter().all(|h| star.eval(x, h).is_zero()));
        }
        star.radical_witness()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degeneracy_witness().is_none()
    }

    /// The same cocycle in table form (finite groups only).
    pub fn to_table(&self) -> Result<Cocycle> {
        if let CocycleForm::Table(_) = self.form {
            return Ok(self.clone());
        }
        Self::from_fn(&self.group, |g, h| self.eval(g, h))
    }

    /// `mu(phi(g), phi(h))` as a cocycle on the source of `phi`.
    pub fn pullback(&self, phi: &AbHom) -> Result<Cocycle> {
        if phi.target() != &self.group {
            return Err(Error::GroupMismatch);
        }
        let src = phi.source();
        match &self.form {
            CocycleForm::Bichar(_) => {
                let imgs: Vec<AbElem> = (0..src.rank()).map(|j| phi.image_of_generator(j)).collect();
                let m = imgs.iter().map(|a| imgs.iter().map(|b| self.eval(a, b)).collect()).collect();
                Cocycle::bichar(src, m)
            }
            CocycleForm::Table(_) => Cocycle::from_fn(src, |g, h| self.eval(&phi.apply(g), &phi.apply(h))),
        }
    }

    /// Pointwise sum; bilinear when both summands are.
    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        match (&self.form, &other.form) {
            (CocycleForm::Bichar(a), CocycleForm::Bichar(b)) => {
                let m = a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| *x + *y).collect()).collect();
                Ok(Cocycle { group: self.group.clone(), form: CocycleForm::Bichar(m) })
            }
            _ => Cocycle::from_fn(&self.group, |g, h| self.eval(g, h) + other.eval(g, h)),
        }
    }

    /// Cocycle on the direct sum of two groups, `mu((g, g'), (h, h')) =
    /// mu_1(g, h) + mu_2(g', h')`. Both inputs must be bilinear or both finite.
    pub fn direct_sum(&self, other: &Cocycle) -> Result<Cocycle> {
        let group = self.group.direct_sum(&other.group);
        let (f1, f2) = (self.group.free_rank(), other.group.free_rank());
        let split = |x: &AbElem| -> (AbElem, AbElem) {
            let c = x.coords();
            let t1 = self.group.torsion().len();
            let mut a: Vec<i64> = c[..f1].to_vec();
            a.extend(&c[f1 + f2..f1 + f2 + t1]);
            let mut b: Vec<i64> = c[f1..f1 + f2].to_vec();
            b.extend(&c[f1 + f2 + t1..]);
            (AbElem(a), AbElem(b))
        };
        if let (CocycleForm::Bichar(_), CocycleForm::Bichar(_)) = (&self.form, &other.form) {
            let gens = group.generators();
            let m = gens
                .iter()
                .map(|x| {
                    gens.iter()
                        .map(|y| {
                            let ((x1, x2), (y1, y2)) = (split(x), split(y));
                            self.eval(&x1, &y1) + other.eval(&x2, &y2)
                        })
                        .collect()
                })
                .collect();
            return Cocycle::bichar(&group, m);
        }
        Cocycle::from_fn(&group, |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            self.eval(&x1, &y1) + other.eval(&x2, &y2)
        })
    }

    pub fn to_json(&self) -> Value {
        match &self.form {
            CocycleForm::Bichar(m) => json!({"kind": "bichar", "matrix": m}),
            CocycleForm::Table(t) => {
                let els = self.group.elements().expect("finite");
                let n = els.len();
                let mut entries = Vec::with_capacity(n * n);
                for (i, g) in els.iter().enumerate() {
                    for (j, h) in els.iter().enumerate() {
                        entries.push(json!([g, h, t[i * n + j]]));
                    }
                }
                json!({"kind": "table", "entries": entries})
            }
        }
    }

    /// Parses the JSON form. Errors carry the offending path relative to the
    /// cocycle object.
    pub fn from_json(value: &Value, group: &AbGroup) -> Result<Self> {
        let kind = value
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse("kind", "expected \"bichar\" or \"table\""))?;
        match kind {
            "bichar" => {
                let m: Vec<Vec<Phase>> = serde_json::from_value(value.get("matrix").cloned().unwrap_or(Value::Null))
                    .map_err(|e| Error::parse("matrix", e.to_string()))?;
                Cocycle::bichar(group, m)
            }
            "table" => {
                let entries: Vec<(Vec<i64>, Vec<i64>, Phase)> =
                    serde_json::from_value(value.get("entries").cloned().unwrap_or(Value::Null))
                        .map_err(|e| Error::parse("entries", e.to_string()))?;
                let Some(order) = group.order() else {
                    return Err(Error::Unsupported("table cocycle on an infinite group".into()));
                };
                let mut map = BTreeMap::new();
                for (k, (g, h, p)) in entries.into_iter().enumerate() {
                    let g = group.elem(g).map_err(|_| Error::parse(format!("entries[{k}][0]"), "wrong rank"))?;
                    let h = group.elem(h).map_err(|_| Error::parse(format!("entries[{k}][1]"), "wrong rank"))?;
                    let key = (group.index_of(&g), group.index_of(&h));
                    if map.insert(key, p).is_some_and(|old| old != p) {
                        return Err(Error::invalid(
                            Violation::Shape,
                            format!("entries[{k}]: conflicting value for {g:?}, {h:?}"),
                        ));
                    }
                }
                let n = order as usize;
                if map.len() != n * n {
                    return Err(Error::invalid(
                        Violation::Shape,
                        format!("table has {} of {} entries", map.len(), n * n),
                    ));
                }
                Cocycle::table(group, map.into_values().collect())
            }
            other => Err(Error::parse("kind", format!("unknown cocycle kind {other:?}"))),
        }
    }
}

pub(crate) fn bilinear(b: &[Vec<Phase>], g: &AbElem, h: &AbElem) -> Phase {
    let mut acc = Phase::ZERO;
    for (gi, row) in g.coords().iter().zip(b) {
        if *gi == 0 {
            continue;
        }
        for (bij, hj) in row.iter().zip(h.coords()) {
            if *hj != 0 && !bij.is_zero() {
                acc += bij.scale(gi * hj);
            }
        }
    }
    acc
}
