use serde::Serialize;

use super::{AbElem, AbGroup, AbHom};
use crate::error::{Error, Result};

/// Isomorphisms found by a search, and whether the search was exhaustive.
#[derive(Clone, Debug, Serialize)]
pub struct Isomorphisms {
    pub maps: Vec<AbHom>,
    pub complete: bool,
}

/// Every automorphism of a finite group, in lexicographic order of the
/// generator images.
pub fn enumerate_automorphisms(g: &AbGroup) -> Result<Vec<AbHom>> {
    if !g.is_finite() {
        return Err(Error::Unsupported(
            "automorphisms of a group with free part; use a bounded isomorphism search".into(),
        ));
    }
    Ok(enumerate_isomorphisms(g, g, None)?.maps)
}

/// Isomorphisms `ga -> gb`.
///
/// For finite groups the list is complete. With a free part, the search is
/// limited to free-coordinate images of absolute value at most `bound`, and
/// `complete` is false unless the groups are provably non-isomorphic or the
/// free rank is one.
pub fn enumerate_isomorphisms(ga: &AbGroup, gb: &AbGroup, bound: Option<u64>) -> Result<Isomorphisms> {
    if !ga.is_isomorphic_to(gb) {
        return Ok(Isomorphisms { maps: Vec::new(), complete: true });
    }
    if ga.is_finite() {
        let candidates: Vec<Vec<AbElem>> =
            (0..ga.rank()).map(|j| gb.elements_killed_by(ga.generator_order(j))).collect::<Result<_>>()?;
        let maps = product(&candidates)
            .filter(|imgs| finite_bijective(ga, gb, imgs))
            .map(|imgs| AbHom::from_images(ga, gb, &imgs).expect("orders respected"))
            .collect();
        return Ok(Isomorphisms { maps, complete: true });
    }
    let Some(bound) = bound else {
        return Err(Error::Unsupported("isomorphism search over a free part needs a bound".into()));
    };
    let b = bound as i64;
    let torsion_part = AbGroup::new(0, gb.torsion().to_vec())?;
    let fb = gb.free_rank();
    let free_coords = product(&vec![(-b..=b).collect::<Vec<i64>>(); fb]).collect::<Vec<_>>();
    let candidates: Vec<Vec<AbElem>> = (0..ga.rank())
        .map(|j| -> Result<Vec<AbElem>> {
            let order = ga.generator_order(j);
            let tors = torsion_part.elements_killed_by(order)?;
            let frees: Vec<Vec<i64>> = match order {
                Some(_) => vec![vec![0; fb]],
                None => free_coords.clone(),
            };
            Ok(frees
                .iter()
                .flat_map(|f| {
                    tors.iter().map(move |t| {
                        let mut v = f.clone();
                        v.extend(&t.0);
                        AbElem(v)
                    })
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let maps = product(&candidates)
        .map(|imgs| AbHom::from_images(ga, gb, &imgs).expect("orders respected"))
        .filter(AbHom::is_isomorphism)
        .collect();
    // A free generator of a rank-one free part must go to ±1 plus torsion,
    // so a bound of 1 already covers everything.
    Ok(Isomorphisms { maps, complete: fb == 1 && b >= 1 })
}

/// Lexicographic cartesian product, first factor most significant.
fn product<T: Clone>(factors: &[Vec<T>]) -> impl Iterator<Item = Vec<T>> + '_ {
    let empty = factors.iter().any(Vec::is_empty);
    let mut idx = vec![0usize; factors.len()];
    let mut done = empty;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item = idx.iter().zip(factors).map(|(i, f)| f[*i].clone()).collect();
        done = true;
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        Some(item)
    })
}

// Injectivity of the map sending generator j to images[j], for equal-order
// finite groups. Walks the source elements and stops at the first collision.
fn finite_bijective(ga: &AbGroup, gb: &AbGroup, images: &[AbElem]) -> bool {
    let order = ga.order().unwrap() as usize;
    let rb = gb.rank();
    let tb: Vec<i64> = gb.torsion().iter().map(|n| *n as i64).collect();
    let mut seen = vec![false; order];
    let mut coords = vec![0i64; ga.rank()];
    let mut img = vec![0i64; rb];
    for _ in 0..order {
        img.iter_mut().for_each(|x| *x = 0);
        for (c, im) in coords.iter().zip(images) {
            if *c != 0 {
                for (x, y) in img.iter_mut().zip(&im.0) {
                    *x += c * y;
                }
            }
        }
        let idx = img.iter().zip(&tb).fold(0i64, |acc, (x, n)| acc * n + x.rem_euclid(*n)) as usize;
        if std::mem::replace(&mut seen[idx], true) {
            return false;
        }
        for (c, n) in coords.iter_mut().zip(ga.torsion()).rev() {
            *c += 1;
            if *c < *n as i64 {
                break;
            }
            *c = 0;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_counts() {
        let z3 = AbGroup::cyclic_power(3, 1);
        assert_eq!(enumerate_automorphisms(&z3).unwrap().len(), 2);
        let z3sq = AbGroup::cyclic_power(3, 2);
        assert_eq!(enumerate_automorphisms(&z3sq).unwrap().len(), (9 - 1) * (9 - 3));
        let z24 = AbGroup::new(0, vec![2, 4]).unwrap();
        assert_eq!(enumerate_automorphisms(&z24).unwrap().len(), 8);
        assert!(enumerate_automorphisms(&AbGroup::free(1)).is_err());
    }

    #[test]
    fn gl2_order_formula() {
        for q in [2u64, 3, 5] {
            let g = AbGroup::cyclic_power(q, 2);
            let expected = (q * q - 1) * (q * q - q);
            assert_eq!(enumerate_automorphisms(&g).unwrap().len() as u64, expected);
        }
    }

    #[test]
    fn automorphisms_are_closed_group() {
        for g in [
            AbGroup::new(0, vec![2, 4]).unwrap(),
            AbGroup::new(0, vec![6]).unwrap(),
            AbGroup::new(0, vec![2, 2, 2]).unwrap(),
            AbGroup::cyclic_power(3, 2),
        ] {
            let auts = enumerate_automorphisms(&g).unwrap();
            let id = AbHom::identity(&g);
            assert!(auts.contains(&id));
            for a in &auts {
                assert!(a.is_isomorphism());
                assert!(auts.contains(&a.inverse().unwrap()));
                for b in auts.iter().step_by(3) {
                    assert!(auts.contains(&a.compose(b).unwrap()));
                }
            }
            let mut dedup = auts.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), auts.len());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let a = AbGroup::cyclic_power(3, 2);
        let b = AbGroup::cyclic_power(5, 2);
        let r = enumerate_isomorphisms(&a, &b, None).unwrap();
        assert!(r.maps.is_empty() && r.complete);
        let z3 = AbGroup::cyclic_power(3, 1);
        assert_eq!(enumerate_isomorphisms(&z3, &z3, None).unwrap().maps.len(), 2);

        let z2 = AbGroup::free(2);
        let r = enumerate_isomorphisms(&z2, &z2, Some(1)).unwrap();
        assert!(!r.complete);
        let signed_perms = [
            [[1, 0], [0, 1]],
            [[-1, 0], [0, 1]],
            [[1, 0], [0, -1]],
            [[-1, 0], [0, -1]],
            [[0, 1], [1, 0]],
            [[0, -1], [1, 0]],
            [[0, 1], [-1, 0]],
            [[0, -1], [-1, 0]],
        ];
        for m in signed_perms {
            let m: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
            assert!(r.maps.iter().any(|f| f.matrix() == m.as_slice()));
        }
        // Entries in {-1, 0, 1} with |det| = 1.
        let brute = product(&vec![vec![-1i64, 0, 1]; 4]).filter(|v| (v[0] * v[3] - v[1] * v[2]).abs() == 1).count();
        assert_eq!(r.maps.len(), brute);
        assert!(enumerate_isomorphisms(&z2, &z2, None).is_err());
    }

    #[test]
    fn mixed_free_torsion_search() {
        let g = AbGroup::new(1, vec![2]).unwrap();
        let r = enumerate_isomorphisms(&g, &g, Some(1)).unwrap();
        // x -> ±x + t*tor, tor -> tor
        assert_eq!(r.maps.len(), 4);
        assert!(r.complete);
        let h = AbGroup::new(1, vec![3]).unwrap();
        let r = enumerate_isomorphisms(&g, &h, Some(2)).unwrap();
        assert!(r.maps.is_empty() && r.complete);
    }
}
