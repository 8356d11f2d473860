use num_integer::Integer;

use super::Cocycle;
use crate::abelian::AbGroup;
use crate::error::{Error, Result};
use crate::scalars::Phase;
use crate::snf;

/// Largest group order accepted by [`coboundary_witness`].
pub const WITNESS_MAX_ORDER: u64 = 64;

/// The coboundary `nu(g, h) = b(g) + b(h) - b(g + h)` of a function given by
/// its values in element order, with `b(0)` ignored (treated as 0).
pub fn coboundary_of(group: &AbGroup, b: &[Phase]) -> Result<Cocycle> {
    let at = |g: &crate::abelian::AbElem| {
        if g.is_zero() {
            Phase::ZERO
        } else {
            b[group.index_of(g)]
        }
    };
    Cocycle::from_fn(group, |g, h| at(g) + at(h) - at(&group.add(g, h)))
}

/// A function `b` with `mu1 - mu2 = b(g) + b(h) - b(g + h)`, by brute-force
/// linear algebra over `Z/M`; `None` if no such function exists.
///
/// The values of `mu1 - mu2` lie in `(1/L)Z/Z`. Any solution can be shifted by
/// a character into `(1/(L e))Z/Z` with `e` the exponent of the group, so
/// solving over `Z/(L e)` is exhaustive. This deliberately does not use the
/// commutator criterion, so it serves as an independent check of it.
pub fn coboundary_witness(mu1: &Cocycle, mu2: &Cocycle) -> Result<Option<Vec<Phase>>> {
    let g = mu1.group();
    if g != mu2.group() {
        return Err(Error::GroupMismatch);
    }
    let Some(order) = g.order() else {
        return Err(Error::Unsupported("coboundary search on an infinite group".into()));
    };
    if order > WITNESS_MAX_ORDER {
        return Err(Error::Unsupported(format!("coboundary search limited to order {WITNESS_MAX_ORDER}")));
    }
    let els = g.elements()?;
    let n = els.len();
    let nu: Vec<Vec<Phase>> =
        els.iter().map(|a| els.iter().map(|b| mu1.eval(a, b) - mu2.eval(a, b)).collect()).collect();
    let l = nu.iter().flatten().fold(1u64, |acc, p| acc.lcm(&p.den()));
    let m = (l * g.exponent().unwrap()) as i64;
    // Unknowns x_1..x_{n-1} for b(g) = x_g / M; b(0) = 0.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let k = g.index_of(&g.add(&els[i], &els[j]));
            let mut row = vec![0i64; n - 1];
            row[i - 1] += 1;
            row[j - 1] += 1;
            if k != 0 {
                row[k - 1] -= 1;
            }
            let p = nu[i][j];
            rows.push(row);
            rhs.push(p.num() as i64 * (m / p.den() as i64));
        }
    }
    let Some(x) = snf::solve_mod(&rows, &rhs, m) else {
        return Ok(None);
    };
    let mut b = vec![Phase::ZERO];
    b.extend(x.iter().map(|v| Phase::new(*v, m)));
    Ok(Some(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbElem;

    #[test]
    fn witness_examples() {
        let g = AbGroup::cyclic_power(3, 2);
        let mu = Cocycle::bichar(&g, vec![vec![Phase::ZERO, Phase::new(1, 3)], vec![Phase::ZERO; 2]]).unwrap();
        let b = coboundary_witness(&mu, &mu).unwrap().unwrap();
        assert!(b.iter().all(Phase::is_zero));
        assert!(coboundary_witness(&mu, &Cocycle::trivial(&g)).unwrap().is_none());

        let b0: Vec<Phase> = (0..9).map(|i| Phase::new(i * i, 7)).collect();
        let nu = coboundary_of(&g, &b0).unwrap();
        let triv = Cocycle::trivial(&g);
        let b = coboundary_witness(&nu, &triv).unwrap().unwrap();
        let rebuilt = coboundary_of(&g, &b).unwrap();
        for x in g.elements().unwrap() {
            for y in g.elements().unwrap() {
                assert_eq!(rebuilt.eval(&x, &y), nu.eval(&x, &y));
            }
        }
    }

    #[test]
    fn finer_denominators_are_reachable() {
        // On Z/2, b(1) = 1/4 gives nu(1,1) = 1/2: a coboundary whose
        // witness needs denominator 4.
        let g = AbGroup::cyclic_power(2, 1);
        let nu = coboundary_of(&g, &[Phase::ZERO, Phase::new(1, 4)]).unwrap();
        assert_eq!(nu.eval(&AbElem(vec![1]), &AbElem(vec![1])), Phase::HALF);
        assert!(coboundary_witness(&nu, &Cocycle::trivial(&g)).unwrap().is_some());
    }

    #[test]
    fn rejects_large_groups() {
        let g = AbGroup::cyclic_power(9, 2);
        let t = Cocycle::trivial(&g);
        assert!(matches!(coboundary_witness(&t, &t), Err(Error::Unsupported(_))));
    }
}
