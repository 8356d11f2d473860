use serde::Serialize;

use crate::error::{Error, Result};

/// Isomorphism type of a finite group given as an explicit element list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupStructure {
    pub order: usize,
    pub abelian: bool,
    /// Invariant factors `d_1 | d_2 | ...`, empty for trivial or nonabelian groups.
    pub invariant_factors: Vec<u64>,
    pub structure: String,
}

impl GroupStructure {
    pub fn is_cyclic(&self) -> bool {
        self.abelian && self.invariant_factors.len() <= 1
    }
}

/// Determines the structure of the group formed by `elems` under `compose`.
///
/// The list must contain an identity and be closed under composition and
/// inverses; otherwise the offending pair (or element) is reported. For
/// abelian groups the invariant factors are read off the counts
/// `#{x : x^(p^k) = e}` for each prime `p` dividing the order.
pub fn group_structure<T, F>(elems: &[T], compose: F) -> Result<GroupStructure>
where
    T: PartialEq + Clone + std::fmt::Debug,
    F: Fn(&T, &T) -> T,
{
    let n = elems.len();
    if n == 0 {
        return Err(Error::NotClosed("empty element list".into()));
    }
    let position = |x: &T| elems.iter().position(|y| y == x);
    let mut table = vec![vec![0usize; n]; n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let c = compose(a, b);
            table[i][j] = position(&c).ok_or_else(|| Error::NotClosed(format!("{a:?} * {b:?} = {c:?} is missing")))?;
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotClosed("no identity element".into()))?;
    for (i, row) in table.iter().enumerate() {
        if !row.contains(&identity) {
            return Err(Error::NotClosed(format!("{:?} has no inverse", elems[i])));
        }
    }
    let abelian = (0..n).all(|i| (0..i).all(|j| table[i][j] == table[j][i]));
    if !abelian {
        return Ok(GroupStructure {
            order: n,
            abelian,
            invariant_factors: Vec::new(),
            structure: format!("nonabelian of order {n}"),
        });
    }
    let orders: Vec<u64> = (0..n)
        .map(|x| {
            let (mut y, mut k) = (x, 1u64);
            while y != identity {
                y = table[y][x];
                k += 1;
            }
            k
        })
        .collect();
    let invariant_factors = invariant_factors(n as u64, &orders);
    let structure = if invariant_factors.is_empty() {
        "trivial".to_string()
    } else {
        invariant_factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x ")
    };
    Ok(GroupStructure { order: n, abelian, invariant_factors, structure })
}

fn primes_of(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Invariant factors of an abelian group from the orders of its elements.
fn invariant_factors(order: u64, elem_orders: &[u64]) -> Vec<u64> {
    // For each prime, the exponents a_i of the p-primary cyclic factors,
    // sorted descending.
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in primes_of(order) {
        let count = |k: u32| -> u64 {
            let pk = p.pow(k);
            elem_orders.iter().filter(|o| pk % **o == 0).count() as u64
        };
        let mut exps = Vec::new();
        let mut k = 1;
        let mut prev = 1u64;
        loop {
            let cur = count(k);
            if cur == prev {
                break;
            }
            // Number of factors with exponent >= k.
            let ratio = cur / prev;
            let m = ratio.ilog(p);
            exps.push(m);
            prev = cur;
            k += 1;
        }
        // exps[k-1] = #{i : a_i >= k}; convert to the a_i themselves.
        let num = exps.first().copied().unwrap_or(0) as usize;
        let mut a = vec![0u32; num];
        for m in exps {
            for x in a.iter_mut().take(m as usize) {
                *x += 1;
            }
        }
        primary.push((p, a));
    }
    let len = primary.iter().map(|(_, a)| a.len()).max().unwrap_or(0);
    // Largest factor last: combine the i-th largest p-powers across primes.
    let mut factors: Vec<u64> =
        (0..len).map(|i| primary.iter().map(|(p, a)| a.get(i).map_or(1, |e| p.pow(*e))).product()).collect();
    factors.reverse();
    factors
}
