//! Smith normal form over the integers, with unimodular transforms.

pub(crate) type Mat = Vec<Vec<i128>>;

fn ck(x: Option<i128>) -> i128 {
    x.expect("integer overflow in Smith normal form")
}

/// Result of `u * a * v = d` with `d` diagonal (entries may be negative or
/// zero and are not forced into a divisibility chain).
pub(crate) struct Smith {
    pub diag: Vec<i128>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub u: Mat,
    pub v: Mat,
}

pub(crate) fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

// row_i <- row_i - q * row_j
fn row_axpy(m: &mut Mat, i: usize, j: usize, q: i128) {
    if q == 0 {
        return;
    }
    for c in 0..m[i].len() {
        m[i][c] = ck(m[i][c].checked_sub(ck(q.checked_mul(m[j][c]))));
    }
}

fn col_axpy(m: &mut Mat, i: usize, j: usize, q: i128) {
    if q == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[i] = ck(row[i].checked_sub(ck(q.checked_mul(row[j]))));
    }
}

fn swap_cols(m: &mut Mat, i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

pub(crate) fn smith(a: &Mat, cols: usize) -> Smith {
    let rows = a.len();
    let mut d = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry of the trailing block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            let q = d[i][t].div_euclid(d[t][t]);
            row_axpy(&mut d, i, t, q);
            row_axpy(&mut u, i, t, q);
            clean &= d[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = d[t][j].div_euclid(d[t][t]);
            col_axpy(&mut d, j, t, q);
            col_axpy(&mut v, j, t, q);
            clean &= d[t][j] == 0;
        }
        if clean {
            t += 1;
        }
    }
    let diag = (0..rows.min(cols)).map(|i| d[i][i]).collect();
    Smith { diag, u, v }
}

/// Generators of the integer kernel `{x : a x = 0}`.
pub(crate) fn kernel(a: &Mat, cols: usize) -> Vec<Vec<i128>> {
    let s = smith(a, cols);
    (0..cols).filter(|&j| j >= s.diag.len() || s.diag[j] == 0).map(|j| s.v.iter().map(|row| row[j]).collect()).collect()
}

/// Whether the columns of `a` generate all of `Z^rows`.
pub(crate) fn spans_lattice(a: &Mat, cols: usize) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let s = smith(a, cols);
    s.diag.len() == rows && s.diag.iter().all(|d| d.abs() == 1)
}

/// A solution of `a x = rhs` over `Z/m`, or `None` if the system is
/// inconsistent. `a` is diagonalized by invertible row and column operations
/// over `Z/m`; each diagonal equation `d y = c` is then solvable exactly when
/// `gcd(d, m)` divides `c`.
pub(crate) fn solve_mod(a: &[Vec<i64>], rhs: &[i64], m: i64) -> Option<Vec<i64>> {
    assert!(m >= 1);
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let md = |x: i128| x.rem_euclid(m as i128) as i64;
    let mut d: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| md(*x as i128)).collect()).collect();
    let mut c: Vec<i64> = rhs.iter().map(|x| md(*x as i128)).collect();
    let mut v: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in d.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if *x != 0 && best.is_none_or(|(bi, bj)| *x < d[bi][bj]) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        c.swap(t, pi);
        for row in d.iter_mut().chain(v.iter_mut()) {
            row.swap(t, pj);
        }
        let p = d[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = d[i][t] / p;
            if q != 0 {
                #[allow(clippy::needless_range_loop)]
                for j in t..cols {
                    d[i][j] = md(d[i][j] as i128 - q as i128 * d[t][j] as i128);
                }
                c[i] = md(c[i] as i128 - q as i128 * c[t] as i128);
            }
            clean &= d[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = d[t][j] / p;
            if q != 0 {
                for row in d.iter_mut().chain(v.iter_mut()) {
                    row[j] = md(row[j] as i128 - q as i128 * row[t] as i128);
                }
            }
            clean &= d[t][j] == 0;
        }
        if clean {
            t += 1;
        }
    }
    if c[t..].iter().any(|x| *x != 0) {
        return None;
    }
    let mut y = vec![0i64; cols];
    for i in 0..t {
        let g = gcd(d[i][i], m);
        if c[i] % g != 0 {
            return None;
        }
        let mg = m / g;
        let inv = mod_inverse((d[i][i] / g).rem_euclid(mg), mg);
        y[i] = md((c[i] / g) as i128 * inv as i128 % mg as i128);
    }
    Some((0..cols).map(|i| md((0..cols).map(|j| v[i][j] as i128 * y[j] as i128).sum())).collect())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (a as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    s0.rem_euclid(m as i128) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &Mat, b: &Mat) -> Mat {
        let n = b.first().map_or(0, Vec::len);
        a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect()).collect()
    }

    #[test]
    fn transforms_diagonalize() {
        let a: Mat = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith(&a, 3);
        let d = mul(&mul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    assert_eq!(*x, 0);
                }
            }
        }
        let mut prod: i128 = s.diag.iter().product();
        prod = prod.abs();
        assert_eq!(prod, 2 * 6 * 12);
    }

    #[test]
    fn modular_solve() {
        // 2x = 1 mod 4 has no solution, 2x = 2 mod 4 does.
        assert!(solve_mod(&[vec![2]], &[1], 4).is_none());
        let x = solve_mod(&[vec![2]], &[2], 4).unwrap();
        assert_eq!((2 * x[0]).rem_euclid(4), 2);
        // Coupled system over Z/6.
        let a = vec![vec![2, 3], vec![4, 1], vec![0, 5]];
        let x0 = [5i64, 4];
        let rhs: Vec<i64> = a.iter().map(|r| (r[0] * x0[0] + r[1] * x0[1]).rem_euclid(6)).collect();
        let x = solve_mod(&a, &rhs, 6).unwrap();
        for (r, b) in a.iter().zip(&rhs) {
            assert_eq!((r[0] * x[0] + r[1] * x[1]).rem_euclid(6), *b);
        }
        // Rows that reduce to zero need a zero right-hand side.
        assert!(solve_mod(&[vec![1], vec![1]], &[1, 2], 5).is_none());
    }

    #[test]
    fn kernel_and_span() {
        let a: Mat = vec![vec![1, 2, 3]];
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert_eq!(x[0] + 2 * x[1] + 3 * x[2], 0);
        }
        assert!(spans_lattice(&vec![vec![2, 3]], 2));
        assert!(!spans_lattice(&vec![vec![2, 4]], 2));
        assert!(spans_lattice(&vec![vec![1, 1], vec![0, 1]], 2));
    }
}
