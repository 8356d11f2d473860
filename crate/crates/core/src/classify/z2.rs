//! Exact conjugacy for `H = Z²`.
//!
//! Every antisymmetric bicharacter on `Z²` is `s · det`, and a matrix `A`
//! pulls `s · det` back to `det(A) s · det`. The cocycle condition is
//! therefore `s_a = ±s_b`, the sign being `det(A)`.
//!
//! For the character condition write `w = L · 2χ` in `(Z/L)²` with `L`
//! clearing all denominators. `A` works iff `Aᵀ w_b = w_a (mod L)`. Both
//! `SL(2, Z)` and its `det = -1` coset act on `(Z/L)²` with orbits given by
//! `gcd(w_1, w_2, L)`, so the condition is `gcd(w_a, L) = gcd(w_b, L)`
//! whatever the sign. A witness is assembled from explicit integer lifts.

use num_integer::Integer;

use super::{Checks, ConjugacyReport, Verdict};
use crate::abelian::AbHom;
use crate::dynamics::Triplet;
use crate::scalars::Phase;

type M2 = [[i128; 2]; 2];

fn mul(a: &M2, b: &M2) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn inv(a: &M2) -> M2 {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

fn transpose(a: &M2) -> M2 {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

/// `s` with `μ*μ = s · det`.
fn star_scalar(t: &Triplet) -> Phase {
    let g = t.group();
    t.mu().star_bicharacter().eval(&g.generator(0), &g.generator(1))
}

/// `B ∈ SL(2, Z)` with `B (d, 0)ᵀ ≡ w (mod l)` where `d = gcd(w, l) < l`.
fn orbit_lift(w: [i128; 2], l: i128) -> M2 {
    let d = w[0].gcd(&w[1]).gcd(&l);
    let w0 = if w[0] == 0 { l } else { w[0] };
    let mut w1 = w[1];
    while w0.gcd(&w1) != d {
        w1 += l;
    }
    let (p, r) = (w0 / d, w1 / d);
    let e = p.extended_gcd(&r);
    debug_assert_eq!(e.gcd, 1);
    [[p, -e.y], [r, e.x]]
}

fn scaled(phases: &[Phase], l: i128) -> [i128; 2] {
    let f = |p: &Phase| p.num() as i128 * (l / p.den() as i128);
    [f(&phases[0]), f(&phases[1])]
}

pub(super) fn decide(ta: &Triplet, tb: &Triplet) -> ConjugacyReport {
    let (sa, sb) = (star_scalar(ta), star_scalar(tb));
    let sign = if sa == sb {
        Some(1)
    } else if sa == -sb {
        Some(-1)
    } else {
        None
    };
    let (ca, cb) = (ta.chi().pow(2), tb.chi().pow(2));
    let l = ca.phases().iter().chain(cb.phases()).fold(1i128, |acc, p| acc.lcm(&(p.den() as i128)));
    let (wa, wb) = (scaled(ca.phases(), l), scaled(cb.phases(), l));
    let orbit = |w: [i128; 2]| w[0].gcd(&w[1]).gcd(&l);
    let character = orbit(wa) == orbit(wb);
    let checks = Checks { cocycle: sign.is_some(), character };
    let witness = match (sign, character) {
        (Some(eps), true) => {
            let diag = [[1, 0], [0, eps]];
            let same = |v: [i128; 2]| (v[0] - wa[0]).rem_euclid(l) == 0 && (v[1] - wa[1]).rem_euclid(l) == 0;
            let at = if orbit(wa) == l || same([wb[0], eps * wb[1]]) {
                diag
            } else {
                let (ba, bb) = (orbit_lift(wa, l), orbit_lift(wb, l));
                mul(&mul(&ba, &diag), &inv(&bb))
            };
            let a = transpose(&at);
            let m: Vec<Vec<i64>> = a
                .iter()
                .map(|row| row.iter().map(|x| i64::try_from(*x).expect("witness entry fits i64")).collect())
                .collect();
            Some(AbHom::new(ta.group(), tb.group(), m).expect("unimodular"))
        }
        _ => None,
    };
    ConjugacyReport {
        verdict: if witness.is_some() { Verdict::Yes } else { Verdict::No },
        witness,
        checks,
        complete: true,
        method: "closed_form",
    }
}
