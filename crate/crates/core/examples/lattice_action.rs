//! The affine action of Z² ⋊ SL(2, Z) on the lattice and on finitely
//! supported H-valued functions.

use std::sync::Arc;

use tbshift::abelian::AbGroup;
use tbshift::lambda::lambda_h;
use tbshift::lattice::{constants, det2, gcd2, LatticePoint};

fn main() {
    let c = constants();
    let orbit: Vec<_> = std::iter::successors(Some(LatticePoint::zero()), |k| Some(c.xi.act(k))).take(4).collect();
    println!("xi cycles 0 -> e1 -> e2 -> 0: {orbit:?}");

    let (k, k0) = (LatticePoint::new(4, 6), LatticePoint::new(-3, 5));
    let parity = det2(&k, &k0) - (gcd2(&k) + gcd2(&k0) - gcd2(&(&k + &k0)));
    println!("det minus the gcd combination is even: {}", &parity % 2 == 0.into());

    let g = Arc::new(AbGroup::cyclic_power(3, 2));
    let lam = lambda_h(&g, &g.generator(0));
    println!("lambda_h = {}", lam.to_json());
    println!("xi . lambda_h = {}", lam.act(&c.xi).to_json());
    println!("delta fixes it: {}", lam.act(&tbshift::lattice::AffineSL2::linear(c.delta)) == lam);
}
