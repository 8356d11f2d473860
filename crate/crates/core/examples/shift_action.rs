//! The twisted Bernoulli shift: the group Γ₀, the operators ρ and β, and
//! an exact weak-mixing witness.

use tbshift::catalog::triplet_q;
use tbshift::dynamics::{beta_apply, gamma0_mul, lambda_unitary, weak_mixing_witness, Gamma0Elem};
use tbshift::lattice::{constants, AffineSL2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = triplet_q(3);
    let c = constants();
    let a = Gamma0Elem::from_affine(&t, &AffineSL2::translation(c.e1.clone()));
    let b = Gamma0Elem::from_affine(&t, &AffineSL2::translation(c.e2.clone()));
    let ab = gamma0_mul(&t, &a, &b)?;
    println!("(1, e1, I)(1, e2, I) has character {:?} and translation {:?}", ab.c.phases(), ab.k);

    let h = t.group().generator(0);
    let x = lambda_unitary(&t, &h);
    println!("beta(xi) u(lambda_h) = {}", beta_apply(&t, &c.xi, &x)?.to_json());

    let elems = vec![x.clone(), x.star()];
    let k = weak_mixing_witness(&t, &elems)?;
    println!("weak mixing witness for {{x, x*}}: {k:?}");
    Ok(())
}
