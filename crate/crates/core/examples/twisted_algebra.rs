//! Exact arithmetic in the twisted group algebra over Λ(H).

use tbshift::algebra::{AlgElem, AlgebraBase};
use tbshift::catalog::mu_q;
use tbshift::lambda::{lambda_h, mu_hat};
use tbshift::Cyclotomic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = AlgebraBase::new(mu_q(3));
    let g = base.group().clone();
    let (a, b) = (lambda_h(&g, &g.generator(0)), lambda_h(&g, &g.generator(1)));
    let (ua, ub) = (AlgElem::unitary(&base, a.clone()), AlgElem::unitary(&base, b));

    let commutator = ua.mul(&ub)?.mul(&ua.star())?.mul(&ub.star())?;
    println!("u_a u_b u_a* u_b* = {}", commutator.to_json());

    let x = ua.add(&ub.scale(&Cyclotomic::from_integer(2)))?;
    println!("tr(x* x) = {:?}", x.star().mul(&x)?.trace().to_rational());
    println!("mu_hat(lambda_a) = {}", mu_hat(base.cocycle(), &a));
    Ok(())
}
