//! The malleability flow on the tensor square of a finite twisted group
//! algebra, checked exactly.

use num_rational::Ratio;
use tbshift::algebra::{verify_flow, AlgebraBase, MalleabilityFlow, TensorElem};
use tbshift::catalog::mu_q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = AlgebraBase::new(mu_q(3));
    let flow = MalleabilityFlow::new(&base)?;
    println!("V has {} terms, |H|^(1/2) = {}", flow.v().len(), flow.sqrt_order());

    let g = base.group().generator(0);
    let x = TensorElem::basis(&base, g.clone(), base.group().zero());
    let swapped = flow.apply(Ratio::from_integer(1), &x)?;
    println!("alpha_1(u_g (x) 1) = {}", swapped.to_json());
    println!("alpha_1/2(u_g (x) 1) has {} terms", flow.apply(Ratio::new(1, 2), &x)?.len());

    let r = verify_flow(&base, 1, 10)?;
    println!("flow checks: ok = {} after {} checks", r.ok, r.checked);
    Ok(())
}
