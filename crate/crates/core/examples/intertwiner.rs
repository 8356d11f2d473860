//! Building the intertwiner for an admissible group isomorphism and checking
//! it exactly, including a mutation that must be caught.

use tbshift::abelian::AbHom;
use tbshift::catalog::triplet_q;
use tbshift::classify::{build_pi, verify_pi, PiSamples};
use tbshift::dynamics::Triplet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = triplet_q(3);
    let phi = AbHom::new(t.group(), t.group(), vec![vec![1, 0], vec![1, 1]])?;
    let pi = build_pi(&t, &t, &phi)?;
    let report = verify_pi(&pi, &PiSamples::random(&t, 7, 30, 2, 10))?;
    println!("unipotent map on q = 3: ok = {} after {} checks", report.ok, report.checked);

    // c_φ takes the value 1/2 here, so the gcd weights matter.
    let four = triplet_q(4);
    let other = Triplet::new(four.mu().clone(), four.chi().pow(3))?;
    let id = AbHom::new(four.group(), other.group(), vec![vec![1, 0], vec![0, 1]])?;
    let pi = build_pi(&four, &other, &id)?;
    let samples = PiSamples::random(&four, 8, 20, 2, 3);
    println!("q = 4, chi vs chi^3: ok = {}", verify_pi(&pi, &samples)?.ok);
    let mutated = verify_pi(&pi.without_gcd_weights(), &samples)?;
    println!("without gcd weights: ok = {}, first failure {:?}", mutated.ok, mutated.counterexamples.first());
    Ok(())
}
