//! 2-cocycles: the commutator bicharacter, cohomology classes decided two
//! independent ways, and nondegeneracy.

use tbshift::catalog::{mu_q, mu_theta};
use tbshift::cocycle::{coboundary_of, coboundary_witness, Cocycle};
use tbshift::Phase;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mu = mu_q(3);
    let g = mu.group().clone();
    println!("mu_3*mu_3 = {}", mu.star_bicharacter().to_json());

    // Perturb by a coboundary: the class does not change.
    let b: Vec<Phase> = (0..9).map(|i| Phase::new(i * i, 7)).collect();
    let nu = mu.add(&coboundary_of(&g, &b)?)?.to_table()?;
    println!("cohomologous by the commutator test: {}", mu.cohomologous(&nu)?);
    println!("coboundary found by linear algebra: {}", coboundary_witness(&mu, &nu)?.is_some());
    println!("mu_3 vs trivial: {}", mu.cohomologous(&Cocycle::trivial(&g))?);

    println!("mu_3 nondegenerate: {}", mu.is_nondegenerate());
    let rot = mu_theta(Phase::new(1, 16));
    println!("theta = 1/16 on Z^2 has radical witness {:?}", rot.degeneracy_witness());
    Ok(())
}
