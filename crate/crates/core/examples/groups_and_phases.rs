//! Phases, cyclotomic numbers and finite abelian groups with their
//! automorphisms.

use tbshift::abelian::{enumerate_automorphisms, group_structure, AbGroup};
use tbshift::{Cyclotomic, Phase};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Phase::new(5, 12) + Phase::new(3, 4);
    println!("5/12 + 3/4 = {p} in Q/Z");

    // ζ_3 + ζ_3² = -1 exactly.
    let z = Cyclotomic::from_phase(Phase::new(1, 3));
    let sum = z.add(&z.mul(&z));
    println!("zeta_3 + zeta_3^2 is -1: {}", sum == Cyclotomic::from_integer(-1));

    let g = AbGroup::new(0, vec![2, 4])?;
    let auts = enumerate_automorphisms(&g)?;
    let s = group_structure(&auts, |a, b| a.compose(b).expect("same group"))?;
    println!("Aut({g}) has order {} and is {}", auts.len(), s.structure);
    Ok(())
}
