//! Centralizer group data for the standard triplets.

use tbshift::abelian::{AbGroup, Character};
use tbshift::catalog::{product_triplet, triplet_q, untwisted_with};
use tbshift::classify::centralizer;
use tbshift::Phase;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for q in [3, 5, 7] {
        let r = centralizer(&triplet_q(q), None)?;
        println!("q = {q}: order {:?}, {}", r.order, r.structure.unwrap_or_default());
    }
    let r = centralizer(&product_triplet(&[3, 5])?, None)?;
    println!("q in {{3, 5}}: order {:?}, {}", r.order, r.structure.unwrap_or_default());

    let h = AbGroup::new(1, vec![5])?;
    let chi = Character::new(&h, vec![Phase::new(1, 5), Phase::ZERO])?;
    let r = centralizer(&untwisted_with(chi)?, None)?;
    println!("Z + Z/5 with a character on Z: order {:?}, {}", r.order, r.structure.unwrap_or_default());
    Ok(())
}
